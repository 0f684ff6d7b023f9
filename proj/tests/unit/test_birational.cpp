#include <algorithm>

#include "classes.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "wfatlas/birational.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/intersection.hpp"
#include "wfatlas/isomorphism.hpp"

using namespace wfatlas;
using fixtures::v;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

const PrimitiveRelation& relation(const Fan& f, const IndexSet& p) {
  for (const auto& r : f.primitive_relations())
    if (r.collection == p) return r;
  FAIL("missing primitive collection " << to_string(p));
  throw;
}

// Cones of dimension ≥ 2 of a fan.
std::vector<IndexSet> faces(const Fan& f) {
  std::set<IndexSet> out;
  for (RayMask m : f.max_cone_masks())
    for (RayMask s = m; s != 0; s = (s - 1) & m)
      if (std::popcount(s) >= 2) out.insert(from_mask(s));
  return {out.begin(), out.end()};
}

std::vector<Fan> smooth_classes(int d) {
  auto out = fixtures::rank2_classes(d);
  for (const auto& f : fixtures::rank3_classes(d)) out.push_back(f);
  return out;
}

template <typename Params>
std::vector<Candidate<Params>> deduped(const std::vector<Candidate<Params>>& cs) {
  std::vector<Fan> fans;
  for (const auto& c : cs) fans.push_back(c.fan);
  std::vector<Candidate<Params>> out;
  for (std::size_t i : dedupe_indices(fans)) out.push_back(cs[i]);
  return out;
}

int group_of(const std::vector<IndexSet>& groups, int ray) {
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (std::find(groups[g].begin(), groups[g].end(), ray) != groups[g].end()) return static_cast<int>(g);
  return -1;
}

}  // namespace

TEST_CASE("star subdivision of P^2 at a point") {
  const Fan f = star_subdivision(fixtures::p2(), {0, 1});
  CHECK(f.num_rays() == 4);
  CHECK(f.ray(3) == v({1, 1}));
  CHECK(f.max_cones().size() == 4);
  CHECK(f.is_smooth());
  CHECK(f.is_complete());
}

TEST_CASE("star subdivision of the non-projective fan") {
  const Fan s1 = fixtures::sigma1();
  const Fan f = star_subdivision(s1, {2, 6}, v({-1, 0, 0}));
  CHECK(f.num_rays() == 8);
  CHECK(f.max_cones().size() == s1.max_cones().size() + 2);
  CHECK(f.is_complete());
}

TEST_CASE("star subdivision of a smooth 2-cone adds one ray and one cone") {
  const Fan ex = fixtures::ex23();
  for (const auto& cone : ex.max_cones()) {
    const Fan f = star_subdivision(ex, cone);
    CHECK(f.num_rays() == ex.num_rays() + 1);
    CHECK(f.max_cones().size() == ex.max_cones().size() + 1);
  }
}

TEST_CASE("star subdivision rejects bad input") {
  const Fan p2 = fixtures::p2();
  const Fan p1xp1 = fixtures::p1xp1();
  CHECK_THROWS_AS(star_subdivision(p1xp1, {0, 2}), Error);
  CHECK_THROWS_AS(star_subdivision(p2, {0, 1}, v({1, 0})), Error);
  CHECK_THROWS_AS(star_subdivision(p2, {0, 1}, v({2, 2})), Error);
  CHECK_THROWS_AS(star_subdivision(p2, {0, 1}, v({1, -1})), Error);
  CHECK_THROWS_AS(star_subdivision(p2, {0}), Error);
  // (1,2) lies inside Cone(e1, e2) and is primitive.
  CHECK(star_subdivision(p2, {0, 1}, v({1, 2})).num_rays() == 4);
}

TEST_CASE("blowdown of the point blowup of P^3") {
  const Fan f = kleinschmidt({3, {1}});
  const auto b = blowdown(f, {2, 3, 4});
  CHECK(b.regular);
  CHECK(b.multiplicity == 1);
  CHECK(b.ray == 1);
  CHECK(are_isomorphic(b.result, fixtures::p3()));
  CHECK(equal_up_to_reindexing(star_subdivision(b.result, {1, 2, 3}, f.ray(1)), f));
}

TEST_CASE("non-regular blowdown to a weighted projective space") {
  const auto b = blowdown(kleinschmidt({3, {2}}), {2, 3, 4});
  CHECK_FALSE(b.regular);
  CHECK(b.multiplicity == 2);
  CHECK_FALSE(b.result.is_smooth());
  CHECK(b.result.is_complete());
  const auto w = weighted_projective_weights(b.result);
  CHECK(w == ints({1, 1, 1, 2}));
  CHECK_FALSE(gorenstein_fano_wps(w));
}

TEST_CASE("no blowdown when the relation sums to zero") {
  const Fan f = projective_bundle({2, {0}, {{0, 0}}});
  REQUIRE(relation(f, {4, 5}).sigma.empty());
  try {
    blowdown(f, {4, 5});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("no blowdown along") == 0);
  }
  CHECK_THROWS_AS(blowdown(f, {0, 4}), Error);
}

TEST_CASE("weighted projective weights and the Gorenstein test") {
  CHECK(weighted_projective_weights(fixtures::p2()) == ints({1, 1, 1}));
  CHECK(weighted_projective_weights(fixtures::p112()) == ints({1, 1, 2}));
  CHECK(weighted_projective_weights(fixtures::p3()) == ints({1, 1, 1, 1}));
  CHECK(gorenstein_fano_wps(ints({1, 1, 1, 1})));
  CHECK(gorenstein_fano_wps(ints({1, 1, 2, 2, 2})));
  CHECK(gorenstein_fano_wps(ints({1, 1, 1, 3})));
  CHECK_FALSE(gorenstein_fano_wps(ints({1, 1, 1, 2})));
  CHECK_THROWS_AS(weighted_projective_weights(fixtures::p1xp1()), Error);
}

TEST_CASE("4.PB-33 flops to 4.BC-19") {
  const Fan pb33 = projective_bundle({2, {1}, {{0, -1}, {1, -1}}});
  const auto m = flop(pb33, {2, 3});
  CHECK(m.targets.size() == 2);
  CHECK(m.intermediate.num_rays() == pb33.num_rays() + 1);
  CHECK(are_isomorphic(m.result, batyrev({{1, 2, 2, 1, 1}, {0}, {1}})));
  CHECK(m.result.primitive_collections().size() == 5);
  // Subdividing the result along the image of P gives back the intermediate fan.
  CHECK(equal_up_to_reindexing(star_subdivision(m.result, {2, 3}), m.intermediate));
}

TEST_CASE("formal flop of the non-projective fan") {
  const Fan s1 = fixtures::sigma1();
  CHECK(s1.primitive_collections().size() == 9);
  const auto m = flop(s1, {3, 5}, true);
  CHECK(m.result.primitive_collections().size() == 7);
  CHECK(are_isomorphic(m.result, fixtures::sigma2()));
}

TEST_CASE("self-flops") {
  const Fan kl = kleinschmidt({3, {1, 1}});
  CHECK(are_isomorphic(flop(kl, {3, 4}).result, kl));
  const Fan bc5 = batyrev({{1, 1, 2, 1, 1}, {0}, {1}});
  const auto report = enumerate_moves(bc5);
  CHECK(std::any_of(report.moves.begin(), report.moves.end(),
                    [](const MoveRecord& m) { return m.kind == MoveKind::Flop && m.self_flop; }));
}

TEST_CASE("flop rejects unbalanced relations") {
  const Fan kl = kleinschmidt({4, {1, 1}});
  CHECK_THROWS_AS(flop(kl, {3, 4, 5}), Error);
  CHECK_THROWS_AS(flop(kl, {3, 4, 5}, true), Error);
  CHECK_THROWS_AS(flop(kleinschmidt({3, {1}}), {2, 3, 4}), Error);
}

TEST_CASE("unbalanced subdivision and blowdown of KL(4,{1,1})") {
  const Fan kl = kleinschmidt({4, {1, 1}});
  const auto& r = relation(kl, {3, 4, 5});
  CHECK(r.sigma == IndexSet{1, 2});
  IntVector u(4);
  for (int x : {3, 4, 5}) u = add(u, kl.ray(x));
  const auto b = blowdown(star_subdivision(kl, {1, 2}, u), {3, 4, 5});
  CHECK(b.regular);
  CHECK(are_isomorphic(b.result, kleinschmidt({4, {1, 1, 1}})));
  CHECK_FALSE(is_weak_fano(b.result));
}

TEST_CASE("moves of 3.PB-12") {
  const auto report = enumerate_moves(projective_bundle({2, {1}, {{1, -1}}}));
  int blowdowns = 0, flops = 0;
  for (const auto& m : report.moves) {
    if (m.kind == MoveKind::Blowdown && m.regular) {
      ++blowdowns;
      CHECK(m.label == "KL(3,{1,1})");
      CHECK(m.center_dim == 1);
      CHECK(m.result_weak_fano == true);
    }
    if (m.kind == MoveKind::Flop) {
      ++flops;
      CHECK(are_isomorphic(m.result, batyrev({{1, 1, 1, 1, 2}, {0}, {}})));
      CHECK(m.result_collections == 5u);
    }
  }
  CHECK(blowdowns == 1);
  CHECK(flops == 1);
}

TEST_CASE("3.PB-8 has no flop and no weak Fano rank 2 blowdown") {
  const auto report = enumerate_moves(projective_bundle({2, {0}, {{1, 2}}}));
  for (const auto& m : report.moves) {
    CHECK(m.kind == MoveKind::Blowdown);
    if (m.regular) {
      CHECK(m.result_weak_fano == false);
      CHECK(m.label == "KL(3,{2,2})");
    }
  }
}

TEST_CASE("moves resolve targets through a catalog") {
  FanCatalog catalog;
  catalog.add("target", batyrev({{1, 2, 2, 1, 1}, {0}, {1}}));
  const auto report = enumerate_moves(projective_bundle({2, {1}, {{0, -1}, {1, -1}}}), &catalog);
  bool found = false;
  for (const auto& m : report.moves)
    if (m.kind == MoveKind::Flop) found = found || m.label == "target";
  CHECK(found);
}

TEST_CASE("blowup then blowdown is the identity") {
  std::vector<Fan> fans = smooth_classes(3);
  const auto four = smooth_classes(4);
  for (std::size_t i = 0; i < four.size(); i += 7) fans.push_back(four[i]);
  fans.push_back(fixtures::ex23());
  for (const Fan& f : fans)
    for (const auto& sigma : faces(f)) {
      const Fan up = star_subdivision(f, sigma);
      REQUIRE(up.is_smooth());
      const auto b = blowdown(up, sigma);
      CHECK(b.regular);
      CHECK(b.ray == static_cast<int>(f.num_rays()));
      CHECK(equal_up_to_reindexing(b.result, f));
    }
}

TEST_CASE("flops are involutions and preserve Chern numbers") {
  for (int d : {3, 4}) {
    for (const Fan& f : smooth_classes(d)) {
      for (const auto& m : enumerate_moves(f).moves) {
        if (m.kind != MoveKind::Flop) continue;
        const auto& r = relation(f, m.collection);
        const auto back = flop(m.result, r.sigma);
        CHECK(equal_up_to_reindexing(back.result, f));
        CHECK(c1_top(m.result) == c1_top(f));
        CHECK(c1sq_c2(m.result) == c1sq_c2(f));
      }
    }
  }
}

TEST_CASE("flop outcomes on three primitive collections") {
  int flops = 0;
  for (int d : {3, 4})
    for (const auto& c : deduped(enumerate_projective_bundles_weak_fano(d))) {
      const Fan& f = c.fan;
      const auto& pcs = f.primitive_collections();
      for (const auto& m : enumerate_moves(f).moves) {
        if (m.kind != MoveKind::Flop) continue;
        ++flops;
        const auto& sigma = relation(f, m.collection).sigma;
        std::set<std::size_t> met;
        for (int y : sigma)
          for (std::size_t k = 0; k < pcs.size(); ++k)
            if (pcs[k] != m.collection && std::count(pcs[k].begin(), pcs[k].end(), y)) met.insert(k);
        CHECK(m.result_collections == (met.size() == 2 ? 5u : 3u));
      }
    }
  CHECK(flops > 20);
}

TEST_CASE("regular rank 2 blowdowns of five primitive collections") {
  for (int d : {3, 4})
    for (const auto& c : deduped(enumerate_batyrev_weak_fano(d))) {
      const auto& p = c.params.p;
      const auto groups = batyrev_groups(c.params);
      const auto rels = batyrev_expected_relations(c.params);
      const bool fano = is_fano(c.fan);
      const bool all_b_zero = std::all_of(c.params.b.begin(), c.params.b.end(), [](int x) { return x == 0; });
      const bool all_c_zero = std::all_of(c.params.c.begin(), c.params.c.end(), [](int x) { return x == 0; });
      auto degree_of = [&](int i) {
        Integer deg = 0;
        for (const auto& x : rels[i]) deg += x;
        return deg;
      };
      for (const auto& m : enumerate_moves(c.fan).moves) {
        if (m.kind != MoveKind::Blowdown || !m.regular) continue;
        CAPTURE(to_string(c.params));
        CAPTURE(to_string(m.collection));
        // m.collection = P_i = X_i ∪ X_{i+1}.
        int which = -1;
        for (int i = 0; i < 5; ++i) {
          IndexSet pi = groups[i];
          pi.insert(pi.end(), groups[(i + 1) % 5].begin(), groups[(i + 1) % 5].end());
          std::sort(pi.begin(), pi.end());
          if (pi == m.collection) which = i;
        }
        REQUIRE(which >= 0);
        CHECK(which != 2);
        // Target ray u of the relation.
        const int u = relation(c.fan, m.collection).sigma.front();
        const int partner = which == 0 ? 1 : which == 1 ? 0 : which == 3 ? 4 : 3;
        switch (which) {
          case 0:
            CHECK(p[3] == 1);
            CHECK(c.params.b.front() == 0);
            CHECK(all_c_zero);
            CHECK(group_of(groups, u) == 3);
            break;
          case 1:
            CHECK(p[4] == 1);
            CHECK(group_of(groups, u) == 4);
            break;
          case 3:
            CHECK(p[1] == 1);
            CHECK(group_of(groups, u) == 1);
            break;
          case 4:
            CHECK(p[2] == 1);
            CHECK(all_b_zero);
            CHECK(group_of(groups, u) == 2);
            break;
          default:
            break;
        }
        CHECK(m.result_weak_fano == true);
        if (fano || degree_of(partner) > 0) CHECK(m.result_fano == true);
      }
    }
}

TEST_CASE("4.BC-4 and 4.BC-16 have no regular rank 2 blowdown") {
  for (const BatyrevParams& p : {BatyrevParams{{1, 2, 1, 1, 2}, {1}, {}}, BatyrevParams{{1, 2, 1, 1, 2}, {2}, {}}}) {
    for (const auto& m : enumerate_moves(batyrev(p)).moves) CHECK_FALSE((m.kind == MoveKind::Blowdown && m.regular));
  }
}

TEST_CASE("point blowups lower c1^d by (d-1)^d") {
  for (int d : {3, 4})
    for (const Fan& f : fixtures::rank3_classes(d))
      for (const auto& m : enumerate_moves(f).moves) {
        if (m.kind != MoveKind::Blowdown || !m.regular || m.center_dim != 0) continue;
        Integer drop = 1;
        for (int i = 0; i < d; ++i) drop *= d - 1;
        CHECK(c1_top(m.result) - c1_top(f) == drop);
      }
}

TEST_CASE("self-flop flag agrees with isomorphism of the flop") {
  for (const Fan& f : smooth_classes(3))
    for (const auto& m : enumerate_moves(f).moves)
      if (m.kind == MoveKind::Flop) CHECK(m.self_flop == are_isomorphic(m.result, f).has_value());
}
