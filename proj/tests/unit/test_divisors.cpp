#include "doctest.h"
#include "fixtures.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"

using namespace wfatlas;
using fixtures::v;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("anticanonical") {
  CHECK(anticanonical(fixtures::p2()).coeffs() == ints({1, 1, 1}));
  CHECK(anticanonical(fixtures::ex23()).coeffs() == ints({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(TorusDivisor(fixtures::p2(), ints({1, 1})), Error);
}

TEST_CASE("cartier_data") {
  const auto p2 = anticanonical(fixtures::p2());
  // Cones are stored sorted: {0,1}, {0,2}, {1,2}.
  CHECK(p2.cartier_data() == std::vector<IntVector>{v({-1, -1}), v({-1, 2}), v({2, -1})});

  const Fan f2 = fixtures::f2();
  const auto k = anticanonical(f2);
  const auto& m = k.cartier_data();
  // Cones {0,1} and {1,2} are adjacent through ray 1 and share m = (−1,−1).
  CHECK(f2.max_cones()[0] == IndexSet{0, 1});
  CHECK(f2.max_cones()[2] == IndexSet{1, 2});
  CHECK(m[0] == v({-1, -1}));
  CHECK(m[2] == v({-1, -1}));

  const TorusDivisor zero(fixtures::ex23(), ints({0, 0, 0, 0, 0}));
  for (const auto& mk : zero.cartier_data()) CHECK(is_zero(mk));
}

TEST_CASE("cartier data satisfies its defining equalities") {
  for (const Fan& f : {fixtures::p2(), fixtures::f2(), fixtures::ex23(), fixtures::sigma1()}) {
    std::vector<Integer> a;
    for (std::size_t i = 0; i < f.num_rays(); ++i) a.emplace_back(static_cast<long>(i % 3) - 1);
    const TorusDivisor d(f, a);
    for (std::size_t k = 0; k < f.max_cones().size(); ++k)
      for (int r : f.max_cones()[k]) CHECK(dot(d.cartier_data()[k], f.ray(r)) == -a[r]);
  }
}

TEST_CASE("pair_with_relation") {
  const Fan ex = fixtures::ex23();
  CHECK(pair_with_relation(anticanonical(ex), ex.primitive_relation({0, 3})) == 1);
  const TorusDivisor zero(ex, ints({0, 0, 0, 0, 0}));
  for (const auto& r : ex.primitive_relations()) CHECK(pair_with_relation(zero, r) == 0);
  const Fan p2 = fixtures::p2();
  CHECK(pair_with_relation(anticanonical(p2), p2.primitive_relation({0, 1, 2})) == 3);
  CHECK_THROWS_AS(pair_with_relation(anticanonical(p2), ex.primitive_relation({0, 3})), Error);
}

TEST_CASE("nef and ample on Kleinschmidt fans") {
  // D = b·D_{x_{d'-r+1}} + c·D_{y_{r+1}}; ray 0 is x_{d'-r+1} and the last ray is y_{r+1}.
  for (const KleinschmidtParams& p : {KleinschmidtParams{2, {1}}, KleinschmidtParams{3, {0, 2}},
                                      KleinschmidtParams{4, {1, 2}}}) {
    const Fan fan = kleinschmidt(p);
    for (int b = -1; b <= 2; ++b) {
      for (int c = -1; c <= 2; ++c) {
        std::vector<Integer> coeffs(fan.num_rays(), 0);
        coeffs.front() = b;
        coeffs.back() = c;
        const TorusDivisor d(fan, coeffs);
        CHECK(is_nef(d) == (b >= 0 && c >= 0));
        CHECK(is_ample(d) == (b > 0 && c > 0));
      }
    }
  }
}

TEST_CASE("F_2 anticanonical is nef not ample") {
  const auto k = anticanonical(fixtures::f2());
  CHECK(is_nef(k));
  CHECK_FALSE(is_ample(k));
  CHECK_FALSE(wall_collisions(k).empty());
}

TEST_CASE("fano and weak fano") {
  CHECK(is_fano(fixtures::ex23()));
  CHECK(is_weak_fano(fixtures::f2()));
  CHECK_FALSE(is_fano(fixtures::f2()));
  const Fan w3 = batyrev({{1, 1, 1, 1, 1}, {1}, {}});
  CHECK(is_weak_fano(w3));
  CHECK_FALSE(is_fano(w3));
}

TEST_CASE("mori extremality") {
  const Fan ex = fixtures::ex23();
  CHECK(mori_generators(ex).size() == 5);
  for (const IndexSet& p : {IndexSet{0, 3}, IndexSet{1, 3}, IndexSet{2, 4}})
    CHECK(is_extremal(ex, p));
  for (const IndexSet& p : {IndexSet{0, 2}, IndexSet{1, 4}}) CHECK_FALSE(is_extremal(ex, p));
  CHECK(is_extremal(fixtures::p2(), {0, 1, 2}));
  CHECK(is_extremal(fixtures::p1xp1(), {0, 2}));
  CHECK(is_extremal(fixtures::p1xp1(), {1, 3}));
  CHECK_THROWS_AS(is_extremal(ex, {0, 1}), Error);
}

TEST_CASE("positivity and walls agree with the degree test") {
  for (int d = 2; d <= 4; ++d) {
    for (const auto& c : enumerate_kleinschmidt_weak_fano(d)) {
      const auto k = anticanonical(c.fan);
      CHECK(is_nef(k));
      CHECK(is_fano(c.fan) == is_ample(k));
      CHECK(is_fano(c.fan) == wall_collisions(k).empty());
    }
  }
  for (const auto& c : enumerate_batyrev_weak_fano(3)) {
    const auto k = anticanonical(c.fan);
    CHECK(is_nef(k));
    CHECK(is_fano(c.fan) == wall_collisions(k).empty());
  }
}
