#include "wfatlas/birational.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/isomorphism.hpp"
#include "wfatlas/parallel.hpp"

namespace wfatlas {

namespace {

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

const PrimitiveRelation& relation_of(const Fan& fan, const IndexSet& collection) {
  const IndexSet p = sorted(collection);
  for (const auto& r : fan.primitive_relations())
    if (r.collection == p) return r;
  throw Error(to_string(p) + " is not a primitive collection");
}

}  // namespace

Fan star_subdivision(const Fan& fan, const IndexSet& sigma_in, const std::optional<IntVector>& u_in) {
  const IndexSet sigma = sorted(sigma_in);
  if (sigma.size() < 2) throw Error("star subdivision needs a cone of dimension at least 2");
  if (!fan.is_cone(sigma)) throw Error(to_string(sigma) + " is not a cone of the fan");

  std::vector<IntVector> gens;
  IntVector sum(fan.dim());
  for (int i : sigma) {
    gens.push_back(fan.ray(i));
    sum = add(sum, fan.ray(i));
  }
  const IntVector u = u_in ? *u_in : primitive_part(sum);
  if (u.size() != fan.dim()) throw Error("subdivision ray has the wrong dimension");
  if (!is_primitive(u)) throw Error("subdivision ray " + to_string(u) + " is not primitive");
  const auto coords = solve_in_span(gens, u);
  if (!coords || std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return c <= 0; }))
    throw Error(to_string(u) + " is not in the relative interior of " + to_string(sigma));

  auto rays = fan.rays();
  const int n = static_cast<int>(rays.size());
  rays.push_back(u);
  const RayMask s = to_mask(sigma);
  std::vector<IndexSet> cones;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    const auto& tau = fan.max_cones()[k];
    if ((fan.max_cone_masks()[k] & s) != s) {
      cones.push_back(tau);
      continue;
    }
    for (int x : sigma) {
      IndexSet c;
      for (int r : tau)
        if (r != x) c.push_back(r);
      c.push_back(n);
      cones.push_back(std::move(c));
    }
  }
  return make_fan(fan.dim(), std::move(rays), std::move(cones));
}

BlowdownMove blowdown(const Fan& fan, const IndexSet& collection) {
  const auto& rel = relation_of(fan, collection);
  if (rel.sigma.size() != 1) throw Error("no blowdown along " + to_string(rel.collection));
  const int u = rel.sigma.front();
  const RayMask p = to_mask(rel.collection);
  const std::size_t d = fan.dim();

  std::set<IndexSet> cones;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    const RayMask c = fan.max_cone_masks()[k];
    if (!(c >> u & 1)) {
      cones.insert(fan.max_cones()[k]);
      continue;
    }
    const RayMask merged = (c & ~(RayMask{1} << u)) | p;
    if (static_cast<std::size_t>(std::popcount(merged)) != d)
      throw Error("no blowdown along " + to_string(rel.collection) + ": cone " +
                  to_string(fan.max_cones()[k]) + " does not contract");
    cones.insert(from_mask(merged));
  }

  // Drop ray u and shift the later indices down.
  auto reindex = [u](int r) { return r > u ? r - 1 : r; };
  std::vector<IntVector> rays;
  for (int r = 0; r < static_cast<int>(fan.num_rays()); ++r)
    if (r != u) rays.push_back(fan.ray(r));
  std::vector<IndexSet> new_cones;
  for (const auto& c : cones) {
    IndexSet nc;
    for (int r : c) nc.push_back(reindex(r));
    new_cones.push_back(std::move(nc));
  }
  IndexSet new_p;
  for (int r : rel.collection) new_p.push_back(reindex(r));

  BlowdownMove move{fan, rel.collection, u, rel.coefficients.front(),
                    make_fan(d, std::move(rays), std::move(new_cones)), false};
  if (!equal_up_to_reindexing(star_subdivision(move.result, new_p, fan.ray(u)), fan))
    throw Error("blowdown along " + to_string(rel.collection) + " does not invert a star subdivision");
  move.regular = move.multiplicity == 1 && move.result.is_smooth();
  return move;
}

FlopMove flop(const Fan& fan, const IndexSet& collection, bool formal) {
  const auto& rel = relation_of(fan, collection);
  const bool balanced =
      rel.sigma.size() == rel.collection.size() &&
      std::all_of(rel.coefficients.begin(), rel.coefficients.end(), [](const Integer& c) { return c == 1; });
  if (!balanced)
    throw Error("no flop along " + to_string(rel.collection) + ": relation is not a sum of " +
                std::to_string(rel.collection.size()) + " rays");
  if (!formal && !is_extremal(fan, rel.collection))
    throw Error("no flop along " + to_string(rel.collection) + ": relation is not extremal");

  IntVector u(fan.dim());
  for (int x : rel.collection) u = add(u, fan.ray(x));
  FlopMove move{fan, rel.collection, rel.sigma, star_subdivision(fan, rel.sigma, u), Fan()};
  move.result = blowdown(move.intermediate, rel.collection).result;
  if (!move.result.is_smooth() || !move.result.is_complete())
    throw InternalError("flop along " + to_string(rel.collection) + " left the smooth complete fans");
  return move;
}

std::vector<Integer> weighted_projective_weights(const Fan& fan) {
  const std::size_t d = fan.dim();
  if (fan.num_rays() != d + 1) throw Error("weighted projective space needs dim + 1 rays");
  std::vector<Integer> q(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j <= d; ++j)
      if (j != i) cols.push_back(fan.ray(static_cast<int>(j)));
    q[i] = determinant(IntMatrix::from_columns(cols));
    if (i % 2 == 1) q[i] = -q[i];
  }
  if (q[0] < 0)
    for (auto& x : q) x = -x;
  Integer g = 0;
  for (const auto& x : q) g = gcd(g, abs(x));
  for (auto& x : q) {
    x /= g;
    if (x <= 0) throw Error("rays do not positively span the lattice");
  }
  std::sort(q.begin(), q.end());
  return q;
}

bool gorenstein_fano_wps(const std::vector<Integer>& weights) {
  const Integer sum = std::accumulate(weights.begin(), weights.end(), Integer(0));
  return std::all_of(weights.begin(), weights.end(), [&](const Integer& q) { return sum % q == 0; });
}

std::string kleinschmidt_id(int d, const std::vector<int>& a) {
  std::ostringstream out;
  out << "KL(" << d << ",{";
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  out << "})";
  return out.str();
}

namespace {

void describe_result(MoveRecord& m, const FanCatalog* catalog) {
  const Fan& r = m.result;
  m.result_rank = r.num_rays() - r.dim();
  if (r.is_smooth()) {
    m.result_collections = r.primitive_collections().size();
    m.result_weak_fano = is_weak_fano(r);
    m.result_fano = is_fano(r);
  }
  if (m.result_rank == 1) {
    std::ostringstream out;
    out << "P(";
    const auto w = weighted_projective_weights(r);
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
    out << ")";
    m.label = out.str();
  } else if (m.result_rank == 2 && r.is_smooth()) {
    const auto p = identify_kleinschmidt(r);
    m.label = kleinschmidt_id(p.d_prime, p.a);
  } else if (catalog && r.is_smooth()) {
    m.label = catalog->lookup(r).value_or("");
  }
}

}  // namespace

MovesReport enumerate_moves(const Fan& fan, const FanCatalog* catalog) {
  if (!fan.is_smooth() || !fan.is_complete()) throw Error("moves need a smooth complete fan");
  const auto& rels = fan.primitive_relations();
  std::vector<std::optional<MoveRecord>> found(rels.size());
  std::vector<bool> skipped(rels.size(), false);

  parallel_for(rels.size(), [&](std::size_t i) {
    const auto& rel = rels[i];
    MoveRecord m;
    m.collection = rel.collection;
    if (rel.sigma.size() == 1) {
      BlowdownMove b;
      try {
        b = blowdown(fan, rel.collection);
      } catch (const InternalError&) {
        throw;
      } catch (const Error&) {
        return;
      }
      m.kind = MoveKind::Blowdown;
      m.result = b.result;
      m.regular = b.regular;
      m.multiplicity = b.multiplicity;
      m.center_dim = static_cast<int>(fan.dim() - rel.collection.size());
    } else if (rel.sigma.size() == rel.collection.size() &&
               std::all_of(rel.coefficients.begin(), rel.coefficients.end(),
                           [](const Integer& c) { return c == 1; })) {
      if (!is_extremal(fan, rel.collection)) {
        skipped[i] = true;
        return;
      }
      m.kind = MoveKind::Flop;
      m.result = flop(fan, rel.collection).result;
      m.self_flop = are_isomorphic(fan, m.result).has_value();
    } else {
      return;
    }
    describe_result(m, catalog);
    found[i] = std::move(m);
  });

  MovesReport report;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (found[i]) report.moves.push_back(std::move(*found[i]));
    if (skipped[i]) report.non_extremal.push_back(rels[i].collection);
  }
  return report;
}

}  // namespace wfatlas
