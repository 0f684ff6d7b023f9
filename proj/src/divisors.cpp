#include "wfatlas/divisors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "wfatlas/error.hpp"

namespace wfatlas {

struct TorusDivisor::Cache {
  std::once_flag once;
  std::vector<IntVector> data;
};

TorusDivisor::TorusDivisor(Fan fan, std::vector<Integer> coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)), cache_(std::make_shared<Cache>()) {
  if (coeffs_.size() != fan_.num_rays())
    throw Error("divisor has " + std::to_string(coeffs_.size()) + " coefficients for " +
                std::to_string(fan_.num_rays()) + " rays");
}

const std::vector<IntVector>& TorusDivisor::cartier_data() const {
  std::call_once(cache_->once, [this] {
    const std::size_t d = fan_.dim();
    for (std::size_t k = 0; k < fan_.max_cones().size(); ++k) {
      const auto& cone = fan_.max_cones()[k];
      const auto& inv = fan_.cone_inverse(k);
      // m = −Σ_r a_{cone[r]} · (row r of the inverse).
      IntVector m(d);
      for (std::size_t c = 0; c < d; ++c) {
        Rational acc = 0;
        for (std::size_t r = 0; r < d; ++r) acc -= inv[r][c] * coeffs_[cone[r]];
        if (!is_integral(acc))
          throw Error("divisor not Cartier on this cone " + to_string(cone));
        m[c] = to_integer(acc);
      }
      cache_->data.push_back(std::move(m));
    }
  });
  return cache_->data;
}

TorusDivisor anticanonical(const Fan& fan) {
  return TorusDivisor(fan, std::vector<Integer>(fan.num_rays(), 1));
}

Integer pair_with_relation(const TorusDivisor& d, const PrimitiveRelation& r) {
  if (r.relation_vector.size() != d.coeffs().size())
    throw Error("relation and divisor live on different fans");
  Integer acc = 0;
  for (std::size_t i = 0; i < r.relation_vector.size(); ++i)
    acc += d.coeffs()[i] * r.relation_vector[i];
  return acc;
}

namespace {

// Cartier-data positivity: ⟨m_σ, u_ρ⟩ + a_ρ ≥ 0 (nef) or > 0 (ample) for ρ ∉ σ.
bool cartier_positive(const TorusDivisor& d, bool strict) {
  const Fan& fan = d.fan();
  const auto& data = d.cartier_data();
  for (std::size_t k = 0; k < data.size(); ++k) {
    const RayMask cone = fan.max_cone_masks()[k];
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      if (cone >> r & 1) continue;
      const Integer slack = dot(data[k], fan.rays()[r]) + d.coeffs()[r];
      if (slack < 0 || (strict && slack == 0)) return false;
    }
  }
  return true;
}

bool mori_positive(const TorusDivisor& d, bool strict) {
  for (const auto& r : d.fan().primitive_relations()) {
    const Integer p = pair_with_relation(d, r);
    if (p < 0 || (strict && p == 0)) return false;
  }
  return true;
}

bool checked_positivity(const TorusDivisor& d, bool strict) {
  const bool cartier = cartier_positive(d, strict);
  const bool mori = mori_positive(d, strict);
  if (cartier != mori)
    throw InternalError(std::string(strict ? "ampleness" : "nefness") +
                        " differs between Cartier data and primitive relations");
  return cartier;
}

}  // namespace

bool is_nef(const TorusDivisor& d) { return checked_positivity(d, false); }
bool is_ample(const TorusDivisor& d) { return checked_positivity(d, true); }

bool is_weak_fano(const Fan& fan) {
  const auto& rels = fan.primitive_relations();
  return std::all_of(rels.begin(), rels.end(), [](const auto& r) { return r.degree >= 0; });
}

bool is_fano(const Fan& fan) {
  const auto& rels = fan.primitive_relations();
  return std::all_of(rels.begin(), rels.end(), [](const auto& r) { return r.degree > 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> wall_collisions(const TorusDivisor& d) {
  const auto& masks = d.fan().max_cone_masks();
  const auto& data = d.cartier_data();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a + 1; b < masks.size(); ++b)
      if (std::popcount(masks[a] & masks[b]) + 1 == static_cast<int>(d.fan().dim()) &&
          data[a] == data[b])
        out.emplace_back(a, b);
  return out;
}

const std::vector<PrimitiveRelation>& mori_generators(const Fan& fan) {
  return fan.primitive_relations();
}

bool is_extremal(const Fan& fan, const IndexSet& collection) {
  IndexSet sorted = collection;
  std::sort(sorted.begin(), sorted.end());
  const auto& rels = fan.primitive_relations();
  const auto it = std::find_if(rels.begin(), rels.end(),
                               [&](const auto& r) { return r.collection == sorted; });
  if (it == rels.end()) throw Error(to_string(sorted) + " is not a primitive collection");
  const IntVector target(it->relation_vector.begin(), it->relation_vector.end());
  std::vector<IntVector> others;
  for (const auto& r : rels) {
    IntVector vec(r.relation_vector.begin(), r.relation_vector.end());
    if (positively_proportional(vec, target)) continue;
    others.push_back(std::move(vec));
  }
  return !in_rational_cone(others, target);
}

}  // namespace wfatlas
