#pragma once

// Torus-invariant divisors, Cartier data, positivity and the Mori cone.

#include <memory>
#include <utility>
#include <vector>

#include "wfatlas/fan.hpp"

namespace wfatlas {

/// D = Σ a_ρ D_ρ on a fixed fan.
class TorusDivisor {
 public:
  TorusDivisor(Fan fan, std::vector<Integer> coeffs);

  const Fan& fan() const { return fan_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// m_σ per maximal cone (same order as fan().max_cones()), with ⟨m_σ, u_ρ⟩ = −a_ρ for ρ ∈ σ.
  /// Throws Error "divisor not Cartier on this cone" when a solution is not integral.
  const std::vector<IntVector>& cartier_data() const;

 private:
  Fan fan_;
  std::vector<Integer> coeffs_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

TorusDivisor anticanonical(const Fan& fan);

/// Σ_ρ a_ρ · r(P)_ρ.
Integer pair_with_relation(const TorusDivisor& d, const PrimitiveRelation& r);

bool is_nef(const TorusDivisor& d);
bool is_ample(const TorusDivisor& d);

bool is_weak_fano(const Fan& fan);
bool is_fano(const Fan& fan);

/// Pairs of adjacent maximal cones (indices into max_cones) whose Cartier data for D agree.
std::vector<std::pair<std::size_t, std::size_t>> wall_collisions(const TorusDivisor& d);

const std::vector<PrimitiveRelation>& mori_generators(const Fan& fan);

/// r(P) is not in the cone spanned by the other relation vectors that are not
/// positive multiples of r(P).
bool is_extremal(const Fan& fan, const IndexSet& collection);

}  // namespace wfatlas
