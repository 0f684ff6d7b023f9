#pragma once

// Line bundle cohomology by degree, and H^1(Ω^1(−K)) for weak Fano varieties.

#include <vector>

#include "wfatlas/divisors.hpp"

namespace wfatlas {

/// Rays with ⟨m, u_ρ⟩ < −a_ρ.
RayMask active_rays(const TorusDivisor& d, const IntVector& m);

/// Reduced rational cohomology of the subcomplex of the fan on the given rays.
/// Entry i is dim H̃^{i−1}, for i = 0..dim; the empty complex has entry 0 equal to 1.
std::vector<Integer> support_complex_cohomology(const Fan& fan, RayMask active);

/// dim H^i(X, O(D))_m.
Integer graded_cohomology(const TorusDivisor& d, const IntVector& m, int i);

/// h^0..h^d, summing degrees over the bounding box of the Cartier data
/// grown by `expansion` in every coordinate.
std::vector<Integer> line_bundle_cohomology(const TorusDivisor& d, int expansion = 1);

/// Face sum over P_{−K}: Σ_Γ l*(Γ)·(#rays in σ_Γ − d + dim Γ). Requires −K nef.
Integer h1_omega1_anticanonical(const Fan& fan);

/// The same dimension as the cokernel of H^0(M ⊗ O(−K)) → ⊕_ρ H^0(O_{D_ρ}(−K)),
/// assembled degree by degree from graded cohomology.
Integer h1_omega1_ishida(const Fan& fan, int expansion = 1);

struct BottReport {
  bool fano = false;
  bool wall_collision = false;
  Integer h1_omega1;
};

/// Computes all three and throws InternalError unless
/// fano ⟺ no wall collision ⟺ h1_omega1 = 0.
BottReport bott_converse_check(const Fan& fan);

}  // namespace wfatlas
