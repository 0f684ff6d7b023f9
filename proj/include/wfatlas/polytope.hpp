#pragma once

// Divisor polytopes P_D = {m : ⟨m, u_ρ⟩ ≥ −a_ρ}, their faces and lattice points.

#include <vector>

#include "wfatlas/divisors.hpp"

namespace wfatlas {

struct PolytopeFace {
  RayMask tight = 0;         // inequalities tight on the whole face
  std::vector<int> vertices;  // indices into LatticePolytope::vertices
  int dim = 0;
};

class LatticePolytope {
 public:
  LatticePolytope(std::vector<IntVector> normals, std::vector<Integer> coeffs,
                  std::vector<IntVector> vertices);

  std::size_t ambient_dim() const { return ambient_; }
  /// Inequality ρ reads ⟨m, normals[ρ]⟩ ≥ −coeffs[ρ].
  const std::vector<IntVector>& normals() const { return normals_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  int dim() const { return dim_; }

  RayMask tight_set(const IntVector& m) const;
  bool contains(const IntVector& m) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> normals_;
  std::vector<Integer> coeffs_;
  std::vector<IntVector> vertices_;
  int dim_ = 0;
};

/// Requires D nef. Vertices are the distinct Cartier data m_σ in first-seen order.
LatticePolytope divisor_polytope(const TorusDivisor& d);

/// Every face including the vertices and the polytope itself, ordered by (dim, tight set).
std::vector<PolytopeFace> face_lattice(const LatticePolytope& p);

std::vector<IntVector> lattice_points(const LatticePolytope& p);
/// Lattice points in the relative interior of the face (a vertex counts itself).
std::vector<IntVector> interior_lattice_points(const LatticePolytope& p, const PolytopeFace& f);
/// Generators u_ρ of the inequalities tight on f, as ray indices.
IndexSet normal_cone(const LatticePolytope& p, const PolytopeFace& f);

/// d!·vol(P) for a full-dimensional polytope, by a pulling triangulation.
Integer normalized_volume(const LatticePolytope& p);

/// True iff the recession cone {m : ⟨m, u_i⟩ ≥ 0, and = 0 where equality[i]} is zero.
bool is_bounded_polyhedron(const std::vector<IntVector>& normals, const std::vector<bool>& equality);

/// Lattice points of the bounded polyhedron {m : ⟨m, u_i⟩ ≥ b_i, and = b_i where equality[i]}.
/// Throws Error when the polyhedron is unbounded.
std::vector<IntVector> polyhedron_lattice_points(const std::vector<IntVector>& normals,
                                                 const std::vector<Integer>& bounds,
                                                 const std::vector<bool>& equality);

/// Affine dimension of a point set (−1 when empty).
int affine_dimension(const std::vector<IntVector>& points);

}  // namespace wfatlas
