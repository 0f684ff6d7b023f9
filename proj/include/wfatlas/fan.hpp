#pragma once

// Simplicial fans: validation, cone queries, primitive collections and relations.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wfatlas/lattice.hpp"

namespace wfatlas {

/// Sorted set of ray indices.
using IndexSet = std::vector<int>;
/// Bit i set iff ray i is in the set. Fans are limited to 64 rays.
using RayMask = std::uint64_t;

RayMask to_mask(const IndexSet& s);
IndexSet from_mask(RayMask m);

struct PrimitiveRelation {
  IndexSet collection;
  IndexSet sigma;                    // rays of σ(P); empty for the zero cone
  std::vector<Integer> coefficients;  // a_i ≥ 1, paired with sigma
  std::vector<Integer> relation_vector;  // indexed by ray
  Integer degree;
};

class Fan {
 public:
  Fan();

  std::size_t dim() const;
  std::size_t num_rays() const;
  const std::vector<IntVector>& rays() const;
  const IntVector& ray(int i) const;
  const std::vector<IndexSet>& max_cones() const;
  const std::vector<RayMask>& max_cone_masks() const;

  bool is_smooth() const;
  bool is_complete() const;
  bool is_cone(const IndexSet& s) const;
  bool is_cone(RayMask s) const;

  const std::vector<IndexSet>& primitive_collections() const;
  /// Relations for primitive_collections(), in the same order.
  const std::vector<PrimitiveRelation>& primitive_relations() const;
  PrimitiveRelation primitive_relation(const IndexSet& collection) const;

  /// Smallest cone whose relative interior contains v (empty for v = 0).
  IndexSet containing_cone(const IntVector& v) const;

  /// Rows form the basis of M dual to the rays of maximal cone k.
  /// Throws Error when that cone is not smooth.
  const std::vector<IntVector>& dual_basis(std::size_t k) const;
  /// Rational inverse of the ray matrix of cone k (rows dual to its rays).
  const std::vector<RationalVector>& cone_inverse(std::size_t k) const;

  /// Index of the ray equal to v, or -1.
  int find_ray(const IntVector& v) const;

  bool operator==(const Fan& other) const;

  struct Data;

 private:
  explicit Fan(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;

  friend Fan make_fan(std::size_t, std::vector<IntVector>, std::vector<IndexSet>, bool);
};

/// Validates and builds a fan. Cones are sorted within and across; ray order is kept.
/// With check_intersections, also verifies every pair of maximal cones meets in a common face.
Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
             bool check_intersections = false);

inline bool is_smooth(const Fan& f) { return f.is_smooth(); }
inline bool is_complete(const Fan& f) { return f.is_complete(); }
inline bool is_cone(const Fan& f, const IndexSet& s) { return f.is_cone(s); }
inline const std::vector<IndexSet>& primitive_collections(const Fan& f) {
  return f.primitive_collections();
}
inline PrimitiveRelation primitive_relation(const Fan& f, const IndexSet& p) {
  return f.primitive_relation(p);
}
inline IndexSet containing_cone(const Fan& f, const IntVector& v) { return f.containing_cone(v); }

/// Picard rank of a smooth complete fan: #rays − dim.
inline std::size_t picard_rank(const Fan& f) { return f.num_rays() - f.dim(); }

/// True iff the fans have the same rays (as a set) and the same cones on those rays.
bool equal_up_to_reindexing(const Fan& a, const Fan& b);

/// `{"dim": d, "rays": [[...],...], "maxCones": [[...],...]}`
std::string to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

std::string to_string(const IndexSet& s);  // "{0, 2}"

}  // namespace wfatlas
