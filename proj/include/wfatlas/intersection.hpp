#pragma once

// Intersection numbers in the Chow ring of a smooth complete toric variety.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "wfatlas/fan.hpp"

namespace wfatlas {

/// Multiset of ray indices standing for D_{ρ1}···D_{ρd}; stored sorted.
using DivisorMonomial = std::vector<int>;

/// Memoizing evaluator for one fan. Safe to share between threads.
class ChowRing {
 public:
  /// With a seed, the repeated ray and the reducing cone are chosen at random
  /// instead of by lowest index. Values do not depend on the choice.
  explicit ChowRing(Fan fan, std::optional<unsigned> seed = std::nullopt);

  const Fan& fan() const { return fan_; }
  Integer intersect(DivisorMonomial mono) const;

 private:
  Integer evaluate(const DivisorMonomial& mono) const;

  Fan fan_;
  std::optional<unsigned> seed_;
  mutable std::mutex mutex_;
  mutable std::map<DivisorMonomial, Integer> memo_;
  mutable std::mt19937 rng_;
};

Integer intersection_number(const Fan& fan, const DivisorMonomial& mono);

/// (−K)^d.
Integer c1_top(const Fan& fan);
/// (−K)^{d−2}·c2.
Integer c1sq_c2(const Fan& fan);
/// c_d as Σ over d-subsets of rays of the corresponding intersection numbers.
Integer top_chern_number(const Fan& fan);

/// dim H^0(X, T_X) = d + number of Demazure roots.
Integer h0_tangent(const Fan& fan);

}  // namespace wfatlas
