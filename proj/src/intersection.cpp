#include "wfatlas/intersection.hpp"

#include <algorithm>
#include <functional>

#include "wfatlas/error.hpp"
#include "wfatlas/polytope.hpp"

namespace wfatlas {

namespace {

void require_smooth_complete(const Fan& fan) {
  if (!fan.is_smooth()) throw Error("intersection numbers need a smooth fan");
  if (!fan.is_complete()) throw Error("intersection numbers need a complete fan");
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls visit(mono, multinomial coefficient) for each multiset of size k over n rays.
void for_each_multiset(std::size_t n, std::size_t k,
                       const std::function<void(const DivisorMonomial&, const Integer&)>& visit) {
  DivisorMonomial mono;
  std::function<void(int)> rec = [&](int from) {
    if (mono.size() == k) {
      Integer coeff = factorial(k);
      for (std::size_t i = 0; i < mono.size();) {
        std::size_t j = i;
        while (j < mono.size() && mono[j] == mono[i]) ++j;
        coeff /= factorial(j - i);
        i = j;
      }
      visit(mono, coeff);
      return;
    }
    for (int r = from; r < static_cast<int>(n); ++r) {
      mono.push_back(r);
      rec(r);
      mono.pop_back();
    }
  };
  rec(0);
}

}  // namespace

ChowRing::ChowRing(Fan fan, std::optional<unsigned> seed)
    : fan_(std::move(fan)), seed_(seed), rng_(seed.value_or(0)) {
  require_smooth_complete(fan_);
}

Integer ChowRing::intersect(DivisorMonomial mono) const {
  if (mono.size() != fan_.dim())
    throw Error("monomial has " + std::to_string(mono.size()) + " factors, expected " +
                std::to_string(fan_.dim()));
  for (int r : mono)
    if (r < 0 || r >= static_cast<int>(fan_.num_rays()))
      throw Error("ray index " + std::to_string(r) + " out of range");
  std::sort(mono.begin(), mono.end());
  return evaluate(mono);
}

Integer ChowRing::evaluate(const DivisorMonomial& mono) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(mono); it != memo_.end()) return it->second;
  }

  IndexSet support = mono;
  support.erase(std::unique(support.begin(), support.end()), support.end());
  Integer result = 0;
  if (!fan_.is_cone(support)) {
    result = 0;
  } else if (support.size() == mono.size()) {
    result = 1;
  } else {
    IndexSet repeated;
    for (std::size_t i = 1; i < mono.size(); ++i)
      if (mono[i] == mono[i - 1] && (repeated.empty() || repeated.back() != mono[i]))
        repeated.push_back(mono[i]);
    const RayMask s = to_mask(support);
    std::vector<std::size_t> cones;
    for (std::size_t k = 0; k < fan_.max_cones().size(); ++k)
      if ((fan_.max_cone_masks()[k] & s) == s) cones.push_back(k);

    int rho = repeated.front();
    std::size_t k = cones.front();
    if (seed_) {
      std::lock_guard lock(mutex_);
      rho = repeated[std::uniform_int_distribution<std::size_t>(0, repeated.size() - 1)(rng_)];
      k = cones[std::uniform_int_distribution<std::size_t>(0, cones.size() - 1)(rng_)];
    }
    const auto& cone = fan_.max_cones()[k];
    const auto pos = std::find(cone.begin(), cone.end(), rho) - cone.begin();
    const IntVector& m = fan_.dual_basis(k)[pos];

    // D_ρ = −Σ_{ρ′ ∉ σ} ⟨m, u_ρ′⟩ D_ρ′.
    DivisorMonomial rest = mono;
    rest.erase(std::find(rest.begin(), rest.end(), rho));
    const RayMask cone_mask = fan_.max_cone_masks()[k];
    for (std::size_t r = 0; r < fan_.num_rays(); ++r) {
      if (cone_mask >> r & 1) continue;
      const Integer pairing = dot(m, fan_.ray(static_cast<int>(r)));
      if (pairing == 0) continue;
      DivisorMonomial next = rest;
      next.insert(std::upper_bound(next.begin(), next.end(), static_cast<int>(r)), static_cast<int>(r));
      result -= pairing * evaluate(next);
    }
  }

  std::lock_guard lock(mutex_);
  memo_.emplace(mono, result);
  return result;
}

Integer intersection_number(const Fan& fan, const DivisorMonomial& mono) {
  return ChowRing(fan).intersect(mono);
}

Integer c1_top(const Fan& fan) {
  const ChowRing ring(fan);
  Integer total = 0;
  for_each_multiset(fan.num_rays(), fan.dim(), [&](const DivisorMonomial& mono, const Integer& c) {
    total += c * ring.intersect(mono);
  });
  return total;
}

Integer c1sq_c2(const Fan& fan) {
  const ChowRing ring(fan);
  if (fan.dim() < 2) throw Error("c2 needs dimension at least 2");
  const int n = static_cast<int>(fan.num_rays());
  Integer total = 0;
  for_each_multiset(fan.num_rays(), fan.dim() - 2, [&](const DivisorMonomial& mono, const Integer& c) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        DivisorMonomial full = mono;
        full.push_back(a);
        full.push_back(b);
        total += c * ring.intersect(full);
      }
  });
  return total;
}

Integer top_chern_number(const Fan& fan) {
  const ChowRing ring(fan);
  const int n = static_cast<int>(fan.num_rays());
  Integer total = 0;
  DivisorMonomial subset;
  std::function<void(int)> rec = [&](int from) {
    if (subset.size() == fan.dim()) {
      total += ring.intersect(subset);
      return;
    }
    for (int r = from; r < n; ++r) {
      subset.push_back(r);
      rec(r + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return total;
}

Integer h0_tangent(const Fan& fan) {
  require_smooth_complete(fan);
  const auto& rays = fan.rays();
  Integer total = fan.dim();
  for (std::size_t rho = 0; rho < rays.size(); ++rho) {
    std::vector<Integer> bounds(rays.size(), 0);
    std::vector<bool> equality(rays.size(), false);
    bounds[rho] = -1;
    equality[rho] = true;
    if (!is_bounded_polyhedron(rays, equality))
      throw InternalError("root region of ray " + std::to_string(rho) + " is unbounded");
    total += polyhedron_lattice_points(rays, bounds, equality).size();
  }
  return total;
}

}  // namespace wfatlas
