#include "wfatlas/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wfatlas/error.hpp"
#include "wfatlas/polytope.hpp"

namespace wfatlas {

namespace {

void require_smooth_complete(const Fan& fan) {
  if (!fan.is_smooth() || !fan.is_complete()) throw Error("cohomology needs a smooth complete fan");
}

class ComplexCache {
 public:
  explicit ComplexCache(const Fan& fan) : fan_(fan) {}

  const std::vector<Integer>& get(RayMask active) {
    auto it = cache_.find(active);
    if (it == cache_.end()) it = cache_.emplace(active, support_complex_cohomology(fan_, active)).first;
    return it->second;
  }

 private:
  const Fan& fan_;
  std::map<RayMask, std::vector<Integer>> cache_;
};

// Integer points of the bounding box of the Cartier data, grown by `expansion`.
std::vector<IntVector> search_box(const TorusDivisor& d, int expansion) {
  const auto& data = d.cartier_data();
  const std::size_t n = d.fan().dim();
  IntVector lo = data.front(), hi = data.front();
  for (const auto& m : data)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], m[i]);
      hi[i] = std::max(hi[i], m[i]);
    }
  for (std::size_t i = 0; i < n; ++i) lo[i] -= expansion, hi[i] += expansion;
  std::vector<IntVector> out;
  IntVector m = lo;
  while (true) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < n && m[i] == hi[i]) m[i] = lo[i], ++i;
    if (i == n) return out;
    ++m[i];
  }
}

std::vector<Integer> minus_k_minus(const Fan& fan, std::size_t rho) {
  std::vector<Integer> a(fan.num_rays(), 1);
  a[rho] = 0;
  return a;
}

}  // namespace

RayMask active_rays(const TorusDivisor& d, const IntVector& m) {
  RayMask out = 0;
  const auto& rays = d.fan().rays();
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (dot(m, rays[r]) < -d.coeffs()[r]) out |= RayMask{1} << r;
  return out;
}

std::vector<Integer> support_complex_cohomology(const Fan& fan, RayMask active) {
  const std::size_t d = fan.dim();
  // faces[k] holds the cones with k rays, all of them active.
  std::vector<std::vector<RayMask>> faces(d + 1);
  faces[0] = {0};
  std::set<RayMask> seen;
  for (RayMask cone : fan.max_cone_masks()) {
    const RayMask top = cone & active;
    for (RayMask s = top; s != 0; s = (s - 1) & top)
      if (seen.insert(s).second) faces[std::popcount(s)].push_back(s);
  }
  for (auto& f : faces) std::sort(f.begin(), f.end());

  // rank[k] = rank of the boundary C_k → C_{k−1}.
  std::vector<std::size_t> rank(d + 2, 0);
  for (std::size_t k = 1; k <= d; ++k) {
    if (faces[k].empty()) continue;
    IntMatrix boundary(faces[k - 1].size(), faces[k].size());
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      int sign = 1;
      for (int r : from_mask(faces[k][j])) {
        const RayMask facet = faces[k][j] & ~(RayMask{1} << r);
        const auto row = std::lower_bound(faces[k - 1].begin(), faces[k - 1].end(), facet) -
                         faces[k - 1].begin();
        boundary(row, j) = sign;
        sign = -sign;
      }
    }
    rank[k] = rank_of(boundary);
  }
  std::vector<Integer> out(d + 1);
  for (std::size_t k = 0; k <= d; ++k)
    out[k] = Integer(faces[k].size()) - Integer(rank[k]) - Integer(rank[k + 1]);
  return out;
}

Integer graded_cohomology(const TorusDivisor& d, const IntVector& m, int i) {
  require_smooth_complete(d.fan());
  if (i < 0 || i > static_cast<int>(d.fan().dim())) return 0;
  return support_complex_cohomology(d.fan(), active_rays(d, m))[i];
}

std::vector<Integer> line_bundle_cohomology(const TorusDivisor& d, int expansion) {
  require_smooth_complete(d.fan());
  ComplexCache cache(d.fan());
  std::vector<Integer> total(d.fan().dim() + 1, 0);
  for (const auto& m : search_box(d, expansion)) {
    const auto& h = cache.get(active_rays(d, m));
    for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
  }
  return total;
}

Integer h1_omega1_anticanonical(const Fan& fan) {
  require_smooth_complete(fan);
  const auto k = anticanonical(fan);
  if (!is_nef(k)) throw Error("anticanonical divisor is not nef");
  const auto p = divisor_polytope(k);
  const auto pts = lattice_points(p);
  const Integer d = fan.dim();
  Integer total = 0;
  for (const auto& face : face_lattice(p)) {
    std::vector<IntVector> gens;
    for (int r : normal_cone(p, face)) gens.push_back(fan.ray(r));
    Integer rays_in_cone = 0;
    for (const auto& u : fan.rays())
      if (!gens.empty() && in_rational_cone(gens, u)) ++rays_in_cone;
    const Integer term = rays_in_cone - d + face.dim;
    if (term < 0) throw InternalError("negative face term " + term.str());
    Integer interior = 0;
    for (const auto& m : pts)
      if (p.tight_set(m) == face.tight) ++interior;
    total += interior * term;
  }
  return total;
}

Integer h1_omega1_ishida(const Fan& fan, int expansion) {
  require_smooth_complete(fan);
  const auto k = anticanonical(fan);
  if (!is_nef(k)) throw Error("anticanonical divisor is not nef");
  std::vector<TorusDivisor> minus;
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) minus.emplace_back(fan, minus_k_minus(fan, rho));

  ComplexCache cache(fan);
  Integer total = 0;
  for (const auto& m : search_box(k, expansion)) {
    const Integer h0 = cache.get(active_rays(k, m))[0];
    Integer target = 0;
    std::vector<IntVector> image;
    for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) {
      const auto& h = cache.get(active_rays(minus[rho], m));
      // H^0(O_{D_ρ}(−K))_m from 0 → O(−K − D_ρ) → O(−K) → O_{D_ρ}(−K) → 0.
      target += h0 - h[0] + h[1];
      if (h0 == 1 && h[0] == 0) image.push_back(fan.ray(static_cast<int>(rho)));
    }
    total += target - Integer(rank_of(image));
  }
  return total;
}

BottReport bott_converse_check(const Fan& fan) {
  require_smooth_complete(fan);
  if (!is_weak_fano(fan)) throw Error("fan is not weak Fano");
  BottReport report;
  report.fano = is_fano(fan);
  report.wall_collision = !wall_collisions(anticanonical(fan)).empty();
  report.h1_omega1 = h1_omega1_anticanonical(fan);
  if (report.fano == report.wall_collision || report.fano != (report.h1_omega1 == 0))
    throw InternalError("Fano test, wall collisions and H^1 disagree (fano=" +
                        std::string(report.fano ? "true" : "false") +
                        ", collision=" + (report.wall_collision ? "true" : "false") +
                        ", h1=" + report.h1_omega1.str() + ")");
  return report;
}

}  // namespace wfatlas
