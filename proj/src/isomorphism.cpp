#include "wfatlas/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "wfatlas/error.hpp"

namespace wfatlas {

namespace {

std::vector<std::size_t> cone_counts(const Fan& fan) {
  std::vector<std::size_t> counts(fan.num_rays(), 0);
  for (const auto& cone : fan.max_cones())
    for (int i : cone) ++counts[i];
  return counts;
}

}  // namespace

Fingerprint fingerprint(const Fan& fan) {
  Fingerprint f;
  f.dim = fan.dim();
  f.rays = fan.num_rays();
  f.cones = fan.max_cones().size();
  for (const auto& r : fan.primitive_relations())
    f.relations.emplace_back(r.collection.size(), static_cast<long>(r.degree));
  std::sort(f.relations.begin(), f.relations.end());
  f.ray_cone_counts = cone_counts(fan);
  std::sort(f.ray_cone_counts.begin(), f.ray_cone_counts.end());
  return f;
}

std::optional<Isomorphism> find_isomorphism(const Fan& x, const Fan& y) {
  if (x.dim() != y.dim()) throw Error("isomorphism test needs fans of equal dimension");
  if (x.num_rays() != y.num_rays() || x.max_cones().size() != y.max_cones().size())
    return std::nullopt;
  if (x.max_cones().empty()) return std::nullopt;
  const std::size_t d = x.dim();

  const IndexSet& base = x.max_cones().front();
  std::vector<IntVector> base_rays;
  for (int i : base) base_rays.push_back(x.ray(i));
  const auto base_inverse = integral_inverse(IntMatrix::from_columns(base_rays));
  if (!base_inverse) throw Error("isomorphism test needs smooth fans");

  const auto x_counts = cone_counts(x);
  const auto y_counts = cone_counts(y);
  std::map<IntVector, int> y_index;
  for (std::size_t i = 0; i < y.num_rays(); ++i) y_index.emplace(y.rays()[i], static_cast<int>(i));
  const std::unordered_set<RayMask> y_cones(y.max_cone_masks().begin(), y.max_cone_masks().end());

  for (const auto& target : y.max_cones()) {
    IndexSet perm = target;
    do {
      bool counts_match = true;
      for (std::size_t i = 0; i < d && counts_match; ++i)
        counts_match = x_counts[base[i]] == y_counts[perm[i]];
      if (!counts_match) continue;

      std::vector<IntVector> image_rays;
      for (int i : perm) image_rays.push_back(y.ray(i));
      const IntMatrix a = IntMatrix::from_columns(image_rays) * *base_inverse;

      std::vector<int> ray_map(x.num_rays());
      bool ok = true;
      for (std::size_t i = 0; i < x.num_rays() && ok; ++i) {
        const auto it = y_index.find(a.apply(x.rays()[i]));
        ok = it != y_index.end();
        if (ok) ray_map[i] = it->second;
      }
      if (!ok) continue;
      for (const auto& cone : x.max_cones()) {
        RayMask m = 0;
        for (int i : cone) m |= RayMask{1} << ray_map[i];
        if (!y_cones.count(m)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const Integer det = determinant(a);
      if (det != 1 && det != -1) continue;
      return Isomorphism{a, std::move(ray_map)};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::optional<IntMatrix> are_isomorphic(const Fan& x, const Fan& y) {
  auto iso = find_isomorphism(x, y);
  if (!iso) return std::nullopt;
  return iso->matrix;
}

std::vector<std::size_t> dedupe_indices(const std::vector<Fan>& fans) {
  std::vector<Fingerprint> prints;
  for (const auto& f : fans) prints.push_back(fingerprint(f));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < fans.size(); ++i) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](std::size_t j) {
      return fans[j].dim() == fans[i].dim() && prints[j] == prints[i] &&
             find_isomorphism(fans[j], fans[i]).has_value();
    });
    if (!duplicate) kept.push_back(i);
  }
  return kept;
}

std::vector<Fan> dedupe(const std::vector<Fan>& fans) {
  std::vector<Fan> out;
  for (std::size_t i : dedupe_indices(fans)) out.push_back(fans[i]);
  return out;
}

void FanCatalog::add(std::string id, Fan fan) {
  Fingerprint print = fingerprint(fan);
  entries_.push_back({std::move(id), std::move(fan), std::move(print)});
}

std::optional<std::string> FanCatalog::lookup(const Fan& fan) const {
  const Fingerprint print = fingerprint(fan);
  for (const auto& e : entries_)
    if (e.fan.dim() == fan.dim() && e.print == print && find_isomorphism(e.fan, fan))
      return e.id;
  return std::nullopt;
}

}  // namespace wfatlas
