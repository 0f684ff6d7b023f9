#pragma once

// Toric isomorphism of smooth complete fans via GL(d, Z) search.

#include <optional>
#include <string>
#include <vector>

#include "wfatlas/fan.hpp"

namespace wfatlas {

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t rays = 0;
  std::size_t cones = 0;
  std::vector<std::pair<std::size_t, long>> relations;  // sorted (|P|, deg P)
  std::vector<std::size_t> ray_cone_counts;             // sorted

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Fan& fan);

struct Isomorphism {
  IntMatrix matrix;          // A with A·u_i = u'_{ray_map[i]}
  std::vector<int> ray_map;  // X ray index -> Y ray index
};

/// First unimodular A mapping rays onto rays and maximal cones onto maximal cones.
std::optional<Isomorphism> find_isomorphism(const Fan& x, const Fan& y);
std::optional<IntMatrix> are_isomorphic(const Fan& x, const Fan& y);

/// Indices of the first representative of each isomorphism class, in input order.
std::vector<std::size_t> dedupe_indices(const std::vector<Fan>& fans);
std::vector<Fan> dedupe(const std::vector<Fan>& fans);

/// Named fans searchable up to isomorphism.
class FanCatalog {
 public:
  void add(std::string id, Fan fan);
  /// Id of the first entry isomorphic to fan, if any.
  std::optional<std::string> lookup(const Fan& fan) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string id;
    Fan fan;
    Fingerprint print;
  };
  std::vector<Entry> entries_;
};

}  // namespace wfatlas
