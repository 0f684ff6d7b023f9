#pragma once

// Fan recipes for Picard rank 2 and 3 and the weak Fano enumerators.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wfatlas/fan.hpp"

namespace wfatlas {

/// P(O ⊕ O(a_1) ⊕ … ⊕ O(a_k)) over P^r with r = d_prime − k.
struct KleinschmidtParams {
  int d_prime = 0;
  std::vector<int> a;

  int r() const { return d_prime - static_cast<int>(a.size()); }
  auto operator<=>(const KleinschmidtParams&) const = default;
};

/// P(O ⊕ O(b_1, c_1) ⊕ …) over the Kleinschmidt variety (d_prime, a).
struct ProjectiveBundleParams {
  int d_prime = 0;
  std::vector<int> a;
  std::vector<std::pair<int, int>> pairs;

  int dim() const { return d_prime + static_cast<int>(pairs.size()); }
  auto operator<=>(const ProjectiveBundleParams&) const = default;
};

struct BatyrevParams {
  std::array<int, 5> p{};
  std::vector<int> b;  // length p[3]
  std::vector<int> c;  // length p[2] − 1, indices 2..p[2]

  int dim() const { return p[0] + p[1] + p[2] + p[3] + p[4] - 3; }
  auto operator<=>(const BatyrevParams&) const = default;
};

std::string to_string(const KleinschmidtParams& p);      // "(3, {0, 1})"
std::string to_string(const ProjectiveBundleParams& p);  // "(2, {0}, {{1, 1}})"
std::string to_string(const BatyrevParams& p);           // "({1, 1, 2, 1, 1}, {0}, {0})"

/// Parsers accept the same notation with arbitrary spacing; the batyrev form also
/// accepts ';' between the three parts.
KleinschmidtParams parse_kleinschmidt(const std::string& text);
ProjectiveBundleParams parse_projective_bundle(const std::string& text);
BatyrevParams parse_batyrev(const std::string& text);

/// Rays: x_{d'−r+1}, x_1..x_{d'−r}, y_1..y_{r+1}.
Fan kleinschmidt(const KleinschmidtParams& params);
/// Rays: x_{d'−r+1}, x_1..x_{d'−r}, y_1..y_{r+1}, z_1..z_{k+1}.
Fan projective_bundle(const ProjectiveBundleParams& params);
/// Rays grouped X_0 (v), X_1 (y), X_2 (z), X_3 (t), X_4 (u), each in index order.
Fan batyrev(const BatyrevParams& params);

/// Ray index ranges of the groups in the constructor output.
std::vector<IndexSet> kleinschmidt_groups(const KleinschmidtParams& params);
std::vector<IndexSet> projective_bundle_groups(const ProjectiveBundleParams& params);
std::vector<IndexSet> batyrev_groups(const BatyrevParams& params);

/// Expected relation vectors per group-collection, from the closed formulas.
/// Kleinschmidt: 𝒳, 𝒴. Projective bundle: 𝒳, 𝒴, 𝒵. Batyrev: P_0..P_4.
std::vector<std::vector<Integer>> kleinschmidt_expected_relations(const KleinschmidtParams& p);
std::vector<std::vector<Integer>> projective_bundle_expected_relations(
    const ProjectiveBundleParams& p);
std::vector<std::vector<Integer>> batyrev_expected_relations(const BatyrevParams& p);

/// Parameters of the Kleinschmidt fan isomorphic to a smooth complete fan of Picard rank 2.
KleinschmidtParams identify_kleinschmidt(const Fan& fan);

template <typename Params>
struct Candidate {
  Params params;
  Fan fan;
};

std::vector<Candidate<KleinschmidtParams>> enumerate_kleinschmidt_weak_fano(int d);
std::vector<Candidate<ProjectiveBundleParams>> enumerate_projective_bundles_weak_fano(int d);
std::vector<Candidate<BatyrevParams>> enumerate_batyrev_weak_fano(int d);

}  // namespace wfatlas
