#pragma once

#include "wfatlas/constructors.hpp"
#include "wfatlas/isomorphism.hpp"

namespace fixtures {

// Rank 3 weak Fano classes of dimension d: projective bundles, then Batyrev fans.
inline std::vector<wfatlas::Fan> rank3_classes(int d) {
  std::vector<wfatlas::Fan> pb, bc, out;
  for (const auto& c : wfatlas::enumerate_projective_bundles_weak_fano(d)) pb.push_back(c.fan);
  for (const auto& c : wfatlas::enumerate_batyrev_weak_fano(d)) bc.push_back(c.fan);
  for (const auto& f : wfatlas::dedupe(pb)) out.push_back(f);
  for (const auto& f : wfatlas::dedupe(bc)) out.push_back(f);
  return out;
}

inline std::vector<wfatlas::Fan> rank2_classes(int d) {
  std::vector<wfatlas::Fan> out;
  for (const auto& c : wfatlas::enumerate_kleinschmidt_weak_fano(d)) out.push_back(c.fan);
  return out;
}

}  // namespace fixtures
