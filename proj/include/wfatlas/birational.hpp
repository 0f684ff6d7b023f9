#pragma once

// Star subdivisions, blowdowns, flops and the moves available on a fan.

#include <optional>
#include <string>
#include <vector>

#include "wfatlas/fan.hpp"

namespace wfatlas {

class FanCatalog;

/// Replaces every maximal cone τ ⊇ σ by the cones {u} ∪ τ∖{x}, x ∈ σ. The new ray is
/// appended last. u defaults to the primitive part of the sum of the rays of σ.
Fan star_subdivision(const Fan& fan, const IndexSet& sigma,
                     const std::optional<IntVector>& u = std::nullopt);

struct BlowdownMove {
  Fan source;
  IndexSet collection;  // P, in source indices
  int ray = -1;         // u with Σ_P x = a·u, removed by the blowdown
  Integer multiplicity;  // a
  Fan result;
  bool regular = false;  // a = 1 and result smooth
};

/// Inverse of a star subdivision along Cone(P). Throws "no blowdown along P" unless the
/// primitive relation of P has the form Σ_P x = a·u.
BlowdownMove blowdown(const Fan& fan, const IndexSet& collection);

struct FlopMove {
  Fan source;
  IndexSet collection;  // P = {x_1..x_l}
  IndexSet targets;     // σ(P) = {y_1..y_l}
  Fan intermediate;     // star subdivision along Cone(y_1..y_l)
  Fan result;
};

/// Requires Σ_P x = Σ y over a cone of |P| rays, and r(P) extremal unless `formal`.
FlopMove flop(const Fan& fan, const IndexSet& collection, bool formal = false);

/// Reduced weights (sorted) of a simplicial complete fan with dim + 1 rays.
std::vector<Integer> weighted_projective_weights(const Fan& fan);
/// Each weight divides the sum.
bool gorenstein_fano_wps(const std::vector<Integer>& weights);

enum class MoveKind { Blowdown, Flop };

struct MoveRecord {
  MoveKind kind = MoveKind::Blowdown;
  IndexSet collection;
  Fan result;
  bool regular = false;        // blowdowns only
  Integer multiplicity = 1;    // blowdowns only
  int center_dim = 0;          // blowdowns: dim − |P|
  std::size_t result_rank = 0;
  std::optional<std::size_t> result_collections;  // smooth results only
  std::optional<bool> result_weak_fano;
  std::optional<bool> result_fano;
  bool self_flop = false;
  /// Catalog id, "KL(d,{a})" for rank 2, "P(q_0,..)" for rank 1, else empty.
  std::string label;
};

struct MovesReport {
  std::vector<MoveRecord> moves;          // in primitive collection order
  std::vector<IndexSet> non_extremal;     // balanced relations skipped as non-extremal
};

/// Runs every blowdown and flop available from the primitive collections.
MovesReport enumerate_moves(const Fan& fan, const FanCatalog* catalog = nullptr);

std::string kleinschmidt_id(int d, const std::vector<int>& a);  // "KL(3,{0,1})"

}  // namespace wfatlas
