#pragma once

// Classification runs for Picard rank 2 and 3, ID assignment and table export.

#include <string>
#include <vector>

#include "wfatlas/birational.hpp"
#include "wfatlas/fan.hpp"

namespace wfatlas {

enum class Family { KL, PB, BC };

std::string to_string(Family f);

struct VarietyRecord {
  std::string id;  // "KL(3,{1})", "3.PB-4", "4.BC-19"
  Family family = Family::KL;
  std::string params;
  Fan fan;
  Integer c1_top;
  Integer c1sq_c2;
  Integer h0_tangent;
  bool fano = false;
  Integer h1_omega1;
  MovesReport report;
  /// Sorted distinct tokens: "blowdown:<target>@<center dim>", "flop:<id>", "flop:self".
  /// Blowdowns are listed when regular or when the target has Picard rank 1.
  std::vector<std::string> moves;
};

struct ClassificationRun {
  int dim = 0;
  int rank = 0;
  std::vector<VarietyRecord> records;
  std::string version;
  std::string provenance;  // candidate counts per family
};

/// Enumerates, dedupes, computes invariants and moves, and assigns IDs.
/// With verify, also checks every pair of records is non-isomorphic.
ClassificationRun classify(int d, int rank, bool verify = false);

enum class TableFormat { Csv, Json, Markdown };

TableFormat parse_table_format(const std::string& name);

/// Columns: id, params, c1_top, c1sq_c2 (d ≥ 4), h0_tangent (d = 3), fano, moves.
/// JSON additionally carries h1_omega1 and the fan of every record.
std::string export_table(const ClassificationRun& run, TableFormat format);

std::string wfatlas_version();

}  // namespace wfatlas
