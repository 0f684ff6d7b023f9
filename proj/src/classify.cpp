#include "wfatlas/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "wfatlas/cohomology.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/intersection.hpp"
#include "wfatlas/isomorphism.hpp"
#include "wfatlas/parallel.hpp"

namespace wfatlas {

namespace {

using SortKey = std::vector<int>;

void append(SortKey& key, const std::vector<int>& xs) {
  key.push_back(static_cast<int>(xs.size()));
  key.insert(key.end(), xs.begin(), xs.end());
}

SortKey sort_key(const KleinschmidtParams& p) {
  SortKey key{p.d_prime};
  append(key, p.a);
  return key;
}

SortKey sort_key(const ProjectiveBundleParams& p) {
  SortKey key{p.d_prime};
  append(key, p.a);
  std::vector<int> b, c;
  for (const auto& [bi, ci] : p.pairs) b.push_back(bi), c.push_back(ci);
  append(key, b);
  append(key, c);
  return key;
}

SortKey sort_key(const BatyrevParams& p) {
  SortKey key(p.p.begin(), p.p.end());
  append(key, p.b);
  append(key, p.c);
  return key;
}

struct Pending {
  Family family;
  std::string params;
  SortKey key;
  Fan fan;
};

template <typename Params>
std::vector<Pending> deduplicated(Family family, const std::vector<Candidate<Params>>& candidates) {
  std::vector<Fan> fans;
  for (const auto& c : candidates) fans.push_back(c.fan);
  std::vector<Pending> out;
  for (std::size_t i : dedupe_indices(fans))
    out.push_back({family, to_string(candidates[i].params), sort_key(candidates[i].params), fans[i]});
  return out;
}

std::string record_id(int d, const VarietyRecord& r, int number) {
  if (r.family == Family::KL) {
    const auto p = identify_kleinschmidt(r.fan);
    return kleinschmidt_id(p.d_prime, p.a);
  }
  return std::to_string(d) + "." + to_string(r.family) + "-" + std::to_string(number);
}

std::vector<std::string> move_tokens(const MovesReport& report) {
  std::set<std::string> tokens;
  for (const auto& m : report.moves) {
    if (m.kind == MoveKind::Blowdown) {
      if (!m.regular && m.result_rank != 1) continue;
      tokens.insert("blowdown:" + (m.label.empty() ? "unmatched" : m.label) + "@" +
                    std::to_string(m.center_dim));
    } else {
      tokens.insert(m.self_flop ? "flop:self" : "flop:" + (m.label.empty() ? "unmatched" : m.label));
    }
  }
  return {tokens.begin(), tokens.end()};
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::vector<std::string> header(int d) {
  std::vector<std::string> h{"id", "params", "c1_top"};
  if (d >= 4) h.push_back("c1sq_c2");
  if (d == 3) h.push_back("h0_tangent");
  h.push_back("fano");
  h.push_back("moves");
  return h;
}

std::vector<std::string> row(int d, const VarietyRecord& r) {
  std::vector<std::string> out{r.id, r.params, r.c1_top.str()};
  if (d >= 4) out.push_back(r.c1sq_c2.str());
  if (d == 3) out.push_back(r.h0_tangent.str());
  out.push_back(r.fano ? "true" : "false");
  out.push_back(join(r.moves, "; "));
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::KL:
      return "KL";
    case Family::PB:
      return "PB";
    case Family::BC:
      return "BC";
  }
  return "";
}

std::string wfatlas_version() { return "0.1.0"; }

ClassificationRun classify(int d, int rank, bool verify) {
  if (rank != 2 && rank != 3) throw Error("Picard rank must be 2 or 3");
  if (d < 2) throw Error("dimension must be at least 2");

  std::vector<Pending> pending;
  std::ostringstream provenance;
  if (rank == 2) {
    const auto kl = enumerate_kleinschmidt_weak_fano(d);
    provenance << "KL candidates " << kl.size();
    pending = deduplicated(Family::KL, kl);
  } else {
    // Projective bundles need a base of Picard rank 2, so dimension at least 3.
    const auto pb = d >= 3 ? enumerate_projective_bundles_weak_fano(d)
                           : std::vector<Candidate<ProjectiveBundleParams>>{};
    const auto bc = enumerate_batyrev_weak_fano(d);
    provenance << "PB candidates " << pb.size() << ", BC candidates " << bc.size();
    pending = deduplicated(Family::PB, pb);
    for (auto& p : deduplicated(Family::BC, bc)) pending.push_back(std::move(p));
    for (const auto& p : pending) {
      const std::size_t expected = p.family == Family::PB ? 3 : 5;
      if (p.fan.primitive_collections().size() != expected)
        throw InternalError(to_string(p.family) + p.params + " has " +
                            std::to_string(p.fan.primitive_collections().size()) +
                            " primitive collections");
    }
  }

  ClassificationRun run{d, rank, {}, "wfatlas " + wfatlas_version(), provenance.str()};
  run.records.resize(pending.size());
  parallel_for(pending.size(), [&](std::size_t i) {
    VarietyRecord& r = run.records[i];
    r.family = pending[i].family;
    r.params = pending[i].params;
    r.fan = pending[i].fan;
    r.c1_top = c1_top(r.fan);
    r.c1sq_c2 = c1sq_c2(r.fan);
    r.h0_tangent = h0_tangent(r.fan);
    const auto bott = bott_converse_check(r.fan);
    r.fano = bott.fano;
    r.h1_omega1 = bott.h1_omega1;
  });

  std::vector<std::size_t> order(pending.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::make_tuple(pending[x].family, !run.records[x].fano, std::cref(pending[x].key)) <
           std::make_tuple(pending[y].family, !run.records[y].fano, std::cref(pending[y].key));
  });
  std::vector<VarietyRecord> sorted;
  std::map<Family, int> counter;
  for (std::size_t i : order) {
    sorted.push_back(std::move(run.records[i]));
    sorted.back().id = record_id(d, sorted.back(), ++counter[sorted.back().family]);
  }
  run.records = std::move(sorted);

  if (verify)
    for (std::size_t i = 0; i < run.records.size(); ++i)
      for (std::size_t j = i + 1; j < run.records.size(); ++j)
        if (are_isomorphic(run.records[i].fan, run.records[j].fan))
          throw InternalError(run.records[i].id + " and " + run.records[j].id + " are isomorphic");

  FanCatalog catalog;
  for (const auto& r : run.records) catalog.add(r.id, r.fan);
  parallel_for(run.records.size(), [&](std::size_t i) {
    VarietyRecord& r = run.records[i];
    r.report = enumerate_moves(r.fan, &catalog);
    r.moves = move_tokens(r.report);
  });
  return run;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "markdown" || name == "md") return TableFormat::Markdown;
  throw Error("unknown table format '" + name + "'");
}

std::string export_table(const ClassificationRun& run, TableFormat format) {
  const auto head = header(run.dim);
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      std::vector<std::string> fields;
      for (const auto& h : head) fields.push_back(csv_field(h));
      out << join(fields, ",") << "\n";
      for (const auto& r : run.records) {
        fields.clear();
        for (const auto& f : row(run.dim, r)) fields.push_back(csv_field(f));
        out << join(fields, ",") << "\n";
      }
      break;
    }
    case TableFormat::Markdown: {
      out << "| " << join(head, " | ") << " |\n|";
      for (std::size_t i = 0; i < head.size(); ++i) out << " --- |";
      out << "\n";
      for (const auto& r : run.records) {
        std::string line = "|";
        for (const auto& c : row(run.dim, r)) {
          if (!c.empty()) line += " ";
          for (char ch : c) line += ch == '|' ? std::string("\\|") : std::string(1, ch);
          line += " |";
        }
        out << line << "\n";
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["dim"] = run.dim;
      j["rank"] = run.rank;
      j["version"] = run.version;
      j["provenance"] = run.provenance;
      j["records"] = nlohmann::ordered_json::array();
      for (const auto& r : run.records) {
        nlohmann::ordered_json rec;
        rec["id"] = r.id;
        rec["family"] = to_string(r.family);
        rec["params"] = r.params;
        rec["c1_top"] = r.c1_top.str();
        rec["c1sq_c2"] = r.c1sq_c2.str();
        rec["h0_tangent"] = r.h0_tangent.str();
        rec["fano"] = r.fano;
        rec["h1_omega1"] = r.h1_omega1.str();
        rec["moves"] = r.moves;
        auto details = nlohmann::ordered_json::array();
        for (const auto& m : r.report.moves) {
          nlohmann::ordered_json mj;
          mj["kind"] = m.kind == MoveKind::Flop ? "flop" : "blowdown";
          mj["collection"] = m.collection;
          mj["label"] = m.label;
          if (m.kind == MoveKind::Blowdown) {
            mj["regular"] = m.regular;
            mj["multiplicity"] = m.multiplicity.str();
            mj["center_dim"] = m.center_dim;
          } else {
            mj["self_flop"] = m.self_flop;
          }
          if (m.label.empty()) mj["fan"] = nlohmann::ordered_json::parse(to_json(m.result));
          details.push_back(mj);
        }
        rec["move_details"] = details;
        rec["fan"] = nlohmann::ordered_json::parse(to_json(r.fan));
        j["records"].push_back(rec);
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace wfatlas
