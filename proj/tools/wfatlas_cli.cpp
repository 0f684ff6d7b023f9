#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wfatlas/birational.hpp"
#include "wfatlas/classify.hpp"
#include "wfatlas/cohomology.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/intersection.hpp"
#include "wfatlas/isomorphism.hpp"

using namespace wfatlas;
using nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fan load_fan(const std::string& path) { return fan_from_json(read_input(path)); }

ordered_json number(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

ordered_json fan_json(const Fan& f) { return ordered_json::parse(to_json(f)); }

IndexSet parse_collection(const std::string& text) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("bad collection '" + text + "'");
    }
  }
  if (out.empty()) throw Error("empty collection");
  return out;
}

ordered_json move_json(const MoveRecord& m) {
  ordered_json j;
  j["kind"] = m.kind == MoveKind::Flop ? "flop" : "blowdown";
  j["collection"] = m.collection;
  j["label"] = m.label;
  if (m.kind == MoveKind::Blowdown) {
    j["regular"] = m.regular;
    j["multiplicity"] = number(m.multiplicity);
    j["center_dim"] = m.center_dim;
  } else {
    j["self_flop"] = m.self_flop;
  }
  j["result_rank"] = m.result_rank;
  if (m.result_collections) j["result_collections"] = *m.result_collections;
  if (m.result_weak_fano) j["result_weak_fano"] = *m.result_weak_fano;
  if (m.result_fano) j["result_fano"] = *m.result_fano;
  j["result"] = fan_json(m.result);
  return j;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void run_invariants(const std::string& path) {
  const Fan f = load_fan(path);
  ordered_json j;
  j["dim"] = f.dim();
  j["rays"] = f.num_rays();
  j["max_cones"] = f.max_cones().size();
  j["smooth"] = f.is_smooth();
  j["complete"] = f.is_complete();
  if (f.is_smooth() && f.is_complete()) {
    j["picard_rank"] = picard_rank(f);
    j["primitive_collections"] = f.primitive_collections().size();
    j["weak_fano"] = is_weak_fano(f);
    j["fano"] = is_fano(f);
    j["c1_top"] = number(c1_top(f));
    if (f.dim() >= 2) j["c1sq_c2"] = number(c1sq_c2(f));
    j["top_chern"] = number(top_chern_number(f));
    j["h0_tangent"] = number(h0_tangent(f));
  }
  print(j);
}

void run_iso(const std::string& a, const std::string& b) {
  const auto iso = find_isomorphism(load_fan(a), load_fan(b));
  if (!iso) {
    std::cout << "NOT ISOMORPHIC\n";
    return;
  }
  std::cout << "ISOMORPHIC\n";
  for (std::size_t r = 0; r < iso->matrix.rows(); ++r) {
    for (std::size_t c = 0; c < iso->matrix.cols(); ++c) std::cout << (c ? " " : "") << iso->matrix(r, c);
    std::cout << "\n";
  }
}

void run_moves(const std::string& path) {
  const auto report = enumerate_moves(load_fan(path));
  ordered_json j;
  j["moves"] = ordered_json::array();
  for (const auto& m : report.moves) j["moves"].push_back(move_json(m));
  j["non_extremal"] = report.non_extremal;
  print(j);
}

void run_flop(const std::string& path, const std::string& collection, bool formal) {
  const auto m = flop(load_fan(path), parse_collection(collection), formal);
  ordered_json j;
  j["collection"] = m.collection;
  j["targets"] = m.targets;
  j["result_collections"] = m.result.primitive_collections().size();
  j["intermediate"] = fan_json(m.intermediate);
  j["result"] = fan_json(m.result);
  print(j);
}

void run_blowdown(const std::string& path, const std::string& collection) {
  const auto m = blowdown(load_fan(path), parse_collection(collection));
  ordered_json j;
  j["collection"] = m.collection;
  j["ray"] = m.ray;
  j["multiplicity"] = number(m.multiplicity);
  j["regular"] = m.regular;
  if (m.result.num_rays() == m.result.dim() + 1) {
    ordered_json w = ordered_json::array();
    const auto weights = weighted_projective_weights(m.result);
    for (const auto& q : weights) w.push_back(number(q));
    j["weights"] = w;
    j["gorenstein_fano"] = gorenstein_fano_wps(weights);
  }
  j["result"] = fan_json(m.result);
  print(j);
}

void run_bott(const std::string& path) {
  const auto report = bott_converse_check(load_fan(path));
  ordered_json j;
  j["fano"] = report.fano;
  j["wall_collision"] = report.wall_collision;
  j["h1_omega1"] = number(report.h1_omega1);
  print(j);
}

void run_construct(const std::string& family, const std::string& params) {
  Fan f;
  if (family == "kleinschmidt" || family == "kl")
    f = kleinschmidt(parse_kleinschmidt(params));
  else if (family == "pb")
    f = projective_bundle(parse_projective_bundle(params));
  else if (family == "batyrev" || family == "bc")
    f = batyrev(parse_batyrev(params));
  else
    throw Error("unknown family '" + family + "'");
  std::cout << to_json(f) << "\n";
}

void run_classify(int dim, int rank, const std::string& format, const std::string& out, bool verify) {
  const auto fmt = parse_table_format(format);
  const std::string table = export_table(classify(dim, rank, verify), fmt);
  if (out.empty()) {
    std::cout << table;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error("cannot write " + out);
  file << table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth weak Fano toric varieties of Picard rank 2 and 3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", wfatlas_version());

  int dim = 0, rank = 0;
  std::string format = "csv", out;
  bool verify = false;
  auto* cls = app.add_subcommand("classify", "Classify and print a table");
  cls->add_option("--dim", dim, "Dimension")->required();
  cls->add_option("--rank", rank, "Picard rank (2 or 3)")->required();
  cls->add_option("--format", format, "csv, json or markdown");
  cls->add_option("--out", out, "Output path");
  cls->add_flag("--verify", verify, "Check all pairs are non-isomorphic");

  std::string fan_a, fan_b, collection, family, params;
  bool formal = false;
  auto* inv = app.add_subcommand("invariants", "Numerical invariants of a fan");
  inv->add_option("fan", fan_a, "Fan JSON file or -")->required();
  auto* iso = app.add_subcommand("iso", "Decide toric isomorphism");
  iso->add_option("a", fan_a)->required();
  iso->add_option("b", fan_b)->required();
  auto* mv = app.add_subcommand("moves", "All blowdowns and flops");
  mv->add_option("fan", fan_a)->required();
  auto* fl = app.add_subcommand("flop", "Flop along a primitive collection");
  fl->add_option("fan", fan_a)->required();
  fl->add_option("--collection", collection, "Ray indices, e.g. 2,3")->required();
  fl->add_flag("--formal", formal, "Skip the extremality requirement");
  auto* bd = app.add_subcommand("blowdown", "Blow down along a primitive collection");
  bd->add_option("fan", fan_a)->required();
  bd->add_option("--collection", collection, "Ray indices, e.g. 0,1")->required();
  auto* bt = app.add_subcommand("bott", "Fano test, wall collisions and H^1(Omega^1(-K))");
  bt->add_option("fan", fan_a)->required();
  auto* con = app.add_subcommand("construct", "Build a fan from constructor parameters");
  con->add_option("family", family, "kleinschmidt, pb or batyrev")->required();
  con->add_option("params", params, "Parameter tuple")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cls) run_classify(dim, rank, format, out, verify);
    if (*inv) run_invariants(fan_a);
    if (*iso) run_iso(fan_a, fan_b);
    if (*mv) run_moves(fan_a);
    if (*fl) run_flop(fan_a, collection, formal);
    if (*bd) run_blowdown(fan_a, collection);
    if (*bt) run_bott(fan_a);
    if (*con) run_construct(family, params);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    std::cerr << "error: " << msg << "\n";
    return 1;
  }
  return 0;
}
