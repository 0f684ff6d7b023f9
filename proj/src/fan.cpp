#include "wfatlas/fan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "wfatlas/error.hpp"

namespace wfatlas {

RayMask to_mask(const IndexSet& s) {
  RayMask m = 0;
  for (int i : s) m |= RayMask{1} << i;
  return m;
}

IndexSet from_mask(RayMask m) {
  IndexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

struct Fan::Data {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<IndexSet> cones;
  std::vector<RayMask> masks;

  mutable std::once_flag smooth_once, complete_once, pc_once, rel_once, inv_once, dual_once;
  mutable bool smooth = false;
  mutable bool complete = false;
  mutable std::vector<IndexSet> collections;
  mutable std::vector<PrimitiveRelation> relations;
  mutable std::vector<std::vector<RationalVector>> inverses;
  mutable std::vector<std::optional<std::vector<IntVector>>> duals;
};

namespace {

std::vector<RationalVector> inverse_of_cone(const std::vector<IntVector>& rays,
                                            const IndexSet& cone, std::size_t dim) {
  // Rows of the inverse of the matrix whose columns are the cone's rays.
  std::vector<RationalVector> rows(dim, RationalVector(dim));
  std::vector<IntVector> basis;
  for (int i : cone) basis.push_back(rays[i]);
  for (std::size_t c = 0; c < dim; ++c) {
    IntVector e(dim);
    e[c] = 1;
    const auto coords = solve_in_basis(basis, e);
    for (std::size_t r = 0; r < dim; ++r) rows[r][c] = coords[r];
  }
  return rows;
}

}  // namespace

Fan::Fan() : data_(std::make_shared<Data>()) {}
Fan::Fan(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t Fan::dim() const { return data_->dim; }
std::size_t Fan::num_rays() const { return data_->rays.size(); }
const std::vector<IntVector>& Fan::rays() const { return data_->rays; }
const IntVector& Fan::ray(int i) const { return data_->rays.at(static_cast<std::size_t>(i)); }
const std::vector<IndexSet>& Fan::max_cones() const { return data_->cones; }
const std::vector<RayMask>& Fan::max_cone_masks() const { return data_->masks; }

bool Fan::is_smooth() const {
  std::call_once(data_->smooth_once, [this] {
    bool ok = true;
    for (const auto& cone : data_->cones) {
      std::vector<IntVector> cols;
      for (int i : cone) cols.push_back(data_->rays[i]);
      const Integer det = determinant(IntMatrix::from_columns(cols));
      if (det != 1 && det != -1) {
        ok = false;
        break;
      }
    }
    data_->smooth = ok;
  });
  return data_->smooth;
}

bool Fan::is_complete() const {
  std::call_once(data_->complete_once, [this] {
    std::map<RayMask, int> walls;
    for (RayMask m : data_->masks) {
      for (RayMask rest = m; rest; rest &= rest - 1) ++walls[m & ~(rest & -rest)];
    }
    data_->complete = !data_->masks.empty() &&
                      std::all_of(walls.begin(), walls.end(),
                                  [](const auto& kv) { return kv.second == 2; });
  });
  return data_->complete;
}

bool Fan::is_cone(RayMask s) const {
  return std::any_of(data_->masks.begin(), data_->masks.end(),
                     [s](RayMask c) { return (s & ~c) == 0; });
}

bool Fan::is_cone(const IndexSet& s) const {
  for (int i : s)
    if (i < 0 || static_cast<std::size_t>(i) >= num_rays()) throw Error("ray index out of range");
  return is_cone(to_mask(s));
}

const std::vector<IndexSet>& Fan::primitive_collections() const {
  std::call_once(data_->pc_once, [this] {
    const int n = static_cast<int>(num_rays());
    std::vector<RayMask> level{0};
    std::vector<IndexSet> found;
    while (!level.empty()) {
      std::set<RayMask> next;
      for (RayMask face : level) {
        const int start = face ? 64 - std::countl_zero(face) : 0;
        for (int i = start; i < n; ++i) {
          const RayMask cand = face | (RayMask{1} << i);
          if (is_cone(cand)) {
            next.insert(cand);
            continue;
          }
          bool minimal = true;
          for (RayMask rest = cand; rest && minimal; rest &= rest - 1)
            minimal = is_cone(cand & ~(rest & -rest));
          if (minimal) found.push_back(from_mask(cand));
        }
      }
      level.assign(next.begin(), next.end());
    }
    std::sort(found.begin(), found.end());
    data_->collections = std::move(found);
  });
  return data_->collections;
}

const std::vector<RationalVector>& Fan::cone_inverse(std::size_t k) const {
  std::call_once(data_->inv_once, [this] {
    for (const auto& cone : data_->cones)
      data_->inverses.push_back(inverse_of_cone(data_->rays, cone, data_->dim));
  });
  return data_->inverses.at(k);
}

const std::vector<IntVector>& Fan::dual_basis(std::size_t k) const {
  std::call_once(data_->dual_once, [this] {
    data_->duals.resize(data_->cones.size());
    for (std::size_t c = 0; c < data_->cones.size(); ++c) {
      const auto& inv = cone_inverse(c);
      std::vector<IntVector> rows;
      bool integral = true;
      for (const auto& row : inv) {
        IntVector out;
        for (const auto& q : row) {
          if (!is_integral(q)) {
            integral = false;
            break;
          }
          out.push_back(to_integer(q));
        }
        if (!integral) break;
        rows.push_back(std::move(out));
      }
      if (integral) data_->duals[c] = std::move(rows);
    }
  });
  const auto& dual = data_->duals.at(k);
  if (!dual) throw Error("maximal cone " + to_string(data_->cones[k]) + " is not smooth");
  return *dual;
}

IndexSet Fan::containing_cone(const IntVector& v) const {
  if (v.size() != dim()) throw Error("vector dimension does not match the fan");
  if (is_zero(v)) return {};
  for (std::size_t k = 0; k < data_->cones.size(); ++k) {
    const auto& inv = cone_inverse(k);
    IndexSet face;
    bool inside = true;
    for (std::size_t r = 0; r < dim() && inside; ++r) {
      Rational coeff = 0;
      for (std::size_t c = 0; c < dim(); ++c) coeff += inv[r][c] * v[c];
      if (coeff < 0) inside = false;
      else if (coeff > 0) face.push_back(data_->cones[k][r]);
    }
    if (inside) return face;
  }
  throw Error("fan not complete");
}

PrimitiveRelation Fan::primitive_relation(const IndexSet& collection) const {
  if (collection.empty()) throw Error("empty primitive collection");
  IntVector s(dim());
  for (int i : collection) s = add(s, ray(i));

  PrimitiveRelation rel;
  rel.collection = collection;
  std::sort(rel.collection.begin(), rel.collection.end());
  rel.relation_vector.assign(num_rays(), 0);
  for (int i : rel.collection) rel.relation_vector[i] += 1;
  rel.sigma = containing_cone(s);

  if (!rel.sigma.empty()) {
    std::vector<IntVector> basis;
    for (int i : rel.sigma) basis.push_back(ray(i));
    const auto coords = solve_in_span(basis, s);
    if (!coords) throw InternalError("sum not in the span of its containing cone");
    for (std::size_t j = 0; j < coords->size(); ++j) {
      const Rational& q = (*coords)[j];
      if (!is_integral(q) || q <= 0)
        throw Error("fan not smooth at σ(P) = " + to_string(rel.sigma));
      rel.coefficients.push_back(to_integer(q));
      rel.relation_vector[rel.sigma[j]] -= rel.coefficients.back();
    }
  }
  rel.degree = static_cast<long>(rel.collection.size());
  for (const auto& a : rel.coefficients) rel.degree -= a;
  return rel;
}

const std::vector<PrimitiveRelation>& Fan::primitive_relations() const {
  std::call_once(data_->rel_once, [this] {
    for (const auto& p : primitive_collections()) data_->relations.push_back(primitive_relation(p));
  });
  return data_->relations;
}

int Fan::find_ray(const IntVector& v) const {
  const auto it = std::find(data_->rays.begin(), data_->rays.end(), v);
  return it == data_->rays.end() ? -1 : static_cast<int>(it - data_->rays.begin());
}

bool Fan::operator==(const Fan& other) const {
  return dim() == other.dim() && rays() == other.rays() && max_cones() == other.max_cones();
}

Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
             bool check_intersections) {
  if (dim == 0) throw Error("fan dimension must be positive");
  if (rays.size() > 64) throw Error("fans with more than 64 rays are not supported");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim)
      throw Error("ray " + std::to_string(i) + " has wrong dimension");
    if (is_zero(rays[i])) throw Error("ray " + std::to_string(i) + " is zero");
    if (!is_primitive(rays[i]))
      throw Error("ray " + std::to_string(i) + " " + to_string(rays[i]) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[j] == rays[i])
        throw Error("duplicate ray " + to_string(rays[i]) + " at indices " + std::to_string(j) +
                    " and " + std::to_string(i));
  }

  RayMask used = 0;
  for (auto& cone : max_cones) {
    std::sort(cone.begin(), cone.end());
    if (cone.size() != dim)
      throw Error("cone " + to_string(cone) + " has " + std::to_string(cone.size()) +
                  " rays, expected " + std::to_string(dim));
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error("cone " + to_string(cone) + " repeats a ray");
    std::vector<IntVector> gens;
    for (int i : cone) {
      if (i < 0 || static_cast<std::size_t>(i) >= rays.size())
        throw Error("cone " + to_string(cone) + " references a missing ray");
      gens.push_back(rays[i]);
    }
    if (rank_of(gens) != dim) throw Error("cone " + to_string(cone) + " is degenerate");
    used |= to_mask(cone);
  }
  std::sort(max_cones.begin(), max_cones.end());
  if (std::adjacent_find(max_cones.begin(), max_cones.end()) != max_cones.end())
    throw Error("duplicate maximal cone");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!(used >> i & 1)) throw Error("ray " + std::to_string(i) + " lies in no maximal cone");

  if (check_intersections) {
    for (std::size_t a = 0; a < max_cones.size(); ++a) {
      for (std::size_t b = a + 1; b < max_cones.size(); ++b) {
        for (int pass = 0; pass < 2; ++pass) {
          const IndexSet& s = pass ? max_cones[b] : max_cones[a];
          const IndexSet& t = pass ? max_cones[a] : max_cones[b];
          for (int i : s) {
            if (std::binary_search(t.begin(), t.end(), i)) continue;
            std::vector<IntVector> gens;
            for (int j : t) gens.push_back(rays[j]);
            for (int j : s)
              if (j != i) gens.push_back(scaled(rays[j], -1));
            if (in_rational_cone(gens, rays[i]))
              throw Error("cones " + to_string(s) + " and " + to_string(t) +
                          " do not meet in a common face");
          }
        }
      }
    }
  }

  auto data = std::make_shared<Fan::Data>();
  data->dim = dim;
  data->rays = std::move(rays);
  data->cones = std::move(max_cones);
  for (const auto& c : data->cones) data->masks.push_back(to_mask(c));
  return Fan(std::move(data));
}

bool equal_up_to_reindexing(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim() || a.num_rays() != b.num_rays() ||
      a.max_cones().size() != b.max_cones().size())
    return false;
  std::vector<int> image(a.num_rays());
  for (std::size_t i = 0; i < a.num_rays(); ++i) {
    image[i] = b.find_ray(a.rays()[i]);
    if (image[i] < 0) return false;
  }
  std::set<RayMask> target(b.max_cone_masks().begin(), b.max_cone_masks().end());
  for (const auto& cone : a.max_cones()) {
    RayMask m = 0;
    for (int i : cone) m |= RayMask{1} << image[i];
    if (!target.count(m)) return false;
  }
  return true;
}

std::string to_json(const Fan& f) {
  std::ostringstream out;
  out << "{\"dim\": " << f.dim() << ", \"rays\": [";
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (j) out << ',';
      out << f.rays()[i][j];
    }
    out << ']';
  }
  out << "], \"maxCones\": [";
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    if (k) out << ',';
    out << '[';
    const auto& cone = f.max_cones()[k];
    for (std::size_t j = 0; j < cone.size(); ++j) {
      if (j) out << ',';
      out << cone[j];
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

Fan fan_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed fan JSON: ") + e.what());
  }
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<IntVector> rays;
    for (const auto& r : j.at("rays")) {
      IntVector v;
      for (const auto& x : r) v.emplace_back(x.get<long long>());
      rays.push_back(std::move(v));
    }
    std::vector<IndexSet> cones;
    for (const auto& c : j.at("maxCones")) cones.push_back(c.get<IndexSet>());
    return make_fan(dim, std::move(rays), std::move(cones));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed fan JSON: ") + e.what());
  }
}

std::string to_string(const IndexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace wfatlas
