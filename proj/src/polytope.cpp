#include "wfatlas/polytope.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "wfatlas/error.hpp"

namespace wfatlas {

namespace {

long long narrow(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() / 4 || x < std::numeric_limits<long long>::min() / 4)
    throw Error("coordinate too large for lattice point enumeration");
  return static_cast<long long>(x);
}

// Visits every integer point of the box [lo, hi].
void for_each_box_point(const std::vector<long long>& lo, const std::vector<long long>& hi,
                        const std::function<void(const std::vector<long long>&)>& visit) {
  const std::size_t d = lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<long long> m = lo;
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < d && m[i] == hi[i]) m[i] = lo[i], ++i;
    if (i == d) return;
    ++m[i];
  }
}

struct SmallConstraints {
  std::vector<std::vector<long long>> normals;
  std::vector<long long> bounds;
};

SmallConstraints small(const std::vector<IntVector>& normals, const std::vector<Integer>& bounds) {
  SmallConstraints out;
  for (const auto& u : normals) {
    std::vector<long long> row;
    for (const auto& x : u) row.push_back(narrow(x));
    out.normals.push_back(std::move(row));
  }
  for (const auto& b : bounds) out.bounds.push_back(narrow(b));
  return out;
}

long long small_dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVector to_int_vector(const std::vector<long long>& m) {
  return IntVector(m.begin(), m.end());
}

}  // namespace

int affine_dimension(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
  return static_cast<int>(rank_of(diffs));
}

LatticePolytope::LatticePolytope(std::vector<IntVector> normals, std::vector<Integer> coeffs,
                                 std::vector<IntVector> vertices)
    : normals_(std::move(normals)), coeffs_(std::move(coeffs)), vertices_(std::move(vertices)) {
  if (normals_.size() != coeffs_.size()) throw Error("polytope needs one coefficient per normal");
  if (normals_.size() > 64) throw Error("polytopes with more than 64 inequalities are not supported");
  if (vertices_.empty()) throw Error("polytope needs at least one vertex");
  ambient_ = vertices_.front().size();
  for (const auto& v : vertices_)
    if (!contains(v)) throw InternalError("vertex " + to_string(v) + " violates an inequality");
  dim_ = affine_dimension(vertices_);
}

RayMask LatticePolytope::tight_set(const IntVector& m) const {
  RayMask t = 0;
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (dot(m, normals_[i]) == -coeffs_[i]) t |= RayMask{1} << i;
  return t;
}

bool LatticePolytope::contains(const IntVector& m) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (dot(m, normals_[i]) < -coeffs_[i]) return false;
  return true;
}

LatticePolytope divisor_polytope(const TorusDivisor& d) {
  if (!is_nef(d)) throw Error("divisor is not nef");
  std::vector<IntVector> vertices;
  for (const auto& m : d.cartier_data())
    if (std::find(vertices.begin(), vertices.end(), m) == vertices.end()) vertices.push_back(m);
  return LatticePolytope(d.fan().rays(), d.coeffs(), std::move(vertices));
}

std::vector<PolytopeFace> face_lattice(const LatticePolytope& p) {
  std::vector<RayMask> vertex_tight;
  for (const auto& v : p.vertices()) vertex_tight.push_back(p.tight_set(v));
  std::set<RayMask> masks(vertex_tight.begin(), vertex_tight.end());
  std::vector<RayMask> frontier(masks.begin(), masks.end());
  while (!frontier.empty()) {
    std::vector<RayMask> next;
    for (RayMask a : frontier)
      for (RayMask b : vertex_tight)
        if (masks.insert(a & b).second) next.push_back(a & b);
    frontier = std::move(next);
  }
  std::vector<PolytopeFace> faces;
  for (RayMask t : masks) {
    PolytopeFace f;
    f.tight = t;
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < vertex_tight.size(); ++i)
      if ((vertex_tight[i] & t) == t) {
        f.vertices.push_back(static_cast<int>(i));
        pts.push_back(p.vertices()[i]);
      }
    f.dim = affine_dimension(pts);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return std::pair(a.dim, a.tight) < std::pair(b.dim, b.tight);
  });
  return faces;
}

std::vector<IntVector> lattice_points(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<long long> lo(d, std::numeric_limits<long long>::max());
  std::vector<long long> hi(d, std::numeric_limits<long long>::min());
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], narrow(v[i]));
      hi[i] = std::max(hi[i], narrow(v[i]));
    }
  std::vector<Integer> bounds;
  for (const auto& a : p.coeffs()) bounds.push_back(-a);
  const auto cons = small(p.normals(), bounds);
  std::vector<IntVector> out;
  for_each_box_point(lo, hi, [&](const std::vector<long long>& m) {
    for (std::size_t i = 0; i < cons.normals.size(); ++i)
      if (small_dot(m, cons.normals[i]) < cons.bounds[i]) return;
    out.push_back(to_int_vector(m));
  });
  return out;
}

std::vector<IntVector> interior_lattice_points(const LatticePolytope& p, const PolytopeFace& f) {
  std::vector<IntVector> out;
  for (auto& m : lattice_points(p))
    if (p.tight_set(m) == f.tight) out.push_back(std::move(m));
  return out;
}

IndexSet normal_cone(const LatticePolytope&, const PolytopeFace& f) { return from_mask(f.tight); }

Integer normalized_volume(const LatticePolytope& p) {
  const int d = static_cast<int>(p.ambient_dim());
  if (p.dim() != d) throw Error("volume needs a full-dimensional polytope");
  const auto faces = face_lattice(p);

  // Pulling triangulation: simplices of a face are the lowest vertex joined to
  // the simplices of each facet of that face avoiding it.
  std::function<std::vector<std::vector<int>>(const PolytopeFace&)> triangulate =
      [&](const PolytopeFace& f) -> std::vector<std::vector<int>> {
    if (static_cast<int>(f.vertices.size()) == f.dim + 1) return {f.vertices};
    const int apex = f.vertices.front();
    std::vector<std::vector<int>> out;
    for (const auto& g : faces) {
      if (g.dim != f.dim - 1 || (g.tight & f.tight) != f.tight || g.tight == f.tight) continue;
      if (std::find(g.vertices.begin(), g.vertices.end(), apex) != g.vertices.end()) continue;
      for (auto s : triangulate(g)) {
        s.push_back(apex);
        out.push_back(std::move(s));
      }
    }
    return out;
  };

  Integer total = 0;
  for (const auto& simplex : triangulate(faces.back())) {
    std::vector<IntVector> edges;
    for (std::size_t i = 1; i < simplex.size(); ++i)
      edges.push_back(subtract(p.vertices()[simplex[i]], p.vertices()[simplex[0]]));
    total += abs(determinant(IntMatrix::from_rows(edges)));
  }
  return total;
}

bool is_bounded_polyhedron(const std::vector<IntVector>& normals, const std::vector<bool>& equality) {
  if (normals.empty()) return false;
  // Bounded iff the normals (both signs for equalities) positively span the dual space.
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    gens.push_back(normals[i]);
    if (equality[i]) gens.push_back(scaled(normals[i], -1));
  }
  const std::size_t d = normals.front().size();
  for (std::size_t j = 0; j < d; ++j)
    for (int sign : {1, -1}) {
      IntVector e(d, 0);
      e[j] = sign;
      if (!in_rational_cone(gens, e)) return false;
    }
  return true;
}

std::vector<IntVector> polyhedron_lattice_points(const std::vector<IntVector>& normals,
                                                 const std::vector<Integer>& bounds,
                                                 const std::vector<bool>& equality) {
  if (normals.empty()) throw Error("polyhedron needs at least one constraint");
  const std::size_t d = normals.front().size();
  const std::size_t n = normals.size();
  if (equality.size() != n || bounds.size() != n) throw Error("polyhedron constraint sizes differ");
  IndexSet required, optional;
  for (std::size_t i = 0; i < n; ++i) (equality[i] ? required : optional).push_back(static_cast<int>(i));
  if (!is_bounded_polyhedron(normals, equality)) throw Error("polyhedron is unbounded");
  if (required.size() > d) throw Error("more equalities than the dimension");

  // Vertices: feasible solutions of d linearly independent tight constraints.
  std::vector<Rational> lo(d), hi(d);
  bool any = false;
  const std::size_t pick = d - required.size();
  std::vector<int> choice;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (choice.size() == pick) {
      std::vector<IntVector> rows;
      std::vector<Integer> rhs;
      for (int i : required) rows.push_back(normals[i]), rhs.push_back(bounds[i]);
      for (int i : choice) rows.push_back(normals[i]), rhs.push_back(bounds[i]);
      if (rank_of(rows) < d) return;
      // rows·m = rhs, written as a combination of the columns of rows.
      const IntMatrix a = IntMatrix::from_rows(rows);
      std::vector<IntVector> columns;
      for (std::size_t c = 0; c < d; ++c) columns.push_back(a.column(c));
      const auto m = solve_in_basis(columns, IntVector(rhs.begin(), rhs.end()));
      for (std::size_t i = 0; i < n; ++i) {
        Rational val = 0;
        for (std::size_t c = 0; c < d; ++c) val += m[c] * normals[i][c];
        if (val < bounds[i] || (equality[i] && val != bounds[i])) return;
      }
      for (std::size_t c = 0; c < d; ++c) {
        if (!any || m[c] < lo[c]) lo[c] = m[c];
        if (!any || m[c] > hi[c]) hi[c] = m[c];
      }
      any = true;
      return;
    }
    for (std::size_t k = from; k < optional.size(); ++k) {
      choice.push_back(optional[k]);
      rec(k + 1);
      choice.pop_back();
    }
  };
  rec(0);
  if (!any) return {};

  std::vector<long long> blo(d), bhi(d);
  for (std::size_t c = 0; c < d; ++c) {
    Integer f = numerator(lo[c]) / denominator(lo[c]);
    if (f > lo[c]) f -= 1;
    Integer g = numerator(hi[c]) / denominator(hi[c]);
    if (g < hi[c]) g += 1;
    blo[c] = narrow(f);
    bhi[c] = narrow(g);
  }
  const auto cons = small(normals, bounds);
  std::vector<IntVector> out;
  for_each_box_point(blo, bhi, [&](const std::vector<long long>& m) {
    for (std::size_t i = 0; i < n; ++i) {
      const long long val = small_dot(m, cons.normals[i]);
      if (val < cons.bounds[i] || (equality[i] && val != cons.bounds[i])) return;
    }
    out.push_back(to_int_vector(m));
  });
  return out;
}

}  // namespace wfatlas
