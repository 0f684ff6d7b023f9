#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/polytope.hpp"

using namespace wfatlas;
using fixtures::v;

namespace {

std::vector<IntVector> sorted(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::size_t count_dim(const std::vector<PolytopeFace>& faces, int d) {
  return std::count_if(faces.begin(), faces.end(), [d](const auto& f) { return f.dim == d; });
}

const PolytopeFace& top(const std::vector<PolytopeFace>& faces) { return faces.back(); }

}  // namespace

TEST_CASE("P2 anticanonical triangle") {
  const auto p = divisor_polytope(anticanonical(fixtures::p2()));
  CHECK(p.dim() == 2);
  CHECK(sorted(p.vertices()) == std::vector<IntVector>{v({-1, -1}), v({-1, 2}), v({2, -1})});
  CHECK(lattice_points(p).size() == 10);
  const auto faces = face_lattice(p);
  CHECK(faces.size() == 7);
  CHECK(interior_lattice_points(p, top(faces)) == std::vector<IntVector>{v({0, 0})});
  CHECK(normalized_volume(p) == 9);
}

TEST_CASE("F_2 anticanonical polytope") {
  const auto p = divisor_polytope(anticanonical(fixtures::f2()));
  CHECK(sorted(p.vertices()) == std::vector<IntVector>{v({-1, -1}), v({-1, 1}), v({3, 1})});
  CHECK(lattice_points(p).size() == 9);
  const auto faces = face_lattice(p);
  CHECK(faces.size() == 7);
  CHECK(normalized_volume(p) == 8);

  // The vertex (−1,−1) is cut out by three inequalities.
  for (const auto& f : faces)
    if (f.dim == 0 && p.vertices()[f.vertices[0]] == v({-1, -1}))
      CHECK(normal_cone(p, f) == IndexSet{0, 1, 2});
  for (const auto& f : faces)
    if (f.dim == 1 && f.tight == to_mask({0})) CHECK(interior_lattice_points(p, f).size() == 1);
}

TEST_CASE("cube and point") {
  const Fan cube = projective_bundle({2, {0}, {{0, 0}}});
  REQUIRE(cube.num_rays() == 6);
  const auto p = divisor_polytope(anticanonical(cube));
  const auto faces = face_lattice(p);
  CHECK(count_dim(faces, 0) == 8);
  CHECK(count_dim(faces, 1) == 12);
  CHECK(count_dim(faces, 2) == 6);
  CHECK(count_dim(faces, 3) == 1);
  CHECK(lattice_points(p).size() == 27);
  CHECK(normalized_volume(p) == 48);
  for (const auto& f : faces) CHECK(interior_lattice_points(p, f).size() == 1);

  const auto point = divisor_polytope(TorusDivisor(fixtures::p2(), {0, 0, 0}));
  CHECK(point.dim() == 0);
  CHECK(face_lattice(point).size() == 1);
  CHECK(lattice_points(point) == std::vector<IntVector>{v({0, 0})});
  CHECK_THROWS_AS(normalized_volume(point), Error);
}

TEST_CASE("square face lattice") {
  const auto p = divisor_polytope(anticanonical(fixtures::p1xp1()));
  const auto faces = face_lattice(p);
  CHECK(faces.size() == 9);
  CHECK(normalized_volume(p) == 8);
}

TEST_CASE("non-nef divisor is rejected") {
  CHECK_THROWS_AS(divisor_polytope(TorusDivisor(fixtures::f2(), {0, 1, 0, 0})), Error);
}

TEST_CASE("polyhedron_lattice_points") {
  // Roots of P2: ⟨m, u_0⟩ = −1, the others ≥ 0.
  const auto rays = fixtures::p2().rays();
  const auto pts = polyhedron_lattice_points(rays, {-1, 0, 0}, {true, false, false});
  CHECK(sorted(pts) == std::vector<IntVector>{v({-1, 0}), v({-1, 1})});
  CHECK(polyhedron_lattice_points(rays, {1, 1, 1}, {false, false, false}).empty());
}

TEST_CASE("random nef divisors: Pick, Euler and two enumerators") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-2, 4);
  const std::vector<Fan> fans = {fixtures::p2(), fixtures::f2(), fixtures::ex23(), fixtures::p1xp1(),
                                 kleinschmidt({2, {3}})};
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Fan& f = fans[trial % fans.size()];
    std::vector<Integer> a;
    for (std::size_t i = 0; i < f.num_rays(); ++i) a.push_back(coef(rng));
    const TorusDivisor d(f, a);
    if (!is_nef(d)) continue;
    const auto p = divisor_polytope(d);
    const auto pts = lattice_points(p);
    std::vector<Integer> bounds;
    for (const auto& x : a) bounds.push_back(-x);
    CHECK(sorted(polyhedron_lattice_points(f.rays(), bounds, std::vector<bool>(a.size(), false))) ==
          sorted(pts));

    const auto faces = face_lattice(p);
    long euler = 0;
    for (const auto& face : faces) euler += face.dim % 2 == 0 ? 1 : -1;
    CHECK(euler == 1);

    // Relative interiors of the faces partition the lattice points.
    std::size_t total = 0;
    for (const auto& face : faces) total += interior_lattice_points(p, face).size();
    CHECK(total == pts.size());

    if (p.dim() == 2) {
      const auto interior = interior_lattice_points(p, top(faces)).size();
      const auto boundary = pts.size() - interior;
      CHECK(normalized_volume(p) == Integer(2 * interior + boundary) - 2);
      ++tested;
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("unbounded polyhedra are rejected") {
  const std::vector<IntVector> quadrant = {v({1, 0}), v({0, 1})};
  CHECK_FALSE(is_bounded_polyhedron(quadrant, {false, false}));
  CHECK_THROWS_AS(polyhedron_lattice_points(quadrant, {0, 0}, {false, false}), Error);
  CHECK(is_bounded_polyhedron(fixtures::p2().rays(), {true, false, false}));
}
