#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/lattice.hpp"

using namespace wfatlas;
using fixtures::v;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(v(r));
  return IntMatrix::from_rows(out);
}

}  // namespace

TEST_CASE("primitive_part") {
  CHECK(primitive_part(v({2, 4, 6})) == v({1, 2, 3}));
  CHECK(primitive_part(v({1, 0})) == v({1, 0}));
  CHECK(primitive_part(v({-3, 6})) == v({-1, 2}));
  CHECK_THROWS_WITH_AS(primitive_part(v({0, 0})), "zero vector has no primitive part", Error);
}

TEST_CASE("primitive_part is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-30, 30);
  for (int trial = 0; trial < 500; ++trial) {
    IntVector x = v({dist(rng), dist(rng), dist(rng)});
    if (is_zero(x)) continue;
    const IntVector p = primitive_part(x);
    CHECK(primitive_part(p) == p);
    CHECK(content(p) == 1);
    CHECK(positively_proportional(p, x));
  }
}

TEST_CASE("solve_in_basis") {
  std::vector<IntVector> id{v({1, 0}), v({0, 1})};
  CHECK(solve_in_basis(id, v({3, -1})) == RationalVector{3, -1});
  CHECK(solve_in_basis(id, v({-1, -1})) == RationalVector{-1, -1});
  std::vector<IntVector> b{v({1, 0}), v({1, 1})};
  CHECK(solve_in_basis(b, v({2, 1})) == RationalVector{1, 1});
  std::vector<IntVector> singular{v({1, 2}), v({2, 4})};
  CHECK_THROWS_AS(solve_in_basis(singular, v({1, 0})), Error);
}

TEST_CASE("solve_in_basis recombination reproduces the vector") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-5, 5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVector> basis;
    for (int i = 0; i < 3; ++i) basis.push_back(v({dist(rng), dist(rng), dist(rng)}));
    if (rank_of(basis) < 3) continue;
    const IntVector x = v({dist(rng), dist(rng), dist(rng)});
    const auto c = solve_in_basis(basis, x);
    for (std::size_t k = 0; k < 3; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < 3; ++i) acc += c[i] * basis[i][k];
      CHECK(acc == Rational(x[k]));
    }
    ++solved;
  }
  CHECK(solved > 100);
}

TEST_CASE("determinant") {
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
  CHECK(determinant(mat({{2, 0, 0}, {0, 3, 0}, {1, 1, 0}})) == 0);
  CHECK(determinant(mat({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}})) == -6);
}

TEST_CASE("unimodular_solve") {
  const IntMatrix id = IntMatrix::identity(2);
  CHECK(unimodular_solve(id, id) == id);
  const IntMatrix perm = mat({{0, 1}, {1, 0}});
  CHECK(unimodular_solve(id, perm) == perm);
  CHECK_FALSE(unimodular_solve(mat({{2, 0}, {0, 1}}), id).has_value());
  CHECK_THROWS_AS(unimodular_solve(id, IntMatrix::identity(3)), Error);
}

TEST_CASE("unimodular_solve results are unimodular solutions") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-3, 3);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const IntMatrix a = mat({{dist(rng), dist(rng), dist(rng)},
                             {dist(rng), dist(rng), dist(rng)},
                             {dist(rng), dist(rng), dist(rng)}});
    const IntMatrix b = mat({{dist(rng), dist(rng), dist(rng)},
                             {dist(rng), dist(rng), dist(rng)},
                             {dist(rng), dist(rng), dist(rng)}});
    const auto x = unimodular_solve(a, b);
    if (!x) continue;
    ++found;
    CHECK(abs(determinant(*x)) == 1);
    CHECK(*x * a == b);
  }
  CHECK(found > 0);
}

TEST_CASE("in_rational_cone") {
  std::vector<IntVector> quadrant{v({1, 0}), v({0, 1})};
  CHECK(in_rational_cone(quadrant, v({2, 3})));
  CHECK_FALSE(in_rational_cone(quadrant, v({-1, 0})));
  std::vector<IntVector> wedge{v({1, 1}), v({1, -1})};
  CHECK(in_rational_cone(wedge, v({1, 0})));
  CHECK_FALSE(in_rational_cone(wedge, v({0, 1})));
  CHECK(in_rational_cone({}, v({0, 0})));
  CHECK_FALSE(in_rational_cone({}, v({1, 0})));
}

namespace {

// Carathéodory: v is in the cone iff some linearly independent subset has
// nonnegative coordinates for v.
bool caratheodory(const std::vector<IntVector>& gens, const IntVector& target) {
  if (is_zero(target)) return true;
  const std::size_t n = gens.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<IntVector> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(gens[i]);
    if (rank_of(sub) < sub.size()) continue;
    const auto c = solve_in_span(sub, target);
    if (c && std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; }))
      return true;
  }
  return false;
}

}  // namespace

TEST_CASE("in_rational_cone agrees with brute force") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> dist(-2, 2);
  std::uniform_int_distribution<int> count(1, 4);
  int grid_hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = trial % 2 ? 3 : 2;
    auto rand_vec = [&] {
      IntVector x;
      for (int i = 0; i < dim; ++i) x.emplace_back(dist(rng));
      return x;
    };
    std::vector<IntVector> gens;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) gens.push_back(rand_vec());
    const IntVector target = rand_vec();

    // Multipliers k/6 with k in [0, 12].
    bool grid = false;
    std::vector<int> k(n, 0);
    while (!grid) {
      IntVector acc(dim);
      for (int i = 0; i < n; ++i) acc = add(acc, scaled(gens[i], k[i]));
      grid = acc == scaled(target, 6);
      int pos = 0;
      while (pos < n && ++k[pos] > 12) k[pos++] = 0;
      if (pos == n) break;
    }
    const bool member = in_rational_cone(gens, target);
    if (grid) {
      ++grid_hits;
      CHECK(member);
    }
    CHECK(member == caratheodory(gens, target));
  }
  CHECK(grid_hits > 30);
}
