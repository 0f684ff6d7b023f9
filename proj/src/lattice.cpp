#include "wfatlas/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "wfatlas/error.hpp"

namespace wfatlas {

namespace mp = boost::multiprecision;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  return from_rows(columns).transposed();
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("dot product dimension mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector scaled(const IntVector& v, const Integer& k) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = mp::gcd(g, mp::abs(x));
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive_part(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw Error("zero vector has no primitive part");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool positively_proportional(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return primitive_part(a) == primitive_part(b);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

using RationalMatrix = std::vector<RationalVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_of(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix a;
  for (const auto& v : vectors) a.emplace_back(v.begin(), v.end());
  return row_reduce(a, vectors.front().size()).size();
}

std::size_t rank_of(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank_of(rows);
}

std::optional<RationalVector> solve_in_span(std::span<const IntVector> basis, const IntVector& v) {
  const std::size_t k = basis.size();
  const std::size_t d = v.size();
  for (const auto& b : basis)
    if (b.size() != d) throw Error("basis vector dimension mismatch");
  // Augmented system with the basis vectors as columns.
  RationalMatrix a(d, RationalVector(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = basis[c][r];
    a[r][k] = v[r];
  }
  const auto pivots = row_reduce(a, k);
  if (pivots.size() < k) throw Error("basis is linearly dependent");
  for (std::size_t r = k; r < d; ++r)
    if (a[r][k] != 0) return std::nullopt;
  RationalVector out(k);
  for (std::size_t r = 0; r < k; ++r) out[pivots[r]] = a[r][k];
  return out;
}

RationalVector solve_in_basis(std::span<const IntVector> basis, const IntVector& v) {
  if (basis.size() != v.size()) throw Error("basis size must equal the dimension");
  auto solution = solve_in_span(basis, v);
  if (!solution) throw Error("basis is singular");
  return *solution;
}

namespace {

std::optional<RationalMatrix> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix a(n, RationalVector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  if (row_reduce(a, n).size() < n) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  return inv;
}

}  // namespace

std::optional<IntMatrix> integral_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const auto inv = rational_inverse(m);
  if (!inv) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_integral((*inv)[r][c])) return std::nullopt;
      out(r, c) = to_integer((*inv)[r][c]);
    }
  }
  return out;
}

std::optional<IntMatrix> unimodular_solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw Error("unimodular_solve needs square matrices of equal size");
  const std::size_t n = a.rows();
  const auto inv = rational_inverse(a);
  if (!inv) return std::nullopt;
  IntMatrix x(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += Rational(b(r, k)) * (*inv)[k][c];
      if (!is_integral(acc)) return std::nullopt;
      x(r, c) = to_integer(acc);
    }
  }
  if (mp::abs(determinant(x)) != 1) return std::nullopt;
  return x;
}

namespace {

// Row a·λ (= or ≥) b stored as coefficients followed by the constant b.
using Row = std::vector<Integer>;

void normalize(Row& row) {
  Integer g = 0;
  for (const auto& x : row) g = mp::gcd(g, mp::abs(x));
  if (g > 1)
    for (auto& x : row) x /= g;
}

// row·|pivot_k| − pivot·(row_k·sign(pivot_k)); the result has a zero in column k.
Row eliminate_with(const Row& row, const Row& pivot, std::size_t k) {
  const Integer scale = mp::abs(pivot[k]);
  const Integer factor = pivot[k] > 0 ? row[k] : Integer(-row[k]);
  Row out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i] * scale - pivot[i] * factor;
  normalize(out);
  return out;
}

}  // namespace

bool in_rational_cone(std::span<const IntVector> generators, const IntVector& v) {
  const std::size_t n = generators.size();
  const std::size_t d = v.size();
  for (const auto& g : generators)
    if (g.size() != d) throw Error("cone generator dimension mismatch");
  if (n == 0) return is_zero(v);

  std::vector<Row> equalities;
  for (std::size_t i = 0; i < d; ++i) {
    Row row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = generators[j][i];
    row[n] = v[i];
    equalities.push_back(std::move(row));
  }
  std::set<Row> inequalities;
  for (std::size_t j = 0; j < n; ++j) {
    Row row(n + 1);
    row[j] = 1;
    inequalities.insert(std::move(row));
  }

  for (std::size_t k = 0; k < n; ++k) {
    auto pivot_it = std::find_if(equalities.begin(), equalities.end(),
                                 [k](const Row& r) { return r[k] != 0; });
    std::set<Row> next;
    if (pivot_it != equalities.end()) {
      const Row pivot = *pivot_it;
      equalities.erase(pivot_it);
      for (auto& e : equalities)
        if (e[k] != 0) e = eliminate_with(e, pivot, k);
      for (const auto& ineq : inequalities)
        next.insert(ineq[k] != 0 ? eliminate_with(ineq, pivot, k) : ineq);
    } else {
      std::vector<const Row*> pos, neg;
      for (const auto& ineq : inequalities) {
        if (ineq[k] > 0) pos.push_back(&ineq);
        else if (ineq[k] < 0) neg.push_back(&ineq);
        else next.insert(ineq);
      }
      for (const Row* p : pos) {
        for (const Row* q : neg) {
          Row combined(n + 1);
          const Integer pk = (*p)[k];
          const Integer qk = -(*q)[k];
          for (std::size_t i = 0; i <= n; ++i) combined[i] = (*p)[i] * qk + (*q)[i] * pk;
          normalize(combined);
          next.insert(std::move(combined));
        }
      }
    }
    // Drop constraints with no variables left: 0 ≥ b must hold.
    inequalities.clear();
    for (auto& row : next) {
      const bool constant = std::all_of(row.begin(), row.end() - 1,
                                        [](const Integer& x) { return x == 0; });
      if (!constant) {
        inequalities.insert(row);
      } else if (row[n] > 0) {
        return false;
      }
    }
    for (const auto& e : equalities) {
      const bool constant =
          std::all_of(e.begin(), e.end() - 1, [](const Integer& x) { return x == 0; });
      if (constant && e[n] != 0) return false;
    }
  }
  return true;
}

bool is_integral(const Rational& q) { return mp::denominator(q) == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw Error("rational is not an integer");
  return mp::numerator(q);
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

}  // namespace wfatlas
