#pragma once

// Exact integer and rational linear algebra over Z^d and Q^d.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wfatlas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of N or M; length is the ambient lattice dimension.
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows);
  static IntMatrix from_columns(std::span<const IntVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  /// Matrix-vector product M·v (v a column vector).
  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Integer& k);
bool is_zero(const IntVector& v);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(const IntVector& v);
bool is_primitive(const IntVector& v);

/// v / gcd(entries). Throws Error on the zero vector.
IntVector primitive_part(const IntVector& v);

/// True iff a = λ·b for some rational λ > 0.
bool positively_proportional(const IntVector& a, const IntVector& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over Q of the given vectors.
std::size_t rank_of(std::span<const IntVector> vectors);
std::size_t rank_of(const IntMatrix& m);

/// Coefficients c with Σ c_i·basis_i = v, when v lies in the span of
/// the (linearly independent) basis; nullopt when it does not.
/// Throws Error if the basis vectors are linearly dependent.
std::optional<RationalVector> solve_in_span(std::span<const IntVector> basis, const IntVector& v);

/// Coordinates of v in a basis of d vectors of Q^d. Throws Error if singular.
RationalVector solve_in_basis(std::span<const IntVector> basis, const IntVector& v);

/// Integer X with X·A = B and det X = ±1, if one exists.
/// Throws Error when A and B are not square matrices of equal size.
std::optional<IntMatrix> unimodular_solve(const IntMatrix& a, const IntMatrix& b);

/// Exact inverse of an integer matrix whose inverse is integral; nullopt otherwise.
std::optional<IntMatrix> integral_inverse(const IntMatrix& m);

/// Decides v ∈ Cone(generators) over Q by Fourier–Motzkin elimination.
bool in_rational_cone(std::span<const IntVector> generators, const IntVector& v);

bool is_integral(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integral(q)

std::string to_string(const IntVector& v);  // "(1, -2, 0)"

}  // namespace wfatlas
