#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "leibkit/scalar.hpp"

namespace leibkit {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec& add_scaled(Vec& target, const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t index);

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> values);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& values);

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator-() const;
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  bool operator==(const Matrix& other) const = default;

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns the pivot columns in order.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  /// Basis of the right null space, one vector per row, RREF-canonical.
  Matrix kernel() const;
  std::optional<Matrix> inverse() const;
  /// One solution of A x = b, if the system is consistent.
  std::optional<Vec> solve(const Vec& rhs) const;

  /// True when M^k = 0 for some k <= rows().
  bool is_nilpotent() const;
  Scalar trace() const;

  /// Row-major flattening, and its inverse for square matrices.
  Vec flatten() const;
  static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Coefficients of det(xI - M), highest degree first (monic).
Vec characteristic_polynomial(const Matrix& m);

/// Monic minimal polynomial, highest degree first.
Vec minimal_polynomial(const Matrix& m);

/// Rational roots of the polynomial (coefficients highest-first). Exact
/// for degrees up to two; higher degrees search divisors up to a fixed
/// bound, so roots with huge numerator and denominator can be missed.
std::vector<Scalar> rational_roots(const Vec& poly);

}  // namespace leibkit
