#pragma once

#include <utility>
#include <vector>

#include "leibkit/linalg.hpp"

namespace leibkit {

/// Sparse row-major matrix over exact rationals; rows are kept sorted by
/// column. Only what the cochain complex needs.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  void add(std::size_t i, std::size_t j, const Scalar& value);

  const std::vector<std::pair<std::size_t, Scalar>>& row(std::size_t i) const { return data_[i]; }

  Vec apply(const Vec& v) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  bool is_zero() const;
  Matrix to_dense() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> data_;
};

}  // namespace leibkit
