#include "leibkit/sparse.hpp"

#include <algorithm>

#include "leibkit/errors.hpp"

namespace leibkit {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& row : data_) count += row.size();
  return count;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& value) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("sparse entry out of range");
  if (value == 0) return;
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& entry, std::size_t col) { return entry.first < col; });
  if (it != row.end() && it->first == j) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {j, value});
  }
}

Vec SparseMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("sparse apply size mismatch");
  Vec out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, value] : data_[i]) out[i] += value * v[j];
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("sparse product shapes differ");
  SparseMatrix out(rows_, other.cols_);
  Vec accumulator(other.cols_, Scalar(0));
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& [k, aik] : data_[i])
      for (const auto& [j, bkj] : other.data_[k]) {
        if (accumulator[j] == 0) touched.push_back(j);
        accumulator[j] += aik * bkj;
      }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      if (accumulator[j] != 0) out.data_[i].emplace_back(j, accumulator[j]);
      accumulator[j] = 0;
    }
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

Matrix SparseMatrix::to_dense() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, value] : data_[i]) out.at(i, j) = value;
  return out;
}

}  // namespace leibkit
