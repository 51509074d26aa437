#include "leibkit/subspace.hpp"

#include "leibkit/errors.hpp"

namespace leibkit {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw DimensionMismatch("span vector has wrong length");
  return span(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::span(Matrix rows) {
  Subspace out(rows.cols());
  const auto pivots = rows.rref();
  Matrix basis(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, rows.row(i));
  out.basis_ = std::move(basis);
  out.pivots_ = pivots;
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c != 0) add_scaled(v, -c, basis_.row(r));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return leibkit::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
  Vec coords(dim(), Scalar(0));
  Vec rest = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar c = rest[pivots_[r]];
    if (c != 0) {
      coords[r] = c;
      add_scaled(rest, -c, basis_.row(r));
    }
  }
  if (!leibkit::is_zero(rest)) return std::nullopt;
  return coords;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  Matrix stacked(dim() + other.dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.set_row(dim() + i, other.basis_.row(i));
  return span(std::move(stacked));
}

ComplementSplit complement_split(const Subspace& s) {
  const std::size_t n = s.ambient();
  const std::size_t q = n - s.dim();
  std::vector<bool> is_pivot(n, false);
  {
    Matrix probe = s.basis();
    for (auto p : probe.rref()) is_pivot[p] = true;
  }
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) complement.push_back(i);

  Matrix projection(q, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Vec reduced = s.reduce(unit_vec(n, col));
    for (std::size_t r = 0; r < q; ++r) projection.at(r, col) = reduced[complement[r]];
  }
  Matrix section(n, q);
  for (std::size_t r = 0; r < q; ++r) section.at(complement[r], r) = 1;
  return {std::move(projection), std::move(section), std::move(complement)};
}

Subspace embed(const Subspace& inner, const Subspace& host) {
  if (inner.ambient() != host.dim()) throw DimensionMismatch("embed coordinate mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    Vec v(host.ambient(), Scalar(0));
    for (std::size_t k = 0; k < host.dim(); ++k)
      add_scaled(v, inner.basis_vector(i)[k], host.basis_vector(k));
    rows.push_back(std::move(v));
  }
  return Subspace::span(host.ambient(), rows);
}

Matrix restrict_operator(const Matrix& op, const Subspace& invariant) {
  Matrix out(invariant.dim(), invariant.dim());
  for (std::size_t j = 0; j < invariant.dim(); ++j) {
    const auto coords = invariant.coordinates(op.apply(invariant.basis_vector(j)));
    if (!coords) throw DimensionMismatch("subspace is not invariant under the operator");
    for (std::size_t i = 0; i < invariant.dim(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  // Solve u^T A = v^T B: kernel of [A^T | -B^T], then map back through A.
  const std::size_t a = dim();
  const std::size_t b = other.dim();
  if (a == 0 || b == 0) return Subspace(ambient_);
  Matrix system(ambient_, a + b);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t r = 0; r < a; ++r) system.at(i, r) = basis_.at(r, i);
    for (std::size_t r = 0; r < b; ++r) system.at(i, a + r) = -other.basis_.at(r, i);
  }
  const Matrix null_basis = system.kernel();
  std::vector<Vec> generators;
  for (std::size_t k = 0; k < null_basis.rows(); ++k) {
    Vec combo(ambient_, Scalar(0));
    for (std::size_t r = 0; r < a; ++r)
      if (null_basis.at(k, r) != 0) add_scaled(combo, null_basis.at(k, r), basis_.row(r));
    generators.push_back(std::move(combo));
  }
  return span(ambient_, generators);
}

}  // namespace leibkit
