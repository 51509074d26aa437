#pragma once

#include <optional>
#include <vector>

#include "leibkit/linalg.hpp"

namespace leibkit {

/// A subspace of Q^n held as a unique reduced row-echelon basis, so two
/// subspaces are equal exactly when their basis matrices are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace span(Matrix rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

  /// Remainder of v after subtracting its projection onto the pivot
  /// coordinates; zero exactly when v lies in the subspace.
  Vec reduce(Vec v) const;

  /// Coefficients expressing v in the stored basis, if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Projection onto a complement of the subspace (coordinates at the
/// non-pivot columns) together with the canonical section.
struct ComplementSplit {
  Matrix projection;  ///< (ambient - dim) x ambient
  Matrix section;     ///< ambient x (ambient - dim); projection * section = id
  std::vector<std::size_t> complement_columns;
};

ComplementSplit complement_split(const Subspace& s);

/// The subspace of the host's ambient space spanned by vectors whose
/// host-coordinates are the rows of `inner`.
Subspace embed(const Subspace& inner, const Subspace& host);

/// Matrix of the operator restricted to an invariant subspace, in that
/// subspace's basis coordinates. Throws when the subspace is not invariant.
Matrix restrict_operator(const Matrix& op, const Subspace& invariant);

}  // namespace leibkit
