#pragma once

#include <string>
#include <vector>

#include "leibkit/subspace.hpp"

namespace leibkit {

enum class Side { left, right };

/// Identity flags decided by exhaustive verification on basis triples,
/// which suffices for the multilinear (or polarized) forms of each law.
struct IdentityFlags {
  bool left_leibniz = false;
  bool right_leibniz = false;
  bool symmetric = false;
  bool lie = false;
  bool flexible = false;
  bool associative = false;
};

/// A finite-dimensional algebra over Q given by its structure-constant
/// tensor: e_i e_j = sum_k c(i,j,k) e_k. Bilinearity is automatic from
/// the representation; identity flags are computed, never stored.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::string name, std::vector<std::string> basis_labels);

  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim() + j) * dim() + k];
  }
  void set_product(std::size_t i, std::size_t j, const Vec& result);
  /// Coordinates of e_i e_j.
  Vec basis_product(std::size_t i, std::size_t j) const;

  bool operator==(const StructureAlgebra& other) const = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Scalar> tensor_;
};

/// Bilinear extension of the structure tensor.
Vec multiply(const StructureAlgebra& a, const Vec& x, const Vec& y);

/// Matrix of L_x (y -> xy) or R_x (y -> yx) in the given basis.
Matrix mult_operator(const StructureAlgebra& a, const Vec& x, Side side);

/// All basis multiplication operators L_{e_i} resp. R_{e_i}.
std::vector<Matrix> basis_operators(const StructureAlgebra& a, Side side);

IdentityFlags check_identities(const StructureAlgebra& a);

/// Algebra with the reversed multiplication x.y := yx.
StructureAlgebra opposite(const StructureAlgebra& a);

/// Isomorphic copy on the basis f_a = sum_i P(i,a) e_i; P must be invertible.
StructureAlgebra transform_algebra(const StructureAlgebra& a, const Matrix& change_of_basis);

/// Span of all products st with s in S, t in T.
Subspace subspace_product(const StructureAlgebra& a, const Subspace& s, const Subspace& t);

/// L L  (the derived subalgebra / second term of every series).
Subspace square(const StructureAlgebra& a);

struct IdealFlags {
  bool left = false;
  bool right = false;
  bool two_sided = false;
};

IdealFlags is_ideal(const StructureAlgebra& a, const Subspace& s);

/// Smallest two-sided ideal containing v (saturation under all basis operators).
Subspace ideal_closure(const StructureAlgebra& a, const Vec& v);

struct QuotientResult {
  StructureAlgebra algebra;
  Matrix projection;  ///< (dim A - dim I) x dim A
  Matrix section;     ///< dim A x (dim A - dim I), right inverse of projection
  Subspace ideal;
};

/// Quotient algebra on a complement basis. Throws NotAnIdeal.
QuotientResult quotient(const StructureAlgebra& a, const Subspace& ideal);

/// Preimage of a subspace of the quotient under the projection.
Subspace quotient_preimage(const QuotientResult& q, const Subspace& sub);

/// The algebra structure induced on a subspace closed under the product.
/// Throws NotASubalgebra otherwise.
StructureAlgebra subalgebra(const StructureAlgebra& a, const Subspace& s, const std::string& name);

/// True when the linear map given column-wise by `map` satisfies
/// map(xy) = map(x) map(y) on all basis pairs.
bool is_homomorphism(const StructureAlgebra& domain, const StructureAlgebra& codomain,
                     const Matrix& map);

}  // namespace leibkit
