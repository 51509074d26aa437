#pragma once

#include "leibkit/algebra.hpp"

namespace leibkit {

struct Centers {
  Subspace left;
  Subspace right;
  Subspace center;
};

/// Kernels of the stacked left/right multiplication operator families,
/// and their intersection.
Centers centers(const StructureAlgebra& a);

/// Leib(L) = <x^2 | x in L>, computed by polarization: the spans of all
/// e_i e_i together with e_i e_j + e_j e_i already exhaust the squares
/// in characteristic zero.
Subspace leibniz_kernel(const StructureAlgebra& a);

/// Solution space of D(e_i e_j) = D(e_i) e_j + e_i D(e_j), returned as a
/// subspace of flattened n x n matrices (row-major, ambient n^2).
Subspace derivation_algebra(const StructureAlgebra& a);

enum class OperatorFamily { left, right, lie_mult };

/// Span of the left multiplication operators, the right ones, or (for
/// symmetric Leibniz algebras) their sum, as flattened matrices. When the
/// matching Leibniz flag holds the result is checked to sit inside the
/// derivation algebra and to be closed under the matrix commutator;
/// lie_mult requires the symmetric flag and throws NotSymmetric otherwise.
Subspace operator_span(const StructureAlgebra& a, OperatorFamily which);

/// Lie algebra structure (commutator product) on a space of flattened
/// square matrices. Throws NotASubalgebra when not commutator-closed.
StructureAlgebra algebra_from_matrix_span(const Subspace& matrices, const std::string& name);

/// Smallest invariant subspace containing the seed.
Subspace spin(const std::vector<Matrix>& ops, const Vec& seed);

/// Intersection of the kernels of all operators.
Subspace joint_kernel(const std::vector<Matrix>& ops, std::size_t space_dim);

}  // namespace leibkit
