#pragma once

#include "leibkit/algebra.hpp"

namespace leibkit {

/// A bilinear form on the algebra, stored as its Gram matrix
/// B(i,j) = beta(e_i, e_j).
struct BilinearForm {
  Matrix gram;

  Scalar eval(const Vec& x, const Vec& y) const { return dot(x, gram.apply(y)); }
  bool is_symmetric() const { return gram == gram.transpose(); }
  /// {x | beta(x, y) = 0 for all y}.
  Subspace radical() const { return Subspace::span(gram.kernel()); }
};

/// kappa_lambda(x, y) = tr(lambda_x o lambda_y) for the operator family
/// lambda_{e_i} = ops[i]; symmetric by construction.
BilinearForm trace_form(const StructureAlgebra& a, const std::vector<Matrix>& ops);

/// The trace form of the left adjoint representation.
BilinearForm killing_form(const StructureAlgebra& a);

/// beta(xy, z) = beta(x, yz) on all basis triples.
bool is_invariant(const StructureAlgebra& a, const BilinearForm& form);

/// True when the form's radical is exactly the Leibniz kernel.
bool is_minimally_degenerate(const StructureAlgebra& a, const BilinearForm& form);

}  // namespace leibkit
