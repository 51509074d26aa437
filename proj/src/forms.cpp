#include "leibkit/forms.hpp"

#include "leibkit/errors.hpp"
#include "leibkit/invariants.hpp"

namespace leibkit {

BilinearForm trace_form(const StructureAlgebra& a, const std::vector<Matrix>& ops) {
  if (ops.size() != a.dim()) throw DimensionMismatch("one operator per basis element expected");
  Matrix gram(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      gram.at(i, j) = (ops[i] * ops[j]).trace();
      gram.at(j, i) = gram.at(i, j);
    }
  return {std::move(gram)};
}

BilinearForm killing_form(const StructureAlgebra& a) {
  return trace_form(a, basis_operators(a, Side::left));
}

bool is_invariant(const StructureAlgebra& a, const BilinearForm& form) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Scalar lhs = form.eval(a.basis_product(i, j), unit_vec(a.dim(), k));
        const Scalar rhs = form.eval(unit_vec(a.dim(), i), a.basis_product(j, k));
        if (lhs != rhs) return false;
      }
  return true;
}

bool is_minimally_degenerate(const StructureAlgebra& a, const BilinearForm& form) {
  return form.radical() == leibniz_kernel(a);
}

}  // namespace leibkit
