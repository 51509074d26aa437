#include "leibkit/invariants.hpp"

#include "leibkit/errors.hpp"

namespace leibkit {

namespace {

// Kernel of c -> (the matrix of L_c resp. R_c), flattened over all entries.
Subspace multiplication_kernel(const StructureAlgebra& a, Side side) {
  const std::size_t n = a.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        stacked.at(k * n + j, i) = side == Side::left ? a.c(i, j, k) : a.c(j, i, k);
  return Subspace::span(stacked.kernel());
}

}  // namespace

Centers centers(const StructureAlgebra& a) {
  Subspace left = multiplication_kernel(a, Side::left);
  Subspace right = multiplication_kernel(a, Side::right);
  Subspace center = left.intersect(right);
  return {std::move(left), std::move(right), std::move(center)};
}

Subspace leibniz_kernel(const StructureAlgebra& a) {
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    generators.push_back(a.basis_product(i, i));
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      generators.push_back(a.basis_product(i, j) + a.basis_product(j, i));
  }
  return Subspace::span(a.dim(), generators);
}

Subspace derivation_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  // Unknowns D(p,q) flattened as p*n + q; one equation per (i, j, p).
  Matrix system(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t row = (i * n + j) * n + p;
        for (std::size_t k = 0; k < n; ++k)
          if (a.c(i, j, k) != 0) system.at(row, p * n + k) += a.c(i, j, k);
        for (std::size_t q = 0; q < n; ++q) {
          if (a.c(q, j, p) != 0) system.at(row, q * n + i) -= a.c(q, j, p);
          if (a.c(i, q, p) != 0) system.at(row, q * n + j) -= a.c(i, q, p);
        }
      }
  return Subspace::span(system.kernel());
}

Subspace operator_span(const StructureAlgebra& a, OperatorFamily which) {
  const auto flags = check_identities(a);
  if (which == OperatorFamily::lie_mult && !flags.symmetric)
    throw NotSymmetric("lie_mult span requires a symmetric Leibniz algebra");

  std::vector<Vec> generators;
  if (which == OperatorFamily::left || which == OperatorFamily::lie_mult)
    for (const auto& op : basis_operators(a, Side::left)) generators.push_back(op.flatten());
  if (which == OperatorFamily::right || which == OperatorFamily::lie_mult)
    for (const auto& op : basis_operators(a, Side::right)) generators.push_back(op.flatten());
  Subspace span = Subspace::span(a.dim() * a.dim(), generators);

  const bool checkable = (which == OperatorFamily::left && flags.left_leibniz) ||
                         (which == OperatorFamily::right && flags.right_leibniz) ||
                         which == OperatorFamily::lie_mult;
  if (checkable && a.dim() > 0) {
    const Subspace derivations = derivation_algebra(a);
    if (!derivations.contains(span))
      throw Error("internal: multiplication operators are not derivations of " + a.name());
    for (std::size_t i = 0; i < span.dim(); ++i)
      for (std::size_t j = 0; j < span.dim(); ++j) {
        const Matrix x = Matrix::unflatten(span.basis_vector(i), a.dim(), a.dim());
        const Matrix y = Matrix::unflatten(span.basis_vector(j), a.dim(), a.dim());
        if (!span.contains((x * y - y * x).flatten()))
          throw Error("internal: operator span of " + a.name() + " is not commutator-closed");
      }
  }
  return span;
}

StructureAlgebra algebra_from_matrix_span(const Subspace& matrices, const std::string& name) {
  const std::size_t r = matrices.dim();
  std::size_t n = 0;
  while (n * n < matrices.ambient()) ++n;
  if (n * n != matrices.ambient())
    throw DimensionMismatch("ambient space is not a square matrix space");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("m" + std::to_string(i));
  StructureAlgebra out(name, labels);
  for (std::size_t i = 0; i < r; ++i) {
    const Matrix x = Matrix::unflatten(matrices.basis_vector(i), n, n);
    for (std::size_t j = 0; j < r; ++j) {
      const Matrix y = Matrix::unflatten(matrices.basis_vector(j), n, n);
      const auto coords = matrices.coordinates((x * y - y * x).flatten());
      if (!coords) throw NotASubalgebra("matrix span is not closed under the commutator");
      out.set_product(i, j, *coords);
    }
  }
  return out;
}

Subspace spin(const std::vector<Matrix>& ops, const Vec& seed) {
  Subspace result = Subspace::span(seed.size(), {seed});
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& op : ops)
      for (std::size_t i = 0; i < result.dim(); ++i) {
        const Vec image = op.apply(result.basis_vector(i));
        if (!result.contains(image)) {
          result = result + Subspace::span(seed.size(), {image});
          grew = true;
        }
      }
  }
  return result;
}

Subspace joint_kernel(const std::vector<Matrix>& ops, std::size_t space_dim) {
  if (ops.empty()) return Subspace::full(space_dim);
  Matrix stacked(ops.size() * space_dim, space_dim);
  for (std::size_t t = 0; t < ops.size(); ++t)
    for (std::size_t i = 0; i < space_dim; ++i)
      for (std::size_t j = 0; j < space_dim; ++j) stacked.at(t * space_dim + i, j) = ops[t].at(i, j);
  return Subspace::span(stacked.kernel());
}

}  // namespace leibkit
