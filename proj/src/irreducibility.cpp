#include "leibkit/irreducibility.hpp"

#include "leibkit/errors.hpp"

namespace leibkit {

Subspace commutant(const std::vector<Matrix>& ops, std::size_t dim) {
  // Unknowns X(p,q) flattened as p*dim + q; equations (X T - T X)(p,q) = 0.
  Matrix system(ops.size() * dim * dim, dim * dim);
  for (std::size_t t = 0; t < ops.size(); ++t)
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        const std::size_t row = (t * dim + p) * dim + q;
        for (std::size_t r = 0; r < dim; ++r) {
          if (ops[t].at(r, q) != 0) system.at(row, p * dim + r) += ops[t].at(r, q);
          if (ops[t].at(p, r) != 0) system.at(row, r * dim + q) -= ops[t].at(p, r);
        }
      }
  return Subspace::span(system.kernel());
}

namespace {

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? m.at(0, 0) : Scalar(0))) return false;
  return true;
}

}  // namespace

IrreducibilityVerdict is_irreducible_family(const std::vector<Matrix>& ops, std::size_t dim) {
  if (dim == 0) throw ZeroModule("irreducibility of the zero module");

  IrreducibilityVerdict verdict;
  const Subspace comm = commutant(ops, dim);
  verdict.commutant_dim = comm.dim();

  std::vector<Vec> probes;
  for (std::size_t i = 0; i < dim; ++i) probes.push_back(unit_vec(dim, i));
  for (const auto& op : ops)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec column = op.col(j);
      if (!is_zero(column)) probes.push_back(std::move(column));
    }

  bool all_spins_full = true;
  for (const auto& probe : probes) {
    Subspace spun = spin(ops, probe);
    if (spun.dim() < dim) {
      all_spins_full = false;
      verdict.status = Irreducibility::reducible;
      verdict.witness = std::move(spun);
      return verdict;
    }
  }

  for (std::size_t i = 0; i < comm.dim(); ++i) {
    const Matrix x = Matrix::unflatten(comm.basis_vector(i), dim, dim);
    if (is_scalar_matrix(x)) continue;
    for (const auto& eigenvalue : rational_roots(minimal_polynomial(x))) {
      Matrix shifted = x;
      for (std::size_t d = 0; d < dim; ++d) shifted.at(d, d) -= eigenvalue;
      Subspace eigenspace = Subspace::span(shifted.kernel());
      if (!eigenspace.is_zero() && eigenspace.dim() < dim) {
        // Kernels of commutant elements are invariant under the family.
        verdict.status = Irreducibility::reducible;
        verdict.witness = std::move(eigenspace);
        return verdict;
      }
    }
  }

  verdict.status = (comm.dim() == 1 && all_spins_full) ? Irreducibility::irreducible
                                                       : Irreducibility::unknown;
  return verdict;
}

}  // namespace leibkit
