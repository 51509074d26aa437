#include "leibkit/cohomology.hpp"

#include <string>

#include "leibkit/errors.hpp"

namespace leibkit {

namespace {

void require_inputs(const StructureAlgebra& l, const BimoduleRep& m) {
  if (!check_identities(l).left_leibniz)
    throw NotLeftLeibniz("cohomology requires a left Leibniz algebra");
  if (!(m.algebra == l)) throw DimensionMismatch("bimodule attached to a different algebra");
  if (!check_bimodule(m).all()) throw NotBimodule("cohomology requires a valid bimodule");
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t base) {
  std::size_t index = 0;
  for (auto slot : tuple) index = index * base + slot;
  return index;
}

bool next_tuple(std::vector<std::size_t>& tuple, std::size_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t cochain_space_dim(const StructureAlgebra& l, const BimoduleRep& m, std::size_t degree) {
  return m.dim() * power(l.dim(), degree);
}

CochainComplexSlice coboundary_matrix(const StructureAlgebra& l, const BimoduleRep& m,
                                      std::size_t degree, const CohomologyBudget& budget) {
  require_inputs(l, m);
  if (degree > budget.max_degree)
    throw BudgetExceeded("degree " + std::to_string(degree) + " exceeds the budget (" +
                         std::to_string(budget.max_degree) + ")");
  const std::size_t d = l.dim();
  const std::size_t md = m.dim();
  const std::size_t out_rows = cochain_space_dim(l, m, degree + 1);
  const std::size_t in_cols = cochain_space_dim(l, m, degree);
  if (out_rows > budget.max_space_dim || in_cols > budget.max_space_dim)
    throw BudgetExceeded("cochain space of dimension " + std::to_string(out_rows) +
                         " exceeds the budget");

  CochainComplexSlice slice{degree, SparseMatrix(out_rows, in_cols), std::nullopt};
  if (out_rows == 0 || d == 0) return slice;

  const std::size_t n = degree;
  std::vector<std::size_t> s(n + 1, 0);  // output tuple (x_1, ..., x_{n+1})
  std::vector<std::size_t> t(n, 0);      // input tuple scratch
  do {
    const std::size_t row_block = tuple_index(s, d) * md;

    // sum_{i=1..n} (-1)^{i+1} x_i . f(... x_i hat ...)
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      t.clear();
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) t.push_back(s[k]);
      const std::size_t col_block = tuple_index(t, d) * md;
      const int sign = (i % 2 == 0) ? 1 : -1;
      const Matrix& op = m.lambda[s[i]];
      for (std::size_t p = 0; p < md; ++p)
        for (std::size_t q = 0; q < md; ++q)
          if (op.at(p, q) != 0)
            slice.matrix.add(row_block + p, col_block + q,
                             sign > 0 ? op.at(p, q) : -op.at(p, q));
    }

    // (-1)^{n+1} f(x_1, ..., x_n) . x_{n+1}
    {
      t.assign(s.begin(), s.end() - 1);
      const std::size_t col_block = tuple_index(t, d) * md;
      const int sign = (n % 2 == 0) ? -1 : 1;
      const Matrix& op = m.rho[s[n]];
      for (std::size_t p = 0; p < md; ++p)
        for (std::size_t q = 0; q < md; ++q)
          if (op.at(p, q) != 0)
            slice.matrix.add(row_block + p, col_block + q,
                             sign > 0 ? op.at(p, q) : -op.at(p, q));
    }

    // sum_{i<j} (-1)^i f(... x_i hat ... x_i x_j ...), the product in slot j.
    for (std::size_t i = 0; i + 1 <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^i for 1-based i
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& coeff = l.c(s[i], s[j], k);
          if (coeff == 0) continue;
          t.clear();
          for (std::size_t slot = 0; slot <= n; ++slot) {
            if (slot == i) continue;
            t.push_back(slot == j ? k : s[slot]);
          }
          const std::size_t col_block = tuple_index(t, d) * md;
          for (std::size_t p = 0; p < md; ++p)
            slice.matrix.add(row_block + p, col_block + p, sign > 0 ? coeff : -coeff);
        }
      }
  } while (next_tuple(s, d));
  return slice;
}

std::size_t slice_rank(CochainComplexSlice& slice, const CohomologyBudget& budget) {
  if (slice.rank) return *slice.rank;
  if (slice.matrix.rows() * slice.matrix.cols() > budget.max_dense_entries)
    throw BudgetExceeded("rank computation exceeds the dense budget");
  slice.rank = slice.matrix.to_dense().rank();
  return *slice.rank;
}

CohomologyDims cohomology_dim(const StructureAlgebra& l, const BimoduleRep& m, std::size_t degree,
                              const CohomologyBudget& budget) {
  CochainComplexSlice dn = coboundary_matrix(l, m, degree, budget);
  CohomologyDims dims;
  dims.z_dim = dn.matrix.cols() - slice_rank(dn, budget);
  if (degree > 0) {
    CochainComplexSlice prev = coboundary_matrix(l, m, degree - 1, budget);
    if (!(dn.matrix * prev.matrix).is_zero())
      throw Error("internal: image of d^(n-1) is not contained in ker d^n");
    dims.b_dim = slice_rank(prev, budget);
  }
  dims.h_dim = dims.z_dim - dims.b_dim;
  return dims;
}

bool verify_complex(const StructureAlgebra& l, const BimoduleRep& m, std::size_t max_degree,
                    const CohomologyBudget& budget) {
  CochainComplexSlice current = coboundary_matrix(l, m, 0, budget);
  for (std::size_t n = 0; n < max_degree; ++n) {
    CochainComplexSlice next = coboundary_matrix(l, m, n + 1, budget);
    if (!(next.matrix * current.matrix).is_zero()) return false;
    current = std::move(next);
  }
  return true;
}

DegreeOneSpaces degree_one_spaces(const StructureAlgebra& l, const BimoduleRep& m,
                                  const CohomologyBudget& budget) {
  CochainComplexSlice d1 = coboundary_matrix(l, m, 1, budget);
  CochainComplexSlice d0 = coboundary_matrix(l, m, 0, budget);

  DegreeOneSpaces out{Subspace::span(d1.matrix.to_dense().kernel()),
                      Subspace(cochain_space_dim(l, m, 1))};
  std::vector<Vec> images;
  const Matrix dense0 = d0.matrix.to_dense();
  for (std::size_t j = 0; j < dense0.cols(); ++j) images.push_back(dense0.col(j));
  out.inner = Subspace::span(cochain_space_dim(l, m, 1), images);

  // Kernel vectors of d^1 are exactly the derivations from L to M; check
  // the defining identity directly on basis pairs.
  const std::size_t md = m.dim();
  for (std::size_t r = 0; r < out.derivations.dim(); ++r) {
    const Vec& f = out.derivations.basis_vector(r);
    auto value_at = [&](std::size_t i) {
      return Vec(f.begin() + static_cast<long>(i * md), f.begin() + static_cast<long>((i + 1) * md));
    };
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Vec f_of_product(md, Scalar(0));
        for (std::size_t k = 0; k < l.dim(); ++k)
          if (l.c(i, j, k) != 0) add_scaled(f_of_product, l.c(i, j, k), value_at(k));
        const Vec expected = m.rho[j].apply(value_at(i)) + m.lambda[i].apply(value_at(j));
        if (!is_zero(f_of_product - expected))
          throw Error("internal: kernel of d^1 is not the derivation space");
      }
  }
  return out;
}

StructureAlgebra extension_from_cocycle(const StructureAlgebra& l, const BimoduleRep& m,
                                        const Cochain& f, const std::string& name,
                                        const CohomologyBudget& budget) {
  require_inputs(l, m);
  if (f.degree != 2) throw DimensionMismatch("extension requires a 2-cochain");
  if (f.values.size() != cochain_space_dim(l, m, 2))
    throw DimensionMismatch("2-cochain has the wrong number of coefficients");

  CochainComplexSlice d2 = coboundary_matrix(l, m, 2, budget);
  const Vec image = d2.matrix.apply(f.values);
  for (std::size_t e = 0; e < image.size(); ++e) {
    if (image[e] == 0) continue;
    const std::size_t tuple = e / m.dim();
    const std::size_t d = l.dim();
    const std::size_t i = tuple / (d * d);
    const std::size_t j = (tuple / d) % d;
    const std::size_t k = tuple % d;
    throw NotACocycle("d^2 f is nonzero at the triple (" + l.label(i) + ", " + l.label(j) + ", " +
                      l.label(k) + ")");
  }

  const std::size_t d = l.dim();
  const std::size_t md = m.dim();
  StructureAlgebra out(name, extension_labels(l, m.labels));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec product(d + md, Scalar(0));
      const Vec base = l.basis_product(i, j);
      std::copy(base.begin(), base.end(), product.begin());
      for (std::size_t a = 0; a < md; ++a) product[d + a] = f.values[(i * d + j) * md + a];
      out.set_product(i, j, product);
    }
    for (std::size_t b = 0; b < md; ++b) {
      Vec left_product(d + md, Scalar(0));
      const Vec lambda_col = m.lambda[i].col(b);
      std::copy(lambda_col.begin(), lambda_col.end(), left_product.begin() + static_cast<long>(d));
      out.set_product(i, d + b, left_product);

      Vec right_product(d + md, Scalar(0));
      const Vec rho_col = m.rho[i].col(b);
      std::copy(rho_col.begin(), rho_col.end(), right_product.begin() + static_cast<long>(d));
      out.set_product(d + b, i, right_product);
    }
  }
  if (!check_identities(out).left_leibniz)
    throw Error("internal: cocycle extension is not left Leibniz");
  return out;
}

Matrix extension_equivalence_map(const StructureAlgebra& l, const BimoduleRep& m, const Matrix& g) {
  if (g.rows() != m.dim() || g.cols() != l.dim())
    throw DimensionMismatch("equivalence map needs a linear map L -> M");
  const std::size_t d = l.dim();
  const std::size_t md = m.dim();
  Matrix out = Matrix::identity(d + md);
  for (std::size_t a = 0; a < md; ++a)
    for (std::size_t i = 0; i < d; ++i) out.at(d + a, i) = g.at(a, i);
  return out;
}

}  // namespace leibkit
