#include "leibkit/algebra.hpp"

#include <set>

#include "leibkit/errors.hpp"

namespace leibkit {

StructureAlgebra::StructureAlgebra(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)), labels_(std::move(basis_labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("duplicate basis label");
  tensor_.assign(dim() * dim() * dim(), Scalar(0));
}

void StructureAlgebra::set_product(std::size_t i, std::size_t j, const Vec& result) {
  if (i >= dim() || j >= dim() || result.size() != dim())
    throw DimensionMismatch("set_product index or vector out of range");
  for (std::size_t k = 0; k < dim(); ++k) tensor_[(i * dim() + j) * dim() + k] = result[k];
}

Vec StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
  return out;
}

Vec multiply(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("multiply operand length");
  Vec out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Scalar coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != 0) out[k] += coeff * a.c(i, j, k);
    }
  }
  return out;
}

Matrix mult_operator(const StructureAlgebra& a, const Vec& x, Side side) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionMismatch("mult_operator vector length");
  Matrix op(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec image = side == Side::left ? multiply(a, x, unit_vec(n, j))
                                         : multiply(a, unit_vec(n, j), x);
    for (std::size_t k = 0; k < n; ++k) op.at(k, j) = image[k];
  }
  return op;
}

std::vector<Matrix> basis_operators(const StructureAlgebra& a, Side side) {
  std::vector<Matrix> ops;
  ops.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) ops.push_back(mult_operator(a, unit_vec(a.dim(), i), side));
  return ops;
}

namespace {

// Right center as a kernel, local to the associativity cross-check below.
Subspace right_center_kernel(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) stacked.at(k * n + j, i) = a.c(j, i, k);
  return Subspace::span(stacked.kernel());
}

}  // namespace

IdentityFlags check_identities(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const auto left_ops = basis_operators(a, Side::left);
  const auto right_ops = basis_operators(a, Side::right);

  IdentityFlags flags;
  flags.left_leibniz = true;
  flags.right_leibniz = true;
  flags.flexible = true;
  flags.associative = true;
  bool anticommutative = true;

  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(a.basis_product(i, i))) anticommutative = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && !is_zero(a.basis_product(i, j) + a.basis_product(j, i))) anticommutative = false;
      for (std::size_t k = 0; k < n; ++k) {
        const Vec left_of_right = left_ops[i].apply(a.basis_product(j, k));    // e_i (e_j e_k)
        const Vec right_of_left = right_ops[k].apply(a.basis_product(i, j));   // (e_i e_j) e_k
        if (flags.left_leibniz &&
            !is_zero(left_of_right - right_of_left - left_ops[j].apply(a.basis_product(i, k))))
          flags.left_leibniz = false;
        if (flags.right_leibniz &&
            !is_zero(right_of_left - right_ops[j].apply(a.basis_product(i, k)) - left_of_right))
          flags.right_leibniz = false;
        if (flags.associative && !is_zero(right_of_left - left_of_right)) flags.associative = false;
        if (flags.flexible) {
          // Polarization of x(yx) = (xy)x in characteristic zero.
          const Vec mirror = left_ops[k].apply(a.basis_product(j, i)) -
                             right_ops[i].apply(a.basis_product(k, j));
          if (!is_zero((left_of_right - right_of_left) + mirror)) flags.flexible = false;
        }
      }
    }
  }

  flags.symmetric = flags.left_leibniz && flags.right_leibniz;
  flags.lie = anticommutative && flags.left_leibniz;

  if (flags.left_leibniz) {
    // Cross-route: a left Leibniz algebra is associative exactly when
    // its square lies in the right center.
    const bool via_center = right_center_kernel(a).contains(square(a));
    if (via_center != flags.associative)
      throw Error("internal: associativity routes disagree on " + a.name());
  }
  return flags;
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  StructureAlgebra out(a.name() + "_op", a.labels());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.basis_product(j, i));
  return out;
}

StructureAlgebra transform_algebra(const StructureAlgebra& a, const Matrix& change_of_basis) {
  const std::size_t n = a.dim();
  if (change_of_basis.rows() != n || change_of_basis.cols() != n)
    throw DimensionMismatch("change of basis has wrong shape");
  const auto inverse = change_of_basis.inverse();
  if (!inverse) throw Error("change of basis is singular");
  StructureAlgebra out(a.name(), a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec product = multiply(a, change_of_basis.col(i), change_of_basis.col(j));
      out.set_product(i, j, inverse->apply(product));
    }
  return out;
}

Subspace subspace_product(const StructureAlgebra& a, const Subspace& s, const Subspace& t) {
  if (s.ambient() != a.dim() || t.ambient() != a.dim())
    throw DimensionMismatch("subspace_product ambient mismatch");
  std::vector<Vec> products;
  products.reserve(s.dim() * t.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      products.push_back(multiply(a, s.basis_vector(i), t.basis_vector(j)));
  return Subspace::span(a.dim(), products);
}

Subspace square(const StructureAlgebra& a) {
  const Subspace whole = Subspace::full(a.dim());
  return subspace_product(a, whole, whole);
}

IdealFlags is_ideal(const StructureAlgebra& a, const Subspace& s) {
  const Subspace whole = Subspace::full(a.dim());
  IdealFlags flags;
  flags.left = s.contains(subspace_product(a, whole, s));
  flags.right = s.contains(subspace_product(a, s, whole));
  flags.two_sided = flags.left && flags.right;
  return flags;
}

Subspace ideal_closure(const StructureAlgebra& a, const Vec& v) {
  if (v.size() != a.dim()) throw DimensionMismatch("ideal_closure vector length");
  Subspace closure = Subspace::span(a.dim(), {v});
  const Subspace whole = Subspace::full(a.dim());
  while (true) {
    const Subspace grown =
        closure + subspace_product(a, whole, closure) + subspace_product(a, closure, whole);
    if (grown == closure) return closure;
    closure = grown;
  }
}

QuotientResult quotient(const StructureAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient() != a.dim()) throw DimensionMismatch("ideal in wrong ambient space");
  if (!is_ideal(a, ideal).two_sided)
    throw NotAnIdeal("quotient by a subspace that is not a two-sided ideal");
  if (ideal.is_zero())
    return {a, Matrix::identity(a.dim()), Matrix::identity(a.dim()), ideal};
  const std::size_t q = a.dim() - ideal.dim();
  auto split = complement_split(ideal);

  std::vector<std::string> labels;
  labels.reserve(q);
  for (auto idx : split.complement_columns) labels.push_back(a.label(idx));
  StructureAlgebra quot(a.name() + "_q", labels);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const Vec product = multiply(a, split.section.col(i), split.section.col(j));
      quot.set_product(i, j, split.projection.apply(product));
    }
  return {std::move(quot), std::move(split.projection), std::move(split.section), ideal};
}

Subspace quotient_preimage(const QuotientResult& q, const Subspace& sub) {
  if (sub.ambient() != q.algebra.dim()) throw DimensionMismatch("preimage ambient mismatch");
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < q.ideal.dim(); ++i) generators.push_back(q.ideal.basis_vector(i));
  for (std::size_t i = 0; i < sub.dim(); ++i) generators.push_back(q.section.apply(sub.basis_vector(i)));
  return Subspace::span(q.section.rows(), generators);
}

StructureAlgebra subalgebra(const StructureAlgebra& a, const Subspace& s, const std::string& name) {
  if (s.ambient() != a.dim()) throw DimensionMismatch("subalgebra ambient mismatch");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.dim(); ++i) labels.push_back("s" + std::to_string(i));
  StructureAlgebra out(name, labels);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vec product = multiply(a, s.basis_vector(i), s.basis_vector(j));
      const auto coords = s.coordinates(product);
      if (!coords) throw NotASubalgebra("subspace is not closed under the product");
      out.set_product(i, j, *coords);
    }
  return out;
}

bool is_homomorphism(const StructureAlgebra& domain, const StructureAlgebra& codomain,
                     const Matrix& map) {
  if (map.rows() != codomain.dim() || map.cols() != domain.dim())
    throw DimensionMismatch("homomorphism matrix shape");
  for (std::size_t i = 0; i < domain.dim(); ++i)
    for (std::size_t j = 0; j < domain.dim(); ++j) {
      const Vec lhs = map.apply(domain.basis_product(i, j));
      const Vec rhs = multiply(codomain, map.col(i), map.col(j));
      if (!is_zero(lhs - rhs)) return false;
    }
  return true;
}

}  // namespace leibkit
