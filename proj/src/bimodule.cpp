#include "leibkit/bimodule.hpp"

#include <algorithm>
#include <set>

#include "leibkit/errors.hpp"
#include "leibkit/structure.hpp"

namespace leibkit {

namespace {

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void require_operator_family(const StructureAlgebra& a, const std::vector<Matrix>& ops,
                             std::size_t dim) {
  if (ops.size() != a.dim()) throw DimensionMismatch("one operator per algebra basis element");
  for (const auto& op : ops)
    if (op.rows() != dim || op.cols() != dim) throw DimensionMismatch("operator shape mismatch");
}

// lambda_{e_i e_j} by bilinearity.
Matrix combined(const StructureAlgebra& a, const std::vector<Matrix>& family, std::size_t i,
                std::size_t j, std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (a.c(i, j, k) != 0) out = out + a.c(i, j, k) * family[k];
  return out;
}

}  // namespace

LeftModule left_module(StructureAlgebra algebra, std::vector<Matrix> action,
                       std::vector<std::string> labels) {
  const std::size_t dim = action.empty() ? labels.size() : action.front().rows();
  if (labels.empty()) labels = default_labels(dim, "m");
  if (labels.size() != dim) throw DimensionMismatch("module label count mismatch");
  require_operator_family(algebra, action, dim);
  return {std::move(algebra), std::move(labels), std::move(action)};
}

Vec BimoduleRep::act_left(const Vec& x, const Vec& m) const {
  if (x.size() != algebra.dim() || m.size() != dim()) throw DimensionMismatch("act_left shapes");
  Vec out(dim(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) add_scaled(out, x[i], lambda[i].apply(m));
  return out;
}

Vec BimoduleRep::act_right(const Vec& m, const Vec& x) const {
  if (x.size() != algebra.dim() || m.size() != dim()) throw DimensionMismatch("act_right shapes");
  Vec out(dim(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) add_scaled(out, x[i], rho[i].apply(m));
  return out;
}

std::vector<Matrix> BimoduleRep::all_operators() const {
  std::vector<Matrix> ops = lambda;
  ops.insert(ops.end(), rho.begin(), rho.end());
  return ops;
}

BimoduleRep bimodule(StructureAlgebra algebra, std::vector<Matrix> lambda, std::vector<Matrix> rho,
                     std::vector<std::string> labels) {
  const std::size_t dim = lambda.empty() ? labels.size() : lambda.front().rows();
  if (labels.empty()) labels = default_labels(dim, "m");
  if (labels.size() != dim) throw DimensionMismatch("module label count mismatch");
  require_operator_family(algebra, lambda, dim);
  require_operator_family(algebra, rho, dim);
  return {std::move(algebra), std::move(labels), std::move(lambda), std::move(rho)};
}

LeftModule adjoint_module(const StructureAlgebra& a) {
  return left_module(a, basis_operators(a, Side::left), a.labels());
}

BimoduleRep adjoint_bimodule(const StructureAlgebra& a) {
  return bimodule(a, basis_operators(a, Side::left), basis_operators(a, Side::right), a.labels());
}

BimoduleRep trivial_bimodule(const StructureAlgebra& a, std::size_t dim) {
  std::vector<Matrix> zeros(a.dim(), Matrix(dim, dim));
  return bimodule(a, zeros, zeros, default_labels(dim, "t"));
}

LeftModuleCheck check_left_module(const LeftModule& m) {
  const std::size_t n = m.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = combined(m.algebra, m.action, i, j, m.dim());
      const Matrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
      if (!(lhs == rhs)) return {false, std::make_pair(i, j)};
    }
  return {true, std::nullopt};
}

BimoduleAxioms check_bimodule(const BimoduleRep& m) {
  const std::size_t n = m.algebra.dim();
  BimoduleAxioms axioms{true, true, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lam_ij = combined(m.algebra, m.lambda, i, j, m.dim());
      const Matrix rho_ij = combined(m.algebra, m.rho, i, j, m.dim());
      if (!(lam_ij == m.lambda[i] * m.lambda[j] - m.lambda[j] * m.lambda[i])) axioms.llm = false;
      if (!(rho_ij == m.lambda[i] * m.rho[j] - m.rho[j] * m.lambda[i])) axioms.lml = false;
      if (!(rho_ij == m.rho[j] * m.rho[i] + m.lambda[i] * m.rho[j])) axioms.mll = false;
    }
  if (axioms.all()) {
    // Consequence of the last two axioms: rho_y o (lambda_x + rho_x) = 0.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!(m.rho[y] * (m.lambda[x] + m.rho[x])).is_zero())
          throw Error("internal: bimodule axioms hold but rho(lambda+rho) != 0");
  }
  return axioms;
}

SymmetryFlags classify_symmetry(const BimoduleRep& m) {
  SymmetryFlags flags{true, true, false};
  for (std::size_t i = 0; i < m.algebra.dim(); ++i) {
    if (!(m.rho[i] + m.lambda[i]).is_zero()) flags.symmetric = false;
    if (!m.rho[i].is_zero()) flags.anti_symmetric = false;
  }
  flags.trivial = flags.symmetric && flags.anti_symmetric;
  return flags;
}

namespace {

// Kernel of x -> sum x_i ops[i], as a subspace of the algebra.
Subspace family_kernel(const std::vector<Matrix>& ops, std::size_t module_dim, std::size_t n) {
  Matrix stacked(module_dim * module_dim, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec flat = ops[i].flatten();
    for (std::size_t e = 0; e < flat.size(); ++e) stacked.at(e, i) = flat[e];
  }
  return Subspace::span(stacked.kernel());
}

}  // namespace

Annihilators annihilators(const BimoduleRep& m) {
  const std::size_t n = m.algebra.dim();
  Annihilators out{family_kernel(m.lambda, m.dim(), n), family_kernel(m.rho, m.dim(), n),
                   Subspace(n)};
  out.bi_annihilator = out.left_kernel.intersect(out.right_kernel);
  if (check_bimodule(m).llm && !out.left_kernel.contains(leibniz_kernel(m.algebra)))
    throw Error("internal: Leibniz kernel does not annihilate a left module");
  return out;
}

Subspace anti_symmetric_kernel(const BimoduleRep& m) {
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < m.algebra.dim(); ++i) {
    const Matrix sum = m.lambda[i] + m.rho[i];
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Vec column = sum.col(j);
      if (!is_zero(column)) generators.push_back(std::move(column));
    }
  }
  return Subspace::span(m.dim(), generators);
}

BimoduleRep restrict_bimodule(const BimoduleRep& m, const Subspace& invariant) {
  std::vector<Matrix> lambda, rho;
  for (const auto& op : m.lambda) lambda.push_back(restrict_operator(op, invariant));
  for (const auto& op : m.rho) rho.push_back(restrict_operator(op, invariant));
  return bimodule(m.algebra, std::move(lambda), std::move(rho),
                  default_labels(invariant.dim(), "r"));
}

namespace {

struct QuotientRep {
  BimoduleRep rep;
  Matrix section;
};

QuotientRep quotient_with_section(const BimoduleRep& m, const Subspace& invariant) {
  const auto split = complement_split(invariant);
  std::vector<Matrix> lambda, rho;
  for (const auto& op : m.lambda) lambda.push_back(split.projection * op * split.section);
  for (const auto& op : m.rho) rho.push_back(split.projection * op * split.section);
  std::vector<std::string> labels;
  for (auto idx : split.complement_columns) labels.push_back(m.labels[idx]);
  return {bimodule(m.algebra, std::move(lambda), std::move(rho), std::move(labels)),
          split.section};
}

}  // namespace

BimoduleRep quotient_bimodule(const BimoduleRep& m, const Subspace& invariant) {
  for (const auto& op : m.all_operators())
    for (std::size_t i = 0; i < invariant.dim(); ++i)
      if (!invariant.contains(op.apply(invariant.basis_vector(i))))
        throw DimensionMismatch("quotient by a non-invariant subspace");
  return quotient_with_section(m, invariant).rep;
}

BimoduleRep symmetrization(const BimoduleRep& m) {
  BimoduleRep quotient_rep = quotient_bimodule(m, anti_symmetric_kernel(m));
  if (!classify_symmetry(quotient_rep).symmetric)
    throw Error("internal: symmetrization is not symmetric");
  return quotient_rep;
}

IrreducibilityVerdict is_irreducible(const BimoduleRep& m) {
  auto verdict = is_irreducible_family(m.all_operators(), m.dim());
  if (verdict.status == Irreducibility::irreducible && check_bimodule(m).all()) {
    const auto flags = classify_symmetry(m);
    if (!flags.symmetric && !flags.anti_symmetric)
      throw Error("internal: irreducible bimodule is neither symmetric nor anti-symmetric");
    const Subspace kernel = anti_symmetric_kernel(m);
    if (!kernel.is_zero() && kernel.dim() != m.dim())
      throw Error("internal: anti-symmetric kernel of an irreducible bimodule is proper");
  }
  return verdict;
}

IrreducibilityVerdict is_irreducible(const LeftModule& m) {
  return is_irreducible_family(m.action, m.dim());
}

BimoduleRep make_bimodule(const LeftModule& m, BimoduleKind kind) {
  std::vector<Matrix> rho;
  rho.reserve(m.action.size());
  for (const auto& op : m.action) rho.push_back(kind == BimoduleKind::anti ? Matrix(m.dim(), m.dim()) : -op);
  BimoduleRep rep = bimodule(m.algebra, m.action, std::move(rho), m.labels);
  if (check_left_module(m).ok && !check_bimodule(rep).all())
    throw Error("internal: induced bimodule fails the axioms");
  return rep;
}

std::vector<std::string> extension_labels(const StructureAlgebra& a,
                                          const std::vector<std::string>& module_labels) {
  std::vector<std::string> labels = a.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& label : module_labels) {
    std::string candidate = label;
    while (used.count(candidate)) candidate = "m_" + candidate;
    used.insert(candidate);
    labels.push_back(std::move(candidate));
  }
  return labels;
}

StructureAlgebra hemi_semidirect_product(const StructureAlgebra& lie_algebra, const LeftModule& m,
                                         const std::string& name) {
  if (!check_identities(lie_algebra).lie)
    throw NotLie("hemi-semidirect product requires a Lie algebra");
  if (!(m.algebra == lie_algebra)) throw DimensionMismatch("module attached to a different algebra");
  if (!check_left_module(m).ok) throw NotModule("hemi-semidirect product requires a left module");

  const std::size_t n = lie_algebra.dim();
  StructureAlgebra out(name, extension_labels(lie_algebra, m.labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec product(out.dim(), Scalar(0));
      const Vec base = lie_algebra.basis_product(i, j);
      std::copy(base.begin(), base.end(), product.begin());
      out.set_product(i, j, product);
    }
    for (std::size_t b = 0; b < m.dim(); ++b) {
      Vec product(out.dim(), Scalar(0));
      const Vec image = m.action[i].col(b);
      std::copy(image.begin(), image.end(), product.begin() + static_cast<long>(n));
      out.set_product(i, n + b, product);
    }
  }
  if (!check_identities(out).left_leibniz)
    throw Error("internal: hemi-semidirect product is not left Leibniz");
  return out;
}

Subspace engel_joint_kernel(const BimoduleRep& m) {
  if (!check_identities(m.algebra).left_leibniz)
    throw NotLeftLeibniz("Engel joint kernel requires a left Leibniz algebra");
  for (const auto& op : m.lambda)
    if (!op.is_nilpotent()) throw LambdaNotNilpotent("a lambda operator is not nilpotent");
  const Subspace kernel = joint_kernel(m.all_operators(), m.dim());
  if (m.dim() > 0 && kernel.is_zero())
    throw Error("internal: Engel joint kernel is zero for a nilpotent family");
  return kernel;
}

namespace {

// One minimal invariant subspace of the rep, plus whether its factor was
// certified irreducible. Prefers constructive one-dimensional steps.
std::pair<Subspace, bool> minimal_invariant(const BimoduleRep& m) {
  const auto flags = check_identities(m.algebra);
  const bool lambdas_nilpotent =
      std::all_of(m.lambda.begin(), m.lambda.end(), [](const Matrix& op) { return op.is_nilpotent(); });
  if (flags.left_leibniz && lambdas_nilpotent) {
    const Subspace kernel = engel_joint_kernel(m);
    return {Subspace::span(m.dim(), {kernel.basis_vector(0)}), true};
  }
  if (is_solvable(m.algebra)) {
    const auto vector = common_eigenvector(m.algebra, m.lambda, m.rho);
    if (vector) return {Subspace::span(m.dim(), {*vector}), true};
  }

  const auto family = m.all_operators();
  Subspace candidate = Subspace::full(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const Subspace spun = spin(family, unit_vec(m.dim(), i));
    if (spun.dim() < candidate.dim()) candidate = spun;
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < candidate.dim(); ++i) {
      const Subspace spun = spin(family, candidate.basis_vector(i));
      if (spun.dim() < candidate.dim()) {
        candidate = spun;
        improved = true;
        break;
      }
    }
  }
  while (true) {
    const auto verdict = is_irreducible(restrict_bimodule(m, candidate));
    if (verdict.status == Irreducibility::reducible) {
      candidate = embed(*verdict.witness, candidate);
      continue;
    }
    return {candidate, verdict.status == Irreducibility::irreducible};
  }
}

}  // namespace

CompositionSeries composition_series(const BimoduleRep& m) {
  CompositionSeries out{{Subspace(m.dim())}, true};
  BimoduleRep current = m;
  Matrix section_total = Matrix::identity(m.dim());
  while (out.terms.back().dim() < m.dim()) {
    auto [factor, certified] = minimal_invariant(current);
    out.certified = out.certified && certified;

    std::vector<Vec> lifted;
    for (std::size_t i = 0; i < factor.dim(); ++i)
      lifted.push_back(section_total.apply(factor.basis_vector(i)));
    out.terms.push_back(out.terms.back() + Subspace::span(m.dim(), lifted));

    auto next = quotient_with_section(current, factor);
    section_total = section_total * next.section;
    current = std::move(next.rep);
  }
  return out;
}

}  // namespace leibkit
