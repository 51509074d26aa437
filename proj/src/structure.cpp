#include "leibkit/structure.hpp"

#include "leibkit/errors.hpp"
#include "leibkit/invariants.hpp"
#include "leibkit/irreducibility.hpp"

namespace leibkit {

Tribool tribool_and(Tribool a, Tribool b) {
  if (a == Tribool::no || b == Tribool::no) return Tribool::no;
  if (a == Tribool::unknown || b == Tribool::unknown) return Tribool::unknown;
  return Tribool::yes;
}

const char* to_string(Tribool t) {
  switch (t) {
    case Tribool::no: return "no";
    case Tribool::yes: return "yes";
    case Tribool::unknown: return "unknown";
  }
  return "unknown";
}

bool is_solvable(const StructureAlgebra& a) { return series(a, SeriesKind::derived).reaches_zero; }

bool is_nilpotent(const StructureAlgebra& a) {
  return series(a, SeriesKind::mixed_central).reaches_zero;
}

namespace {

std::vector<Vec> polarized_candidates(const StructureAlgebra& a) {
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    candidates.push_back(unit_vec(a.dim(), i));
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      candidates.push_back(unit_vec(a.dim(), i) + unit_vec(a.dim(), j));
  }
  return candidates;
}

}  // namespace

bool is_nilpotent_engel(const StructureAlgebra& a) {
  if (!check_identities(a).left_leibniz)
    throw NotLeftLeibniz("Engel nilpotency test requires a left Leibniz algebra");
  for (const auto& x : polarized_candidates(a))
    if (!mult_operator(a, x, Side::left).is_nilpotent()) return false;
  return true;
}

bool cartan_solvable(const StructureAlgebra& a) {
  if (!check_identities(a).left_leibniz)
    throw NotLeftLeibniz("Cartan's criterion requires a left Leibniz algebra");
  return killing_form(a).radical().contains(square(a));
}

QuotientResult canonical_lie(const StructureAlgebra& a) { return quotient(a, leibniz_kernel(a)); }

Subspace radical(const StructureAlgebra& a) {
  const auto flags = check_identities(a);
  if (!flags.left_leibniz && !flags.right_leibniz)
    throw NotLeibniz("radical requires a left or right Leibniz algebra");
  if (a.dim() == 0) return Subspace(0);

  const QuotientResult lie = canonical_lie(a);
  const BilinearForm kappa = killing_form(lie.algebra);
  const Subspace derived = square(lie.algebra);
  // rad(g) = Killing-orthogonal complement of g^2 (characteristic zero).
  const Matrix constraints = derived.basis() * kappa.gram;
  const Subspace lie_radical = Subspace::span(constraints.kernel());
  Subspace result = quotient_preimage(lie, lie_radical);

  if (!is_ideal(a, result).two_sided)
    throw Error("internal: radical of " + a.name() + " is not an ideal");
  if (!is_solvable(subalgebra(a, result, a.name() + "_rad")))
    throw Error("internal: radical of " + a.name() + " is not solvable");
  return result;
}

namespace {

Tribool from_verdict(Irreducibility status) {
  switch (status) {
    case Irreducibility::irreducible: return Tribool::yes;
    case Irreducibility::reducible: return Tribool::no;
    case Irreducibility::unknown: return Tribool::unknown;
  }
  return Tribool::unknown;
}

}  // namespace

StructuralPredicates structural_predicates(const StructureAlgebra& a) {
  const auto flags = check_identities(a);
  if (!flags.left_leibniz && !flags.right_leibniz)
    throw NotLeibniz("structural predicates require a left or right Leibniz algebra");

  StructuralPredicates out;
  const Subspace sq = square(a);
  out.perfect = sq.is_full();
  const Subspace leib = leibniz_kernel(a);
  out.semisimple = radical(a) == leib;

  const QuotientResult lie = canonical_lie(a);
  if (lie.algebra.dim() == 0 || square(lie.algebra).is_zero()) {
    out.lie_simple = Tribool::no;
  } else {
    const auto verdict = is_irreducible_family(basis_operators(lie.algebra, Side::left),
                                               lie.algebra.dim());
    out.lie_simple = from_verdict(verdict.status);
    if (verdict.status == Irreducibility::reducible)
      out.witness_ideal = quotient_preimage(lie, *verdict.witness);
  }

  Tribool kernel_irreducible = Tribool::yes;
  if (!leib.is_zero()) {
    std::vector<Matrix> restricted;
    for (const auto& op : basis_operators(a, Side::left)) restricted.push_back(restrict_operator(op, leib));
    for (const auto& op : basis_operators(a, Side::right)) restricted.push_back(restrict_operator(op, leib));
    const auto verdict = is_irreducible_family(restricted, leib.dim());
    kernel_irreducible = from_verdict(verdict.status);
    if (verdict.status == Irreducibility::reducible && !out.witness_ideal)
      out.witness_ideal = embed(*verdict.witness, leib);
  }

  if (!out.perfect)
    out.simple = Tribool::no;
  else
    out.simple = tribool_and(out.lie_simple, kernel_irreducible);
  return out;
}

std::optional<PowerWitness> power_witness(const StructureAlgebra& a) {
  for (const auto& x : polarized_candidates(a)) {
    const Vec sq = multiply(a, x, x);
    const Vec right = multiply(a, sq, x);
    const Vec left = multiply(a, x, sq);
    if (!is_zero(right - left)) return PowerWitness{x, right, left};
  }
  return std::nullopt;
}

bool third_power_zero(const StructureAlgebra& a) {
  for (const auto& x : polarized_candidates(a)) {
    const Vec sq = multiply(a, x, x);
    if (!is_zero(multiply(a, sq, x)) || !is_zero(multiply(a, x, sq))) return false;
  }
  return true;
}

namespace {

// Constructive Lie's theorem for a bracket-closed solvable span of
// matrices: returns a vector of W that every matrix in the span scales.
std::optional<Vec> solvable_joint_eigenvector(const std::vector<Matrix>& family,
                                              const Subspace& w_space) {
  const std::size_t q = w_space.ambient();
  std::vector<Vec> flats;
  for (const auto& m : family) flats.push_back(m.flatten());
  const Subspace span = Subspace::span(q * q, flats);
  if (span.dim() == 0) return w_space.basis_vector(0);

  std::vector<Matrix> span_basis;
  for (std::size_t i = 0; i < span.dim(); ++i)
    span_basis.push_back(Matrix::unflatten(span.basis_vector(i), q, q));

  // Codimension-one ideal containing the derived span, plus a complement.
  std::vector<Vec> derived_flats;
  for (std::size_t i = 0; i < span.dim(); ++i)
    for (std::size_t j = 0; j < span.dim(); ++j)
      derived_flats.push_back((span_basis[i] * span_basis[j] - span_basis[j] * span_basis[i]).flatten());
  Subspace ideal = Subspace::span(q * q, derived_flats);
  if (ideal.dim() >= span.dim())
    throw NotSolvable("matrix span is not solvable");
  std::optional<Matrix> complement;
  for (const auto& candidate : span_basis) {
    if (ideal.contains(candidate.flatten())) continue;
    if (ideal.dim() + 1 == span.dim()) {
      complement = candidate;
      break;
    }
    ideal = ideal + Subspace::span(q * q, {candidate.flatten()});
  }

  if (!complement) throw Error("internal: no complement for the codimension-one ideal");

  std::vector<Matrix> ideal_basis;
  for (std::size_t i = 0; i < ideal.dim(); ++i)
    ideal_basis.push_back(Matrix::unflatten(ideal.basis_vector(i), q, q));
  const auto inner = solvable_joint_eigenvector(ideal_basis, w_space);
  if (!inner) return std::nullopt;

  // Weight space of the ideal through the inner eigenvector; invariant
  // under the whole span in characteristic zero.
  Subspace weight_space = w_space;
  for (const auto& x : ideal_basis) {
    const Vec image = x.apply(*inner);
    std::size_t lead = 0;
    while (lead < inner->size() && (*inner)[lead] == 0) ++lead;
    const Scalar weight = image[lead] / (*inner)[lead];
    Matrix shifted = x;
    for (std::size_t d = 0; d < q; ++d) shifted.at(d, d) -= weight;
    if (!is_zero(shifted.apply(*inner)))
      throw Error("internal: inner vector is not a weight vector");
    weight_space = weight_space.intersect(Subspace::span(shifted.kernel()));
  }

  const Matrix z = restrict_operator(*complement, weight_space);
  const auto roots = rational_roots(minimal_polynomial(z));
  if (roots.empty()) return std::nullopt;
  Matrix shifted = z;
  for (std::size_t d = 0; d < z.rows(); ++d) shifted.at(d, d) -= roots.front();
  const Subspace eigen = Subspace::span(shifted.kernel());
  Vec result(q, Scalar(0));
  for (std::size_t k = 0; k < weight_space.dim(); ++k)
    add_scaled(result, eigen.basis_vector(0)[k], weight_space.basis_vector(k));
  return result;
}

bool satisfies_representation_equations(const StructureAlgebra& a,
                                        const std::vector<Matrix>& lambda,
                                        const std::vector<Matrix>& rho) {
  const std::size_t n = a.dim();
  auto combine = [&](const std::vector<Matrix>& family, std::size_t i, std::size_t j) {
    Matrix out(family[0].rows(), family[0].cols());
    for (std::size_t k = 0; k < n; ++k)
      if (a.c(i, j, k) != 0) out = out + a.c(i, j, k) * family[k];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(combine(lambda, i, j) == lambda[i] * lambda[j] - lambda[j] * lambda[i])) return false;
      if (!(combine(rho, i, j) == lambda[i] * rho[j] - rho[j] * lambda[i])) return false;
      if (!(combine(rho, i, j) == rho[j] * rho[i] + lambda[i] * rho[j])) return false;
    }
  return true;
}

}  // namespace

std::optional<Vec> common_eigenvector(const StructureAlgebra& a, const std::vector<Matrix>& lambda,
                                      const std::vector<Matrix>& rho) {
  if (!is_solvable(a)) throw NotSolvable("common eigenvector search requires a solvable algebra");
  if (lambda.size() != a.dim() || rho.size() != a.dim())
    throw DimensionMismatch("one operator pair per basis element expected");
  if (a.dim() == 0) throw DimensionMismatch("cannot infer the module space from an empty family");
  const std::size_t m = lambda[0].rows();
  if (m == 0) throw ZeroModule("common eigenvector of the zero module");
  if (!satisfies_representation_equations(a, lambda, rho))
    throw NotModule("operator pair is not a representation");

  std::vector<Matrix> family = lambda;
  family.insert(family.end(), rho.begin(), rho.end());

  // Minimal invariant subspace reachable by spinning.
  Subspace minimal = Subspace::full(m);
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < m; ++i) probes.push_back(unit_vec(m, i));
  for (const auto& op : family)
    for (std::size_t j = 0; j < m; ++j)
      if (!is_zero(op.col(j))) probes.push_back(op.col(j));
  for (const auto& probe : probes) {
    const Subspace spun = spin(family, probe);
    if (!spun.is_zero() && spun.dim() < minimal.dim()) minimal = spun;
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < minimal.dim(); ++i) {
      const Subspace spun = spin(family, minimal.basis_vector(i));
      if (spun.dim() < minimal.dim()) {
        minimal = spun;
        improved = true;
        break;
      }
    }
  }

  std::vector<Matrix> lambda_min, rho_min;
  for (const auto& op : lambda) lambda_min.push_back(restrict_operator(op, minimal));
  for (const auto& op : rho) rho_min.push_back(restrict_operator(op, minimal));

  bool anti_symmetric = true, symmetric = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!rho_min[i].is_zero()) anti_symmetric = false;
    if (!(rho_min[i] + lambda_min[i]).is_zero()) symmetric = false;
  }
  // On an irreducible piece rho is 0 or -lambda; anything else means the
  // spin search failed to isolate one, and we give up over Q.
  if (!anti_symmetric && !symmetric) return std::nullopt;

  const auto inner = solvable_joint_eigenvector(lambda_min, Subspace::full(minimal.dim()));
  if (!inner) return std::nullopt;

  Vec result(m, Scalar(0));
  for (std::size_t k = 0; k < minimal.dim(); ++k)
    add_scaled(result, (*inner)[k], minimal.basis_vector(k));

  const Subspace line = Subspace::span(m, {result});
  for (const auto& op : family)
    if (!line.contains(op.apply(result)))
      throw Error("internal: eigenvector verification failed");
  return result;
}

std::vector<Subspace> central_flag(const StructureAlgebra& a) {
  if (!is_nilpotent(a)) throw NotNilpotent("central flag requires a nilpotent algebra");
  const std::size_t n = a.dim();
  std::vector<Subspace> flag{Subspace(n)};
  StructureAlgebra current = a;
  Matrix section_total = Matrix::identity(n);

  while (flag.back().dim() < n) {
    std::vector<Matrix> ops = basis_operators(current, Side::left);
    for (auto& op : basis_operators(current, Side::right)) ops.push_back(std::move(op));
    const Subspace kernel = joint_kernel(ops, current.dim());
    if (kernel.is_zero())
      throw Error("internal: joint kernel vanished for a nilpotent algebra");

    const Subspace round_base = flag.back();
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
      const Vec lifted = section_total.apply(kernel.basis_vector(i));
      for (std::size_t b = 0; b < n; ++b) {
        if (!round_base.contains(multiply(a, unit_vec(n, b), lifted)) ||
            !round_base.contains(multiply(a, lifted, unit_vec(n, b))))
          throw Error("internal: central flag step is not central");
      }
      flag.push_back(flag.back() + Subspace::span(n, {lifted}));
    }

    const QuotientResult next = quotient(current, kernel);
    section_total = section_total * next.section;
    current = next.algebra;
  }
  return flag;
}

}  // namespace leibkit
