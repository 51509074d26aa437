#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibkit/errors.hpp"
#include "leibkit/invariants.hpp"
#include "support/fixtures.hpp"

using namespace leibkit;
namespace fx = leibkit::testing;

namespace {

std::vector<std::pair<std::string, BimoduleRep>> bimodule_kinds(const StructureAlgebra& a) {
  return {{"adjoint", adjoint_bimodule(a)},
          {"anti_adjoint", make_bimodule(adjoint_module(a), BimoduleKind::anti)},
          {"sym_adjoint", make_bimodule(adjoint_module(a), BimoduleKind::sym)},
          {"trivial", trivial_bimodule(a, 1)}};
}

Cochain zero_cochain(const StructureAlgebra& a, const BimoduleRep& m) {
  return {2, Vec(a.dim() * a.dim() * m.dim(), Scalar(0))};
}

}  // namespace

TEST_CASE("coboundary matrix shapes and low-degree formulas") {
  const auto a = fx::a_ell();
  const auto trivial = trivial_bimodule(a, 1);
  const auto d2 = coboundary_matrix(a, trivial, 2);
  CHECK(d2.matrix.rows() == 8);
  CHECK(d2.matrix.cols() == 4);

  // d^0 stacks the negated right actions
  const auto adj = adjoint_bimodule(a);
  const auto d0 = coboundary_matrix(a, adj, 0);
  const Matrix dense0 = d0.matrix.to_dense();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t p = 0; p < adj.dim(); ++p)
      for (std::size_t q = 0; q < adj.dim(); ++q)
        CHECK(dense0.at(i * adj.dim() + p, q) == -adj.rho[i].at(p, q));

  // d^1 f (x, y) = x.f(y) + f(x).y - f(xy) at a random 1-cochain
  fx::Rng rng(61);
  const auto d1 = coboundary_matrix(a, adj, 1);
  const Vec f = rng.vector(cochain_space_dim(a, adj, 1));
  const Vec df = d1.matrix.apply(f);
  auto value_of = [&](const Vec& cochain, std::size_t slot) {
    return Vec(cochain.begin() + static_cast<long>(slot * adj.dim()),
               cochain.begin() + static_cast<long>((slot + 1) * adj.dim()));
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec f_of_product(adj.dim(), Scalar(0));
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != 0) add_scaled(f_of_product, a.c(i, j, k), value_of(f, k));
      const Vec expected =
          adj.lambda[i].apply(value_of(f, j)) + adj.rho[j].apply(value_of(f, i)) - f_of_product;
      CHECK(value_of(df, i * a.dim() + j) == expected);
    }
}

TEST_CASE("the coboundaries square to zero on every fixture and kind") {
  for (const auto& a : fx::fixture_set()) {
    if (!check_identities(a).left_leibniz || a.dim() == 0 || a.dim() > 3) continue;
    for (const auto& [kind, rep] : bimodule_kinds(a)) {
      INFO(a.name(), " ", kind);
      CHECK(verify_complex(a, rep, 3));
    }
  }
}

TEST_CASE("a corrupted right action breaks the complex") {
  auto rep = adjoint_bimodule(fx::a_ell());
  rep.rho[0].at(0, 1) = 5;
  bool broken = false;
  try {
    broken = !verify_complex(fx::a_ell(), rep, 3);
  } catch (const NotBimodule&) {
    broken = true;  // rejected before assembly, which is just as good
  }
  CHECK(broken);
}

TEST_CASE("degree zero cohomology is the right-invariant space") {
  const auto a = fx::a_ell();
  CHECK(cohomology_dim(a, trivial_bimodule(a, 1), 0).h_dim == 1);

  // adjoint: HL^0 = {m : m.x = 0} = joint kernel of the rho family = C_l
  const auto adj = adjoint_bimodule(a);
  const auto dims = cohomology_dim(a, adj, 0);
  const Subspace invariants = joint_kernel(adj.rho, adj.dim());
  CHECK(dims.h_dim == 1);
  CHECK(dims.h_dim == invariants.dim());
  CHECK(invariants == centers(a).left);

  for (const auto& fixture : fx::fixture_set()) {
    if (!check_identities(fixture).left_leibniz || fixture.dim() == 0) continue;
    for (const auto& [kind, rep] : bimodule_kinds(fixture)) {
      INFO(fixture.name(), " ", kind);
      CHECK(cohomology_dim(fixture, rep, 0).h_dim == joint_kernel(rep.rho, rep.dim()).dim());
      // anti-symmetric bimodules have all of M invariant
      if (classify_symmetry(rep).anti_symmetric)
        CHECK(cohomology_dim(fixture, rep, 0).h_dim == rep.dim());
    }
  }
}

TEST_CASE("first cohomology with trivial coefficients is L / L^2") {
  CHECK(cohomology_dim(fx::a_ell(), trivial_bimodule(fx::a_ell(), 1), 1).h_dim == 1);
  for (const auto& a : fx::fixture_set()) {
    if (!check_identities(a).left_leibniz || a.dim() == 0) continue;
    const auto dims = cohomology_dim(a, trivial_bimodule(a, 1), 1);
    CHECK(dims.h_dim == a.dim() - square(a).dim());
  }
}

TEST_CASE("the anti-symmetric adjoint bimodule always carries the identity class") {
  for (const auto& a : fx::fixture_set()) {
    if (!check_identities(a).left_leibniz || a.dim() == 0) continue;
    const auto rep = make_bimodule(adjoint_module(a), BimoduleKind::anti);
    const auto spaces = degree_one_spaces(a, rep);
    // inner derivations vanish for anti-symmetric coefficients
    CHECK(spaces.inner.is_zero());
    // the identity map is a derivation
    CHECK(spaces.derivations.contains(Matrix::identity(a.dim()).flatten()));
    CHECK(cohomology_dim(a, rep, 1).h_dim >= 1);
  }
}

TEST_CASE("symmetric coefficients reduce to Chevalley-Eilenberg cohomology") {
  for (const auto& a : fx::fixture_set()) {
    if (!check_identities(a).left_leibniz || a.dim() == 0 || a.dim() > 4) continue;
    const auto rep = make_bimodule(adjoint_module(a), BimoduleKind::sym);

    // derivations into symmetric bimodules kill the Leibniz kernel
    const auto spaces = degree_one_spaces(a, rep);
    const Subspace leib = leibniz_kernel(a);
    for (std::size_t r = 0; r < spaces.derivations.dim(); ++r) {
      const Vec& values = spaces.derivations.basis_vector(r);
      Matrix f(rep.dim(), a.dim());
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t p = 0; p < rep.dim(); ++p) f.at(p, j) = values[j * rep.dim() + p];
      for (std::size_t i = 0; i < leib.dim(); ++i)
        CHECK(is_zero(f.apply(leib.basis_vector(i))));
    }

    // HL^1(L, M) matches H^1_CE(L_Lie, M) computed on the alternating complex
    const auto lie = canonical_lie(a);
    std::vector<Matrix> induced;
    for (std::size_t j = 0; j < lie.algebra.dim(); ++j) {
      Matrix op(rep.dim(), rep.dim());
      const Vec lift = lie.section.col(j);
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (lift[i] != 0) op = op + lift[i] * rep.lambda[i];
      induced.push_back(std::move(op));
    }
    CHECK(cohomology_dim(a, rep, 1).h_dim == fx::chevalley_eilenberg_h1(lie.algebra, induced));
  }
}

TEST_CASE("first Whitehead lemma at desk scale") {
  const auto sl2 = fx::sl2();
  CHECK(cohomology_dim(sl2, make_bimodule(adjoint_module(sl2), BimoduleKind::sym), 1).h_dim == 0);
  CHECK(cohomology_dim(sl2, make_bimodule(fx::sl2_module(2), BimoduleKind::sym), 1).h_dim == 0);
  // ... but it fails for anti-symmetric coefficients
  CHECK(cohomology_dim(sl2, make_bimodule(adjoint_module(sl2), BimoduleKind::anti), 1).h_dim >= 1);
}

TEST_CASE("extensions from cocycles") {
  // the zero cocycle over the anti-symmetric module rebuilds the hemi product
  const auto sl2 = fx::sl2();
  const auto module = fx::sl2_module(1);
  const auto rep = make_bimodule(module, BimoduleKind::anti);
  const auto rebuilt = extension_from_cocycle(sl2, rep, zero_cochain(sl2, rep), "rebuilt");
  const auto hemi = fx::s_ell();
  REQUIRE(rebuilt.dim() == hemi.dim());
  for (std::size_t i = 0; i < hemi.dim(); ++i)
    for (std::size_t j = 0; j < hemi.dim(); ++j)
      CHECK(rebuilt.basis_product(i, j) == hemi.basis_product(i, j));

  // direct product with the trivial module stays left Leibniz
  const auto a = fx::a_ell();
  const auto trivial = trivial_bimodule(a, 1);
  const auto product = extension_from_cocycle(a, trivial, zero_cochain(a, trivial), "prod");
  CHECK(check_identities(product).left_leibniz);
  CHECK(product.dim() == 3);

  // the canonical surjection is a homomorphism and the kernel is abelian
  Matrix projection(a.dim(), product.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) projection.at(i, i) = 1;
  CHECK(is_homomorphism(product, a, projection));
  const Subspace kernel = Subspace::span(3, {unit_vec(3, 2)});
  CHECK(subspace_product(product, kernel, kernel).is_zero());
  CHECK(is_ideal(product, kernel).two_sided);
}

TEST_CASE("random cocycles produce left Leibniz extensions") {
  fx::Rng rng(71);
  const std::vector<StructureAlgebra> bases = {fx::a_ell(), fx::n_alg(), fx::r2(),
                                               fx::heisenberg()};
  int built = 0;
  for (const auto& base : bases) {
    for (const auto& [kind, rep] : bimodule_kinds(base)) {
      if (rep.dim() > 3) continue;
      const auto d2 = coboundary_matrix(base, rep, 2);
      const Matrix cocycles = d2.matrix.to_dense().kernel();
      if (cocycles.rows() == 0) continue;
      Vec values(cocycles.cols(), Scalar(0));
      for (std::size_t r = 0; r < cocycles.rows(); ++r)
        add_scaled(values, rng.rational(), cocycles.row(r));
      const auto extension = extension_from_cocycle(base, rep, {2, values}, "ext");
      CHECK(check_identities(extension).left_leibniz);
      ++built;
    }
  }
  CHECK(built >= 10);
}

TEST_CASE("non-cocycles are rejected with a violating triple") {
  const auto a = fx::a_ell();
  const auto adj = adjoint_bimodule(a);
  const auto d2 = coboundary_matrix(a, adj, 2);
  const Matrix cocycles = d2.matrix.to_dense().kernel();
  const Subspace cocycle_space = Subspace::span(cocycles);
  // search a standard basis cochain outside ker d^2
  for (std::size_t e = 0; e < cochain_space_dim(a, adj, 2); ++e) {
    if (cocycle_space.contains(unit_vec(cochain_space_dim(a, adj, 2), e))) continue;
    Cochain bad{2, unit_vec(cochain_space_dim(a, adj, 2), e)};
    CHECK_THROWS_AS(extension_from_cocycle(a, adj, bad, "bad"), NotACocycle);
    break;
  }
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  fx::Rng rng(73);
  const auto a = fx::a_ell();
  for (const auto& [kind, rep] : bimodule_kinds(a)) {
    const auto d2 = coboundary_matrix(a, rep, 2);
    const Matrix cocycles = d2.matrix.to_dense().kernel();
    Vec f_values(cocycles.cols(), Scalar(0));
    for (std::size_t r = 0; r < cocycles.rows(); ++r)
      add_scaled(f_values, rng.rational(), cocycles.row(r));

    const Matrix g = rng.matrix(rep.dim(), a.dim());
    Vec g_values(cochain_space_dim(a, rep, 1), Scalar(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t p = 0; p < rep.dim(); ++p) g_values[j * rep.dim() + p] = g.at(p, j);
    const auto d1 = coboundary_matrix(a, rep, 1);
    const Vec shifted_values = f_values + d1.matrix.apply(g_values);

    const auto ext_f = extension_from_cocycle(a, rep, {2, f_values}, "ext_f");
    const auto ext_shifted = extension_from_cocycle(a, rep, {2, shifted_values}, "ext_g");
    const Matrix phi = extension_equivalence_map(a, rep, g);
    CHECK(is_homomorphism(ext_shifted, ext_f, phi));
    CHECK(phi.inverse().has_value());
    // phi fixes the kernel pointwise and covers the identity on the quotient
    for (std::size_t b = 0; b < rep.dim(); ++b)
      CHECK(phi.col(a.dim() + b) == unit_vec(a.dim() + rep.dim(), a.dim() + b));
  }
}

TEST_CASE("budget guards") {
  const auto a = fx::s_ell();
  const auto adj = adjoint_bimodule(a);
  CHECK_THROWS_AS(coboundary_matrix(a, adj, 4), BudgetExceeded);
  CohomologyBudget tight;
  tight.max_space_dim = 10;
  CHECK_THROWS_AS(coboundary_matrix(a, adj, 2, tight), BudgetExceeded);
  CHECK_THROWS_AS(coboundary_matrix(opposite(a), adjoint_bimodule(opposite(a)), 1),
                  NotLeftLeibniz);
}
