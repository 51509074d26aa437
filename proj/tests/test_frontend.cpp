#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibkit/document.hpp"
#include "leibkit/errors.hpp"
#include "leibkit/invariants.hpp"
#include "leibkit/report.hpp"
#include "support/fixtures.hpp"

using namespace leibkit;
namespace fx = leibkit::testing;

TEST_CASE("parsing the model algebras") {
  const auto a = parse_algebra("algebra a_ell\nbasis e f\ne*f = f\n");
  CHECK(a.dim() == 2);
  CHECK(a.basis_product(0, 1) == Vec{Scalar(0), Scalar(1)});
  CHECK(a.basis_product(1, 0) == Vec{Scalar(0), Scalar(0)});
  CHECK(check_identities(a).left_leibniz);

  const auto n = parse_algebra("algebra n\nbasis e f\nf*f = e\n");
  CHECK(check_identities(n).symmetric);

  const auto with_combo = parse_algebra(
      "# comment line\n"
      "algebra demo\n"
      "basis u v w\n"
      "u*v = 1/2 u + -3 v  # trailing comment\n"
      "v*v = w - 2/3 u\n");
  CHECK(with_combo.basis_product(0, 1) == Vec{rational(1, 2), Scalar(-3), Scalar(0)});
  CHECK(with_combo.basis_product(1, 1) == Vec{rational(-2, 3), Scalar(0), Scalar(1)});
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra("algebra bad\nbasis e f\ne*f = 1/0 f\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 7);
  }
  CHECK_THROWS_AS(parse_algebra(""), SemanticError);                 // missing header
  CHECK_THROWS_AS(parse_algebra("algebra a\nbasis e e\n"), SemanticError);  // duplicate label
  CHECK_THROWS_AS(parse_algebra("algebra a\nbasis e\ne*g = e\n"), SemanticError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nbasis e\ne*e = e\ne*e = 0\n"), SemanticError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nbasis e\ne+e = e\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nbasis e\ne*e = 2\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity on all fixtures") {
  for (const auto& a : fx::fixture_set()) {
    const auto round = parse_algebra(serialize(a));
    CHECK(round == a);
  }
}

TEST_CASE("serialize then parse is the identity on randomized tables") {
  fx::Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(rng.integer(0, 3));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    StructureAlgebra a("random" + std::to_string(trial), labels);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a.set_product(i, j, rng.vector(dim));
    CHECK(parse_algebra(serialize(a)) == a);
  }
}

TEST_CASE("module files") {
  const auto a = parse_algebra("algebra a_ell\nbasis e f\ne*f = f\n");
  const auto rep = parse_module(
      "module adj\n"
      "basis u w\n"
      "e . w = w\n"
      "u . f = 0\n"
      "w . e = 0\n",
      a);
  CHECK(rep.dim() == 2);
  CHECK(rep.lambda[0].at(1, 1) == 1);
  CHECK(rep.rho[0].is_zero());
  CHECK(check_bimodule(rep).all());

  // labels may not collide with the algebra and rules must resolve
  CHECK_THROWS_AS(parse_module("module m\nbasis e\n", a), SemanticError);
  CHECK_THROWS_AS(parse_module("module m\nbasis u\nu . u = u\n", a), SemanticError);
  CHECK_THROWS_AS(parse_module("module m\nbasis u\ne . u = u\ne . u = 0\n", a), SemanticError);
}

TEST_CASE("cochain files") {
  const auto a = parse_algebra("algebra a_ell\nbasis e f\ne*f = f\n");
  const auto rep = trivial_bimodule(a, 1);
  const auto cochain = parse_cochain(
      "cochain c\n"
      "e*e = 1/3 t0\n"
      "f*e = -t0\n",
      a, rep.labels, rep.dim());
  CHECK(cochain.degree == 2);
  CHECK(cochain.values[0] == rational(1, 3));  // (e,e) slot
  CHECK(cochain.values[2] == Scalar(-1));      // (f,e) slot
  CHECK(cochain.values[1] == 0);
}

TEST_CASE("two-dimensional fingerprints and classification") {
  CHECK(classify_dim2(fx::a_ell()) == Dim2Class::a_ell);
  CHECK(classify_dim2(opposite(fx::a_ell())) == Dim2Class::a_ell_op);
  CHECK(classify_dim2(fx::n_alg()) == Dim2Class::n_class);
  CHECK(classify_dim2(fx::r2()) == Dim2Class::lie);
  CHECK(classify_dim2(fx::abelian(2)) == Dim2Class::lie);

  const auto print = fingerprint2d(fx::n_alg());
  CHECK(print.leib_dim == 1);
  CHECK(print.nilpotent);
  CHECK(print.left_leibniz);
  CHECK(print.right_leibniz);
  CHECK_FALSE(print.is_lie);

  CHECK_THROWS_AS(classify_dim2(fx::sl2()), WrongDimension);
  StructureAlgebra idempotent("idem2", {"u", "v"});
  idempotent.set_product(0, 0, {Scalar(1), Scalar(0)});
  CHECK_THROWS_AS(classify_dim2(idempotent), NotLeibniz);
}

TEST_CASE("classification is invariant under change of basis") {
  fx::Rng rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix p = rng.invertible(2);
    CHECK(classify_dim2(transform_algebra(fx::a_ell(), p)) == Dim2Class::a_ell);
    CHECK(classify_dim2(transform_algebra(opposite(fx::a_ell()), p)) == Dim2Class::a_ell_op);
    CHECK(classify_dim2(transform_algebra(fx::n_alg(), p)) == Dim2Class::n_class);
  }
}

TEST_CASE("reports are deterministic and carry the version") {
  const auto a = fx::s_ell();
  ReportOptions options;
  options.with_cohomology = true;
  const auto report = build_report(a, options);
  CHECK(report.version == toolkit_version());
  CHECK(report.dim == 5);
  CHECK(report.identities.left_leibniz);
  CHECK(report.subspaces.at("leibniz_kernel").dim == 2);
  CHECK(report.subspaces.at("radical").dim == 2);
  CHECK(*report.semisimple);
  CHECK(*report.simple == std::string("yes"));
  CHECK(report.canonical_lie_dim == 3);
  CHECK_FALSE(report.cohomology.empty());

  const std::string text1 = report_text(report);
  const std::string text2 = report_text(build_report(a, options));
  CHECK(text1 == text2);
  const std::string json1 = report_json(report);
  const std::string json2 = report_json(build_report(a, options));
  CHECK(json1 == json2);
  CHECK(json1.find("\"leibkit_version\"") != std::string::npos);
  CHECK(json1.find("\"lie_dims\"") != std::string::npos);
}

TEST_CASE("report handles the non-Leibniz case gracefully") {
  StructureAlgebra idempotent("idem", {"u"});
  idempotent.set_product(0, 0, {Scalar(1)});
  const auto report = build_report(idempotent);
  CHECK_FALSE(report.is_leibniz);
  CHECK_FALSE(report.perfect.has_value());
  CHECK(report.subspaces.count("radical") == 0);
  CHECK_FALSE(report_json(report).empty());
}

TEST_CASE("zero-dimensional algebras are handled throughout") {
  const auto zero = parse_algebra("algebra zero\nbasis\n");
  CHECK(zero.dim() == 0);
  CHECK(parse_algebra(serialize(zero)) == zero);
  const auto flags = check_identities(zero);
  CHECK(flags.lie);
  CHECK(is_solvable(zero));
  CHECK(is_nilpotent(zero));
  CHECK(leibniz_kernel(zero).is_zero());
  CHECK(radical(zero).is_zero());
  const auto p = structural_predicates(zero);
  CHECK(p.perfect);
  CHECK(p.semisimple);
  CHECK(p.lie_simple == Tribool::no);
  CHECK(p.simple == Tribool::no);
  CHECK_FALSE(report_json(build_report(zero)).empty());
}

TEST_CASE("symmetric algebras report both associated Lie algebra dimensions") {
  const auto report = build_report(fx::n_alg());
  CHECK(report.canonical_lie_dim == 1);
  REQUIRE(report.lie_mult_dim.has_value());
  CHECK(*report.lie_mult_dim == 1);

  const auto left_only = build_report(fx::a_ell());
  CHECK_FALSE(left_only.lie_mult_dim.has_value());
}
