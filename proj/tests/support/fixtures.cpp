#include "support/fixtures.hpp"

#include <set>

#include "leibkit/errors.hpp"

#include "leibkit/invariants.hpp"

namespace leibkit::testing {

StructureAlgebra a_ell() {
  StructureAlgebra a("a_ell", {"e", "f"});
  a.set_product(0, 1, {Scalar(0), Scalar(1)});
  return a;
}

StructureAlgebra n_alg() {
  StructureAlgebra a("n", {"e", "f"});
  a.set_product(1, 1, {Scalar(1), Scalar(0)});
  return a;
}

StructureAlgebra sl2() {
  StructureAlgebra a("sl2", {"x", "h", "y"});
  auto combo = [](long cx, long ch, long cy) { return Vec{Scalar(cx), Scalar(ch), Scalar(cy)}; };
  a.set_product(1, 0, combo(2, 0, 0));   // hx = 2x
  a.set_product(0, 1, combo(-2, 0, 0));  // xh = -2x
  a.set_product(1, 2, combo(0, 0, -2));  // hy = -2y
  a.set_product(2, 1, combo(0, 0, 2));   // yh = 2y
  a.set_product(0, 2, combo(0, 1, 0));   // xy = h
  a.set_product(2, 0, combo(0, -1, 0));  // yx = -h
  return a;
}

LeftModule sl2_module(std::size_t k) {
  const std::size_t dim = k + 1;
  Matrix x_op(dim, dim), h_op(dim, dim), y_op(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    h_op.at(j, j) = Scalar(static_cast<long>(k) - 2 * static_cast<long>(j));
    if (j + 1 < dim) y_op.at(j + 1, j) = 1;
    if (j > 0) x_op.at(j - 1, j) = Scalar(static_cast<long>(j) * (static_cast<long>(k - j) + 1));
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < dim; ++j) labels.push_back("v" + std::to_string(j));
  return left_module(sl2(), {x_op, h_op, y_op}, labels);
}

LeftModule module_direct_sum(const LeftModule& a, const LeftModule& b) {
  if (!(a.algebra == b.algebra)) throw Error("module_direct_sum over different algebras");
  const std::size_t dim = a.dim() + b.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra.dim(); ++i) {
    Matrix op(dim, dim);
    for (std::size_t p = 0; p < a.dim(); ++p)
      for (std::size_t q = 0; q < a.dim(); ++q) op.at(p, q) = a.action[i].at(p, q);
    for (std::size_t p = 0; p < b.dim(); ++p)
      for (std::size_t q = 0; q < b.dim(); ++q) op.at(a.dim() + p, a.dim() + q) = b.action[i].at(p, q);
    action.push_back(std::move(op));
  }
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back("p_" + l);
  for (const auto& l : b.labels) labels.push_back("q_" + l);
  return left_module(a.algebra, std::move(action), std::move(labels));
}

LeftModule r2_module() {
  Matrix h_op(2, 2), x_op(2, 2);
  h_op.at(1, 1) = 1;
  x_op.at(1, 0) = 1;
  return left_module(r2(), {h_op, x_op}, {"m0", "m1"});
}

StructureAlgebra s_ell() { return hemi_semidirect_product(sl2(), sl2_module(1), "s_ell"); }

StructureAlgebra heisenberg() {
  StructureAlgebra a("heis3", {"x", "y", "z"});
  a.set_product(0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  a.set_product(1, 0, {Scalar(0), Scalar(0), Scalar(-1)});
  return a;
}

StructureAlgebra r2() {
  StructureAlgebra a("r2", {"h", "x"});
  a.set_product(0, 1, {Scalar(0), Scalar(1)});
  a.set_product(1, 0, {Scalar(0), Scalar(-1)});
  return a;
}

StructureAlgebra r3() {
  StructureAlgebra a("r3", {"h", "x", "y"});
  a.set_product(0, 1, {Scalar(0), Scalar(1), Scalar(0)});
  a.set_product(1, 0, {Scalar(0), Scalar(-1), Scalar(0)});
  a.set_product(0, 2, {Scalar(0), Scalar(0), Scalar(2)});
  a.set_product(2, 0, {Scalar(0), Scalar(0), Scalar(-2)});
  return a;
}

StructureAlgebra filiform4() {
  StructureAlgebra a("fil4", {"e1", "e2", "e3", "e4"});
  auto unit = [](std::size_t i) {
    Vec v(4, Scalar(0));
    v[i] = 1;
    return v;
  };
  a.set_product(0, 1, unit(2));
  a.set_product(1, 0, Scalar(-1) * unit(2));
  a.set_product(0, 2, unit(3));
  a.set_product(2, 0, Scalar(-1) * unit(3));
  return a;
}

StructureAlgebra abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i));
  return StructureAlgebra("abelian" + std::to_string(dim), labels);
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b,
                            const std::string& name) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a_" + l);
  for (const auto& l : b.labels()) labels.push_back("b_" + l);
  StructureAlgebra out(name, labels);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec product(out.dim(), Scalar(0));
      const Vec base = a.basis_product(i, j);
      std::copy(base.begin(), base.end(), product.begin());
      out.set_product(i, j, product);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec product(out.dim(), Scalar(0));
      const Vec base = b.basis_product(i, j);
      std::copy(base.begin(), base.end(), product.begin() + static_cast<long>(a.dim()));
      out.set_product(a.dim() + i, a.dim() + j, product);
    }
  return out;
}

namespace {

StructureAlgebra renamed(const StructureAlgebra& a, const std::string& name) {
  StructureAlgebra out(name, a.labels());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.basis_product(i, j));
  return out;
}

StructureAlgebra cocycle_extension_fixture() {
  // Extension of a_ell by the one-dimensional trivial bimodule along a
  // nonzero 2-cocycle picked deterministically from ker d^2.
  const StructureAlgebra base = a_ell();
  const BimoduleRep module = trivial_bimodule(base, 1);
  const CochainComplexSlice d2 = coboundary_matrix(base, module, 2);
  const Matrix kernel = d2.matrix.to_dense().kernel();
  Vec values(kernel.cols(), Scalar(0));
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    add_scaled(values, Scalar(static_cast<long>(r) + 1), kernel.row(r));
  return extension_from_cocycle(base, module, {2, values}, "a_ell_ext");
}

}  // namespace

std::vector<StructureAlgebra> fixture_set() {
  std::vector<StructureAlgebra> fixtures;
  fixtures.push_back(a_ell());
  fixtures.push_back(opposite(a_ell()));
  fixtures.push_back(n_alg());
  fixtures.push_back(opposite(n_alg()));
  fixtures.push_back(s_ell());
  fixtures.push_back(opposite(s_ell()));
  fixtures.push_back(sl2());
  fixtures.push_back(heisenberg());
  fixtures.push_back(r2());
  fixtures.push_back(r3());
  fixtures.push_back(filiform4());
  fixtures.push_back(abelian(1));
  fixtures.push_back(abelian(3));
  fixtures.push_back(quotient(a_ell(), leibniz_kernel(a_ell())).algebra);
  fixtures.push_back(quotient(s_ell(), leibniz_kernel(s_ell())).algebra);
  fixtures.push_back(direct_sum(a_ell(), n_alg(), "a_ell_plus_n"));
  fixtures.push_back(direct_sum(a_ell(), abelian(1), "a_ell_plus_triv"));
  fixtures.push_back(direct_sum(n_alg(), abelian(1), "n_plus_triv"));
  fixtures.push_back(cocycle_extension_fixture());

  Rng rng(20240817);
  fixtures.push_back(renamed(transform_algebra(a_ell(), rng.invertible(2)), "a_ell_moved"));
  fixtures.push_back(renamed(transform_algebra(n_alg(), rng.invertible(2)), "n_moved"));
  fixtures.push_back(hemi_semidirect_product(r2(), r2_module(), "r2_hemi"));
  fixtures.push_back(
      renamed(transform_algebra(hemi_semidirect_product(r2(), r2_module(), "tmp"),
                                rng.unimodular(4)),
              "r2_hemi_moved"));
  fixtures.push_back(renamed(transform_algebra(s_ell(), rng.unimodular(5)), "s_ell_moved"));
  fixtures.push_back(renamed(transform_algebra(s_ell(), rng.unimodular(5)), "s_ell_moved2"));

  std::set<std::string> names;
  for (auto& fixture : fixtures)
    if (!names.insert(fixture.name()).second)
      throw Error("fixture names must be unique: " + fixture.name());
  return fixtures;
}

long Rng::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine);
}

Scalar Rng::rational(long max_num, long max_den) {
  return leibkit::rational(integer(-max_num, max_num), integer(1, max_den));
}

Vec Rng::vector(std::size_t n) {
  Vec out(n);
  for (auto& x : out) x = rational();
  return out;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rational();
  return out;
}

Matrix Rng::invertible(std::size_t n) {
  while (true) {
    Matrix candidate = matrix(n, n);
    if (candidate.inverse()) return candidate;
  }
}

Matrix Rng::unimodular(std::size_t n) {
  Matrix out = Matrix::identity(n);
  if (n < 2) return out;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    if (i == j) j = (j + 1) % n;
    const Scalar coeff = integer(0, 1) == 0 ? Scalar(1) : Scalar(-1);
    for (std::size_t col = 0; col < n; ++col) out.at(i, col) += coeff * out.at(j, col);
  }
  return out;
}

Subspace brute_force_radical(const StructureAlgebra& a, const std::vector<Vec>& extra_seeds) {
  const std::size_t n = a.dim();
  std::vector<Scalar> heights = {Scalar(0), Scalar(1),  Scalar(-1),      Scalar(2),
                                 Scalar(-2), rational(1, 2), rational(-1, 2)};
  std::vector<Vec> seeds = extra_seeds;
  Vec current(n, Scalar(0));
  std::vector<std::size_t> odometer(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) current[i] = heights[odometer[i]];
    if (!is_zero(current)) seeds.push_back(current);
    std::size_t pos = 0;
    while (pos < n && ++odometer[pos] == heights.size()) odometer[pos++] = 0;
    if (pos == n) break;
  }

  Subspace sum(n);
  for (const auto& seed : seeds) {
    if (is_zero(seed)) continue;
    const Subspace closure = ideal_closure(a, seed);
    if (sum.contains(closure)) continue;
    if (is_solvable(subalgebra(a, closure, "cand"))) sum = sum + closure;
  }
  return sum;
}

std::size_t chevalley_eilenberg_h1(const StructureAlgebra& lie, const std::vector<Matrix>& action) {
  const std::size_t r = lie.dim();
  const std::size_t m = action.empty() ? 0 : action[0].rows();
  if (r == 0) return 0;

  // d0: W -> Hom(g, W), (d0 w)(x) = x.w
  Matrix d0(r * m, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) d0.at(i * m + p, q) = action[i].at(p, q);

  // d1: Hom(g, W) -> Hom(Lambda^2 g, W),
  // (d1 f)(x_i ^ x_j) = x_i.f(x_j) - x_j.f(x_i) - f([x_i, x_j])
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  Matrix d1(pairs.size() * m, r * m);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const auto [i, j] = pairs[e];
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        d1.at(e * m + p, j * m + q) += action[i].at(p, q);
        d1.at(e * m + p, i * m + q) -= action[j].at(p, q);
      }
      for (std::size_t k = 0; k < r; ++k)
        if (lie.c(i, j, k) != 0) d1.at(e * m + p, k * m + p) -= lie.c(i, j, k);
    }
  }
  const std::size_t z = d1.cols() - d1.rank();
  const std::size_t b = d0.rank();
  return z - b;
}

}  // namespace leibkit::testing
