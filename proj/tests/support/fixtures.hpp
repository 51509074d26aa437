#pragma once

#include <random>
#include <string>
#include <vector>

#include "leibkit/bimodule.hpp"
#include "leibkit/cohomology.hpp"
#include "leibkit/structure.hpp"

namespace leibkit::testing {

// --- model algebras -------------------------------------------------------

StructureAlgebra a_ell();        // ee=fe=ff=0, ef=f
StructureAlgebra n_alg();        // ee=ef=fe=0, ff=e
StructureAlgebra sl2();          // x, h, y with [h,x]=2x, [h,y]=-2y, [x,y]=h
StructureAlgebra s_ell();        // hemi-semidirect product of sl2 and L(1)
StructureAlgebra heisenberg();   // xy=z, yx=-z
StructureAlgebra r2();           // hx=x, xh=-x
StructureAlgebra r3();           // hx=x, hy=2y and opposites
StructureAlgebra filiform4();    // e1e2=e3, e1e3=e4 (Lie)
StructureAlgebra abelian(std::size_t dim);

/// Irreducible sl2-module of highest weight k (dimension k + 1).
LeftModule sl2_module(std::size_t k);

/// Direct sum of two left modules over the same algebra.
LeftModule module_direct_sum(const LeftModule& a, const LeftModule& b);

/// The natural two-dimensional module of r2 (h fixes a line, x moves it).
LeftModule r2_module();

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b,
                            const std::string& name);

/// The shared fixture pool: the three model algebras, their opposites,
/// quotients, Lie examples, direct sums, basis-changed copies and a
/// cocycle extension. All of dimension at most five.
std::vector<StructureAlgebra> fixture_set();

// --- randomness (fixed seeds, deterministic suites) ------------------------

struct Rng {
  std::mt19937 engine;
  explicit Rng(unsigned seed) : engine(seed) {}

  long integer(long lo, long hi);
  Scalar rational(long max_num = 3, long max_den = 2);
  Vec vector(std::size_t n);
  Matrix matrix(std::size_t rows, std::size_t cols);
  Matrix invertible(std::size_t n);
  /// Random product of elementary row operations: determinant +-1 and
  /// small integer entries, so conjugated tensors stay small.
  Matrix unimodular(std::size_t n);
};

// --- independent oracles ---------------------------------------------------

/// Largest solvable ideal found by saturating ideal closures of a
/// bounded-height rational grid (plus the given extra seed vectors).
Subspace brute_force_radical(const StructureAlgebra& a, const std::vector<Vec>& extra_seeds = {});

/// dim H^1 of the Chevalley-Eilenberg complex of a Lie algebra acting
/// through the given operator family (alternating cochains).
std::size_t chevalley_eilenberg_h1(const StructureAlgebra& lie, const std::vector<Matrix>& action);

}  // namespace leibkit::testing
