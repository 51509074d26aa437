#pragma once

#include "leibkit/bimodule.hpp"
#include "leibkit/sparse.hpp"

namespace leibkit {

/// Growth guard for cochain spaces; the spaces grow as dim(M) * dim(L)^n.
struct CohomologyBudget {
  std::size_t max_degree = 3;
  std::size_t max_space_dim = 200000;   ///< largest allowed cochain space
  std::size_t max_dense_entries = 4000000;  ///< largest matrix converted for rank
};

/// An n-cochain: a multilinear map L^n -> M stored on basis tuples.
/// Coordinates: values[t * dim M + a] is the coefficient of module basis
/// vector a at the lexicographic tuple t (first slot most significant).
struct Cochain {
  std::size_t degree = 0;
  Vec values;
};

/// The matrix of d^n from n-cochains to (n+1)-cochains.
struct CochainComplexSlice {
  std::size_t degree = 0;
  SparseMatrix matrix{0, 0};
  std::optional<std::size_t> rank;  ///< filled on demand by slice_rank
};

std::size_t cochain_space_dim(const StructureAlgebra& l, const BimoduleRep& m, std::size_t degree);

/// Exact matrix of the coboundary in the given degree. Requires a left
/// Leibniz algebra and a valid bimodule; throws BudgetExceeded when the
/// cochain spaces outgrow the budget.
CochainComplexSlice coboundary_matrix(const StructureAlgebra& l, const BimoduleRep& m,
                                      std::size_t degree, const CohomologyBudget& budget = {});

std::size_t slice_rank(CochainComplexSlice& slice, const CohomologyBudget& budget = {});

struct CohomologyDims {
  std::size_t z_dim = 0;  ///< dim ker d^n
  std::size_t b_dim = 0;  ///< dim im d^(n-1)
  std::size_t h_dim = 0;  ///< z - b
};

/// Dimensions of ZL^n, BL^n, HL^n; verifies im(d^(n-1)) inside ker(d^n).
CohomologyDims cohomology_dim(const StructureAlgebra& l, const BimoduleRep& m, std::size_t degree,
                              const CohomologyBudget& budget = {});

/// d^(n+1) o d^n = 0 exactly for all 0 <= n < max_degree.
bool verify_complex(const StructureAlgebra& l, const BimoduleRep& m, std::size_t max_degree,
                    const CohomologyBudget& budget = {});

struct DegreeOneSpaces {
  Subspace derivations;  ///< ker d^1 = der(L, M), in Hom(L, M) coordinates
  Subspace inner;        ///< im d^0 = ider(L, M)
};

DegreeOneSpaces degree_one_spaces(const StructureAlgebra& l, const BimoduleRep& m,
                                  const CohomologyBudget& budget = {});

/// The algebra L x M with product twisted by a 2-cocycle f:
/// (x1,m1)(x2,m2) = (x1 x2, m1.x2 + x1.m2 + f(x1, x2)).
/// Throws NotACocycle (with the violating triple) when d^2 f != 0.
StructureAlgebra extension_from_cocycle(const StructureAlgebra& l, const BimoduleRep& m,
                                        const Cochain& f, const std::string& name,
                                        const CohomologyBudget& budget = {});

/// The map (x, v) -> (x, v + g(x)) as a matrix; an equivalence from the
/// extension by f + d^1 g onto the extension by f.
Matrix extension_equivalence_map(const StructureAlgebra& l, const BimoduleRep& m, const Matrix& g);

}  // namespace leibkit
