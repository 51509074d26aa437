#pragma once

#include <optional>

#include "leibkit/forms.hpp"
#include "leibkit/series.hpp"

namespace leibkit {

enum class Tribool { no, yes, unknown };

Tribool tribool_and(Tribool a, Tribool b);
const char* to_string(Tribool t);

/// Derived series reaches zero.
bool is_solvable(const StructureAlgebra& a);

/// Mixed descending central series L_n reaches zero.
bool is_nilpotent(const StructureAlgebra& a);

/// Engel route: L_x nilpotent for x ranging over the basis vectors and
/// their pairwise sums. Requires the left Leibniz flag; agrees with
/// is_nilpotent on left Leibniz algebras by Engel's theorem.
bool is_nilpotent_engel(const StructureAlgebra& a);

/// Cartan's criterion: kappa(x, y) = 0 for all x and all y in L^2.
/// Requires the left Leibniz flag (characteristic zero is built in).
bool cartan_solvable(const StructureAlgebra& a);

/// Quotient by the Leibniz kernel; the result passes the lie flag.
QuotientResult canonical_lie(const StructureAlgebra& a);

/// Largest solvable ideal, computed as the preimage of the radical of the
/// canonical Lie algebra; the Lie-side radical is the Killing-orthogonal
/// complement of the derived subalgebra (characteristic zero). Requires a
/// left or right Leibniz algebra. The result is checked to be a solvable
/// two-sided ideal before being returned.
Subspace radical(const StructureAlgebra& a);

struct StructuralPredicates {
  bool perfect = false;
  bool semisimple = false;
  Tribool lie_simple = Tribool::no;
  Tribool simple = Tribool::no;
  /// A proper nonzero ideal refuting simplicity, when one was found.
  std::optional<Subspace> witness_ideal;
};

StructuralPredicates structural_predicates(const StructureAlgebra& a);

struct PowerWitness {
  Vec element;             ///< x with (x^2)x != x(x^2)
  Vec square_then_right;   ///< (x^2)x
  Vec square_then_left;    ///< x(x^2)
};

/// Searches basis vectors and pairwise sums for a power-associativity
/// failure (x^2)x != x(x^2).
std::optional<PowerWitness> power_witness(const StructureAlgebra& a);

/// (x^2)x = x(x^2) = 0 for all candidates (basis vectors, pairwise sums).
bool third_power_zero(const StructureAlgebra& a);

/// A joint eigenvector of all lambda_x and rho_x for a solvable algebra,
/// when one exists over the rationals (this only searches the
/// rational-eigenvalue fragment; nullopt is a field limitation, not a
/// refutation). The result is verified by substitution.
std::optional<Vec> common_eigenvector(const StructureAlgebra& a, const std::vector<Matrix>& lambda,
                                      const std::vector<Matrix>& rho);

/// Full flag of ideals 0 = F_0 < F_1 < ... < F_n = L with dim F_j = j and
/// L F_j + F_j L contained in F_{j-1}, built by repeatedly extracting the
/// joint kernel of the quotient. Requires a nilpotent algebra.
std::vector<Subspace> central_flag(const StructureAlgebra& a);

}  // namespace leibkit
