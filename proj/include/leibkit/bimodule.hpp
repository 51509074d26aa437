#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibkit/algebra.hpp"
#include "leibkit/irreducibility.hpp"

namespace leibkit {

/// A left module over a left Leibniz algebra: one action matrix per
/// algebra basis element. Modules are attached to a specific algebra
/// value; mixing modules of different algebras is rejected.
struct LeftModule {
  StructureAlgebra algebra;
  std::vector<std::string> labels;
  std::vector<Matrix> action;

  std::size_t dim() const { return labels.size(); }
};

LeftModule left_module(StructureAlgebra algebra, std::vector<Matrix> action,
                       std::vector<std::string> labels = {});

/// The pair (lambda, rho) of operator families of a Leibniz bimodule.
struct BimoduleRep {
  StructureAlgebra algebra;
  std::vector<std::string> labels;
  std::vector<Matrix> lambda;
  std::vector<Matrix> rho;

  std::size_t dim() const { return labels.size(); }
  Vec act_left(const Vec& x, const Vec& m) const;   ///< x . m
  Vec act_right(const Vec& m, const Vec& x) const;  ///< m . x
  std::vector<Matrix> all_operators() const;
};

BimoduleRep bimodule(StructureAlgebra algebra, std::vector<Matrix> lambda, std::vector<Matrix> rho,
                     std::vector<std::string> labels = {});

/// The left adjoint module (action by left multiplications).
LeftModule adjoint_module(const StructureAlgebra& a);
/// The adjoint bimodule with representation (L, R).
BimoduleRep adjoint_bimodule(const StructureAlgebra& a);
/// The trivial bimodule of the given dimension (all actions zero).
BimoduleRep trivial_bimodule(const StructureAlgebra& a, std::size_t dim);

struct LeftModuleCheck {
  bool ok = false;
  /// Basis pair violating (xy).m = x.(y.m) - y.(x.m), if any.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  explicit operator bool() const { return ok; }
};

LeftModuleCheck check_left_module(const LeftModule& m);

struct BimoduleAxioms {
  bool llm = false;
  bool lml = false;
  bool mll = false;
  bool all() const { return llm && lml && mll; }
};

/// Verifies the three bimodule axioms independently on basis pairs. When
/// all hold, the consequence rho_y o (lambda_x + rho_x) = 0 is asserted.
BimoduleAxioms check_bimodule(const BimoduleRep& m);

struct SymmetryFlags {
  bool symmetric = false;
  bool anti_symmetric = false;
  bool trivial = false;
};

SymmetryFlags classify_symmetry(const BimoduleRep& m);

struct Annihilators {
  Subspace left_kernel;     ///< Ker(lambda) in the algebra
  Subspace right_kernel;    ///< Ker(rho)
  Subspace bi_annihilator;  ///< intersection
};

Annihilators annihilators(const BimoduleRep& m);

/// M_0 = < x.m + m.x >, the anti-symmetric kernel.
Subspace anti_symmetric_kernel(const BimoduleRep& m);

/// Quotient bimodule by the anti-symmetric kernel; always symmetric.
BimoduleRep symmetrization(const BimoduleRep& m);

/// Restriction of the rep to an invariant subspace, in its coordinates.
BimoduleRep restrict_bimodule(const BimoduleRep& m, const Subspace& invariant);
/// Induced rep on the quotient by an invariant subspace.
BimoduleRep quotient_bimodule(const BimoduleRep& m, const Subspace& invariant);

IrreducibilityVerdict is_irreducible(const BimoduleRep& m);
IrreducibilityVerdict is_irreducible(const LeftModule& m);

enum class BimoduleKind { anti, sym };

/// (lambda, 0) or (lambda, -lambda) from a left module.
BimoduleRep make_bimodule(const LeftModule& m, BimoduleKind kind);

/// Algebra basis labels followed by module labels, disambiguated when a
/// module label repeats an algebra label (as the adjoint module does).
std::vector<std::string> extension_labels(const StructureAlgebra& a,
                                          const std::vector<std::string>& module_labels);

/// The left Leibniz algebra on s x M with product ((X,a),(Y,b)) ->
/// ([X,Y], X.b). Requires s to pass the lie flag and M to be a valid
/// left s-module.
StructureAlgebra hemi_semidirect_product(const StructureAlgebra& lie_algebra, const LeftModule& m,
                                         const std::string& name);

/// {m | lambda_x m = rho_x m = 0 for all x}; nonzero whenever every
/// lambda_x is nilpotent and the algebra is left Leibniz (Engel).
Subspace engel_joint_kernel(const BimoduleRep& m);

struct CompositionSeries {
  /// 0 = terms[0] < terms[1] < ... < terms.back() = M.
  std::vector<Subspace> terms;
  /// True when every factor was certified irreducible over Q.
  bool certified = false;
};

CompositionSeries composition_series(const BimoduleRep& m);

}  // namespace leibkit
