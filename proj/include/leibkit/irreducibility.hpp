#pragma once

#include <optional>

#include "leibkit/invariants.hpp"

namespace leibkit {

enum class Irreducibility { irreducible, reducible, unknown };

/// Three-valued verdict over Q: soundness over completeness. Reducible
/// always carries a verified witness; irreducible is only certified when
/// the commutant is trivial and every probe spins to the full space.
struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::unknown;
  std::optional<Subspace> witness;
  std::size_t commutant_dim = 0;
};

/// All matrices commuting with every operator of the family, as a
/// subspace of flattened dim x dim matrices.
Subspace commutant(const std::vector<Matrix>& ops, std::size_t dim);

/// Invariant-subspace engine for an arbitrary operator family.
/// Phase 1 spins every unit vector and every operator column; phase 2
/// extracts kernels of rational-eigenvalue shifts of non-scalar commutant
/// elements; phase 3 certifies irreducibility from a trivial commutant
/// plus full spins. Throws ZeroModule on an empty space.
IrreducibilityVerdict is_irreducible_family(const std::vector<Matrix>& ops, std::size_t dim);

}  // namespace leibkit
