#pragma once

#include <vector>

#include "leibkit/algebra.hpp"

namespace leibkit {

enum class SeriesKind { derived, left_central, right_central, mixed_central };

struct SeriesResult {
  SeriesKind variant;
  /// Terms from the whole algebra down, recorded until stabilization:
  /// the last two terms are equal, or the last term is zero.
  std::vector<Subspace> terms;
  /// Index of the first term equal to all later ones.
  std::size_t stabilized_at = 0;
  bool reaches_zero = false;
};

/// Iterates the requested series until two consecutive terms coincide;
/// dimensions weakly decrease, so this takes at most dim + 1 steps.
SeriesResult series(const StructureAlgebra& a, SeriesKind variant);

}  // namespace leibkit
