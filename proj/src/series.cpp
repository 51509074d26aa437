#include "leibkit/series.hpp"

namespace leibkit {

SeriesResult series(const StructureAlgebra& a, SeriesKind variant) {
  const Subspace whole = Subspace::full(a.dim());
  SeriesResult out{variant, {whole}, 0, whole.is_zero()};

  auto next_term = [&](const std::vector<Subspace>& terms) -> Subspace {
    const Subspace& current = terms.back();
    switch (variant) {
      case SeriesKind::derived:
        return subspace_product(a, current, current);
      case SeriesKind::left_central:
        return subspace_product(a, whole, current);
      case SeriesKind::right_central:
        return subspace_product(a, current, whole);
      case SeriesKind::mixed_central: {
        // L_n = sum over k of L_k L_{n-k}; terms[k-1] holds L_k.
        const std::size_t n = terms.size() + 1;
        Subspace sum(a.dim());
        for (std::size_t k = 1; k + 1 <= n; ++k)
          sum = sum + subspace_product(a, terms[k - 1], terms[n - k - 1]);
        return sum;
      }
    }
    return current;
  };

  while (!out.terms.back().is_zero()) {
    Subspace next = next_term(out.terms);
    const bool stable = next == out.terms.back();
    out.terms.push_back(std::move(next));
    if (stable) break;
    if (out.terms.back().is_zero()) break;
  }
  out.reaches_zero = out.terms.back().is_zero();
  out.stabilized_at = out.terms.size() - 1;
  if (out.terms.size() >= 2 && out.terms[out.terms.size() - 2] == out.terms.back())
    out.stabilized_at = out.terms.size() - 2;
  return out;
}

}  // namespace leibkit
