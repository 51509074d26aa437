#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibkit/cohomology.hpp"
#include "leibkit/structure.hpp"

namespace leibkit {

const char* toolkit_version();

/// Complete invariant of two-dimensional non-Lie Leibniz algebras.
struct Fingerprint2D {
  bool is_lie = false;
  std::size_t leib_dim = 0;
  std::size_t left_center_dim = 0;
  std::size_t right_center_dim = 0;
  bool nilpotent = false;
  bool left_leibniz = false;
  bool right_leibniz = false;
};

Fingerprint2D fingerprint2d(const StructureAlgebra& a);

enum class Dim2Class { lie, a_ell, a_ell_op, n_class };

const char* to_string(Dim2Class c);

/// Buckets a two-dimensional left or right Leibniz algebra into the four
/// isomorphism classes. Throws WrongDimension / NotLeibniz.
Dim2Class classify_dim2(const StructureAlgebra& a);

struct ReportOptions {
  bool with_cohomology = false;
  std::size_t cohomology_max_degree = 1;
  CohomologyBudget budget{};
};

struct SubspaceEntry {
  std::size_t dim = 0;
  std::vector<std::vector<std::string>> basis_rows;
};

struct SeriesEntry {
  std::vector<std::size_t> dims;
  std::size_t stabilized_at = 0;
  bool reaches_zero = false;
};

struct CohomologyEntry {
  std::string module_kind;
  std::size_t degree = 0;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::size_t h_dim = 0;
};

/// The serializable result bundle behind `leibkit report`.
struct InvariantReport {
  std::string version;
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  IdentityFlags identities;
  bool is_leibniz = false;
  std::map<std::string, SubspaceEntry> subspaces;  // deterministic order
  std::map<std::string, SeriesEntry> series;
  std::vector<std::vector<std::string>> killing_matrix;
  SubspaceEntry killing_radical;
  bool killing_minimally_degenerate = false;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<bool> perfect;
  std::optional<bool> semisimple;
  std::optional<std::string> lie_simple;
  std::optional<std::string> simple;
  std::optional<SubspaceEntry> witness_ideal;
  std::size_t canonical_lie_dim = 0;
  std::optional<std::size_t> lie_mult_dim;  ///< only for symmetric algebras
  std::vector<CohomologyEntry> cohomology;
};

InvariantReport build_report(const StructureAlgebra& a, const ReportOptions& options = {});

std::string report_text(const InvariantReport& report);
std::string report_json(const InvariantReport& report);

}  // namespace leibkit
