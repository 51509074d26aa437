#include "leibkit/report.hpp"

#include <json.hpp>
#include <sstream>

#include "leibkit/errors.hpp"
#include "leibkit/invariants.hpp"

namespace leibkit {

const char* toolkit_version() { return "0.1.0"; }

Fingerprint2D fingerprint2d(const StructureAlgebra& a) {
  const auto flags = check_identities(a);
  const auto cent = centers(a);
  return {leibniz_kernel(a).is_zero(), leibniz_kernel(a).dim(), cent.left.dim(), cent.right.dim(),
          is_nilpotent(a),             flags.left_leibniz,      flags.right_leibniz};
}

const char* to_string(Dim2Class c) {
  switch (c) {
    case Dim2Class::lie: return "lie";
    case Dim2Class::a_ell: return "a_ell";
    case Dim2Class::a_ell_op: return "a_ell_op";
    case Dim2Class::n_class: return "n_class";
  }
  return "lie";
}

Dim2Class classify_dim2(const StructureAlgebra& a) {
  if (a.dim() != 2) throw WrongDimension("classify_dim2 requires dimension 2");
  const auto flags = check_identities(a);
  if (!flags.left_leibniz && !flags.right_leibniz)
    throw NotLeibniz("classify_dim2 requires a left or right Leibniz algebra");
  const auto print = fingerprint2d(a);
  if (print.is_lie) return Dim2Class::lie;
  if (print.nilpotent) return Dim2Class::n_class;
  if (print.left_leibniz && !print.right_leibniz) return Dim2Class::a_ell;
  if (print.right_leibniz && !print.left_leibniz) return Dim2Class::a_ell_op;
  // Non-nilpotent non-Lie symmetric is impossible in dimension two.
  throw Error("internal: two-dimensional fingerprint outside the classification");
}

namespace {

std::vector<std::vector<std::string>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SubspaceEntry subspace_entry(const Subspace& s) { return {s.dim(), matrix_rows(s.basis())}; }

SeriesEntry series_entry(const SeriesResult& s) {
  SeriesEntry entry;
  for (const auto& term : s.terms) entry.dims.push_back(term.dim());
  entry.stabilized_at = s.stabilized_at;
  entry.reaches_zero = s.reaches_zero;
  return entry;
}

}  // namespace

InvariantReport build_report(const StructureAlgebra& a, const ReportOptions& options) {
  InvariantReport report;
  report.version = toolkit_version();
  report.name = a.name();
  report.dim = a.dim();
  report.basis = a.labels();
  report.identities = check_identities(a);
  report.is_leibniz = report.identities.left_leibniz || report.identities.right_leibniz;

  const auto cent = centers(a);
  report.subspaces["left_center"] = subspace_entry(cent.left);
  report.subspaces["right_center"] = subspace_entry(cent.right);
  report.subspaces["center"] = subspace_entry(cent.center);
  report.subspaces["leibniz_kernel"] = subspace_entry(leibniz_kernel(a));
  report.subspaces["square"] = subspace_entry(square(a));

  report.series["derived"] = series_entry(series(a, SeriesKind::derived));
  report.series["left_central"] = series_entry(series(a, SeriesKind::left_central));
  report.series["right_central"] = series_entry(series(a, SeriesKind::right_central));
  report.series["mixed_central"] = series_entry(series(a, SeriesKind::mixed_central));

  const BilinearForm kappa = killing_form(a);
  report.killing_matrix = matrix_rows(kappa.gram);
  report.killing_radical = subspace_entry(kappa.radical());
  report.killing_minimally_degenerate = is_minimally_degenerate(a, kappa);

  report.solvable = is_solvable(a);
  report.nilpotent = is_nilpotent(a);

  if (report.is_leibniz) {
    report.subspaces["radical"] = subspace_entry(radical(a));
    const auto predicates = structural_predicates(a);
    report.perfect = predicates.perfect;
    report.semisimple = predicates.semisimple;
    report.lie_simple = to_string(predicates.lie_simple);
    report.simple = to_string(predicates.simple);
    if (predicates.witness_ideal) report.witness_ideal = subspace_entry(*predicates.witness_ideal);
    report.canonical_lie_dim = canonical_lie(a).algebra.dim();
    if (report.identities.symmetric)
      report.lie_mult_dim = operator_span(a, OperatorFamily::lie_mult).dim();

    if (options.with_cohomology && report.identities.left_leibniz) {
      const std::vector<std::pair<std::string, BimoduleRep>> kinds = {
          {"trivial", trivial_bimodule(a, 1)},
          {"adjoint", adjoint_bimodule(a)},
      };
      for (const auto& [kind, module] : kinds)
        for (std::size_t n = 0; n <= options.cohomology_max_degree; ++n) {
          const auto dims = cohomology_dim(a, module, n, options.budget);
          report.cohomology.push_back({kind, n, dims.z_dim, dims.b_dim, dims.h_dim});
        }
    }
  }
  return report;
}

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

void print_subspace(std::ostringstream& out, const std::string& name, const SubspaceEntry& entry) {
  out << "  " << name << ": dim " << entry.dim;
  if (!entry.basis_rows.empty()) {
    out << ", basis";
    for (const auto& row : entry.basis_rows) {
      out << " [";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
      out << "]";
    }
  }
  out << "\n";
}

}  // namespace

std::string report_text(const InvariantReport& report) {
  std::ostringstream out;
  out << "leibkit " << report.version << " report for " << report.name << " (dim " << report.dim
      << ")\n";
  out << "identities: left " << yes_no(report.identities.left_leibniz) << ", right "
      << yes_no(report.identities.right_leibniz) << ", symmetric "
      << yes_no(report.identities.symmetric) << ", lie " << yes_no(report.identities.lie)
      << ", flexible " << yes_no(report.identities.flexible) << ", associative "
      << yes_no(report.identities.associative) << "\n";
  out << "subspaces:\n";
  for (const auto& [name, entry] : report.subspaces) print_subspace(out, name, entry);
  out << "series (dims until stabilization):\n";
  for (const auto& [name, entry] : report.series) {
    out << "  " << name << ":";
    for (auto d : entry.dims) out << " " << d;
    out << (entry.reaches_zero ? " (reaches zero)" : " (stabilizes nonzero)") << "\n";
  }
  out << "killing form:\n";
  for (const auto& row : report.killing_matrix) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
    out << "]\n";
  }
  print_subspace(out, "killing_radical", report.killing_radical);
  out << "  minimally degenerate: " << yes_no(report.killing_minimally_degenerate) << "\n";
  out << "predicates: solvable " << yes_no(report.solvable) << ", nilpotent "
      << yes_no(report.nilpotent);
  if (report.perfect) out << ", perfect " << yes_no(*report.perfect);
  if (report.semisimple) out << ", semisimple " << yes_no(*report.semisimple);
  if (report.lie_simple) out << ", lie_simple " << *report.lie_simple;
  if (report.simple) out << ", simple " << *report.simple;
  out << "\n";
  if (report.witness_ideal) print_subspace(out, "witness_ideal", *report.witness_ideal);
  out << "associated lie algebras: dim L_Lie = " << report.canonical_lie_dim;
  if (report.lie_mult_dim) out << ", dim lie(L) = " << *report.lie_mult_dim;
  out << "\n";
  if (!report.cohomology.empty()) {
    out << "cohomology:\n";
    for (const auto& entry : report.cohomology)
      out << "  HL^" << entry.degree << "(L, " << entry.module_kind << "): dim " << entry.h_dim
          << " (cocycles " << entry.z_dim << ", coboundaries " << entry.b_dim << ")\n";
  }
  return out.str();
}

std::string report_json(const InvariantReport& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["leibkit_version"] = report.version;
  root["name"] = report.name;
  root["dim"] = report.dim;
  root["basis"] = report.basis;
  root["identities"] = {{"left_leibniz", report.identities.left_leibniz},
                        {"right_leibniz", report.identities.right_leibniz},
                        {"symmetric", report.identities.symmetric},
                        {"lie", report.identities.lie},
                        {"flexible", report.identities.flexible},
                        {"associative", report.identities.associative}};
  json subspaces;
  for (const auto& [name, entry] : report.subspaces)
    subspaces[name] = {{"dim", entry.dim}, {"basis", entry.basis_rows}};
  root["subspaces"] = subspaces;
  json series;
  for (const auto& [name, entry] : report.series)
    series[name] = {{"dims", entry.dims},
                    {"stabilized_at", entry.stabilized_at},
                    {"reaches_zero", entry.reaches_zero}};
  root["series"] = series;
  root["killing_form"] = {
      {"matrix", report.killing_matrix},
      {"radical", {{"dim", report.killing_radical.dim}, {"basis", report.killing_radical.basis_rows}}},
      {"minimally_degenerate", report.killing_minimally_degenerate}};
  json predicates;
  predicates["solvable"] = report.solvable;
  predicates["nilpotent"] = report.nilpotent;
  if (report.perfect) predicates["perfect"] = *report.perfect;
  if (report.semisimple) predicates["semisimple"] = *report.semisimple;
  if (report.lie_simple) predicates["lie_simple"] = *report.lie_simple;
  if (report.simple) predicates["simple"] = *report.simple;
  root["predicates"] = predicates;
  if (report.witness_ideal)
    root["witness_ideal"] = {{"dim", report.witness_ideal->dim},
                             {"basis", report.witness_ideal->basis_rows}};
  json lie_dims;
  lie_dims["canonical_lie"] = report.canonical_lie_dim;
  if (report.lie_mult_dim)
    lie_dims["lie_mult"] = *report.lie_mult_dim;
  else
    lie_dims["lie_mult"] = nullptr;
  root["lie_dims"] = lie_dims;
  if (!report.cohomology.empty()) {
    json table = json::array();
    for (const auto& entry : report.cohomology)
      table.push_back({{"module_kind", entry.module_kind},
                       {"degree", entry.degree},
                       {"z_dim", entry.z_dim},
                       {"b_dim", entry.b_dim},
                       {"h_dim", entry.h_dim}});
    root["cohomology"] = table;
  }
  return root.dump(2) + "\n";
}

}  // namespace leibkit
