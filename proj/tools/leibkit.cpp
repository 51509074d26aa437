#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leibkit/document.hpp"
#include "leibkit/errors.hpp"
#include "leibkit/report.hpp"

namespace {

using namespace leibkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

BimoduleRep module_from_options(const StructureAlgebra& algebra, const std::string& kind,
                                const std::string& module_file) {
  if (kind == "adjoint") return adjoint_bimodule(algebra);
  if (kind == "anti-adjoint") return make_bimodule(adjoint_module(algebra), BimoduleKind::anti);
  if (kind == "sym-adjoint") return make_bimodule(adjoint_module(algebra), BimoduleKind::sym);
  if (kind == "trivial") return trivial_bimodule(algebra, 1);
  if (kind == "file") {
    if (module_file.empty())
      throw SemanticError("--module-kind file requires --module FILE", 0);
    BimoduleRep rep = parse_module(read_file(module_file), algebra);
    if (!check_bimodule(rep).all())
      throw NotBimodule("module file does not satisfy the bimodule axioms");
    return rep;
  }
  throw SemanticError("unknown module kind '" + kind + "'", 0);
}

int run_check(const std::string& path) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  const auto flags = check_identities(algebra);
  std::cout << "left: " << yes_no(flags.left_leibniz) << ", right: " << yes_no(flags.right_leibniz)
            << "\n";
  std::cout << "symmetric: " << yes_no(flags.symmetric) << "\n";
  std::cout << "lie: " << yes_no(flags.lie) << "\n";
  std::cout << "flexible: " << yes_no(flags.flexible) << "\n";
  std::cout << "associative: " << yes_no(flags.associative) << "\n";
  return (flags.left_leibniz || flags.right_leibniz) ? 0 : 1;
}

int run_report(const std::string& path, const std::string& format, bool with_cohomology,
               std::size_t max_degree, std::size_t max_space) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  ReportOptions options;
  options.with_cohomology = with_cohomology;
  options.budget.max_degree = max_degree;
  options.budget.max_space_dim = max_space;
  const InvariantReport report = build_report(algebra, options);
  std::cout << (format == "json" ? report_json(report) : report_text(report));
  return 0;
}

int run_series(const std::string& path, const std::string& variant) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  SeriesKind kind;
  if (variant == "derived")
    kind = SeriesKind::derived;
  else if (variant == "left")
    kind = SeriesKind::left_central;
  else if (variant == "right")
    kind = SeriesKind::right_central;
  else if (variant == "mixed")
    kind = SeriesKind::mixed_central;
  else
    throw SemanticError("unknown series variant '" + variant + "'", 0);

  const SeriesResult result = series(algebra, kind);
  for (std::size_t i = 0; i < result.terms.size(); ++i) {
    std::cout << "term " << i << ": dim " << result.terms[i].dim();
    for (std::size_t r = 0; r < result.terms[i].dim(); ++r) {
      std::cout << (r == 0 ? "  basis " : ", ");
      const Vec row = result.terms[i].basis_vector(r);
      std::cout << "[";
      for (std::size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? ", " : "") << to_string(row[j]);
      std::cout << "]";
    }
    std::cout << "\n";
  }
  std::cout << (result.reaches_zero ? "reaches zero" : "stabilizes nonzero") << " at index "
            << result.stabilized_at << "\n";
  return 0;
}

int run_cohomology(const std::string& path, std::size_t degree, const std::string& kind,
                   const std::string& module_file, std::size_t max_degree, std::size_t max_space) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  const BimoduleRep module = module_from_options(algebra, kind, module_file);
  CohomologyBudget budget;
  budget.max_degree = max_degree;
  budget.max_space_dim = max_space;
  const auto dims = cohomology_dim(algebra, module, degree, budget);
  std::cout << "dim HL^" << degree << " = " << dims.h_dim << "\n";
  std::cout << "cocycles: " << dims.z_dim << ", coboundaries: " << dims.b_dim << "\n";
  return 0;
}

int run_extend(const std::string& path, const std::string& cocycle_file, const std::string& kind,
               const std::string& module_file) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  const BimoduleRep module = module_from_options(algebra, kind, module_file);
  Cochain cocycle{2, Vec(algebra.dim() * algebra.dim() * module.dim(), Scalar(0))};
  if (!cocycle_file.empty())
    cocycle = parse_cochain(read_file(cocycle_file), algebra, module.labels, module.dim());
  const StructureAlgebra extension =
      extension_from_cocycle(algebra, module, cocycle, algebra.name() + "_ext");
  std::cout << serialize(extension);
  return 0;
}

int run_classify2(const std::string& path) {
  const StructureAlgebra algebra = parse_algebra(read_file(path));
  const Dim2Class bucket = classify_dim2(algebra);
  switch (bucket) {
    case Dim2Class::lie: std::cout << "lie\n"; break;
    case Dim2Class::a_ell: std::cout << "a_ell (left, not right)\n"; break;
    case Dim2Class::a_ell_op: std::cout << "a_ell_op (right, not left)\n"; break;
    case Dim2Class::n_class: std::cout << "n_class (nilpotent symmetric)\n"; break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leibkit: exact invariants of finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);

  std::string file, format = "text", variant = "derived", kind = "adjoint";
  std::string module_file, cocycle_file;
  std::size_t degree = 0, max_degree = 3, max_space = 200000;
  bool with_cohomology = false;

  auto* check = app.add_subcommand("check", "print identity flags");
  check->add_option("file", file, "algebra file (.lbz)")->required();

  auto* report = app.add_subcommand("report", "emit the full invariant report");
  report->add_option("file", file)->required();
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_flag("--with-cohomology", with_cohomology, "include a cohomology table");
  report->add_option("--max-degree", max_degree, "cohomology degree budget");
  report->add_option("--max-space", max_space, "cochain space size budget");

  auto* series_cmd = app.add_subcommand("series", "print a series until stabilization");
  series_cmd->add_option("file", file)->required();
  series_cmd->add_option("--variant", variant, "derived, left, right or mixed")
      ->check(CLI::IsMember({"derived", "left", "right", "mixed"}));

  auto* cohomology_cmd = app.add_subcommand("cohomology", "cohomology dimensions");
  cohomology_cmd->add_option("file", file)->required();
  cohomology_cmd->add_option("--degree", degree, "cohomology degree")->required();
  cohomology_cmd->add_option("--module-kind", kind,
                             "adjoint, anti-adjoint, sym-adjoint, trivial or file")
      ->check(CLI::IsMember({"adjoint", "anti-adjoint", "sym-adjoint", "trivial", "file"}));
  cohomology_cmd->add_option("--module", module_file, "module file for --module-kind file");
  cohomology_cmd->add_option("--max-degree", max_degree, "degree budget");
  cohomology_cmd->add_option("--max-space", max_space, "cochain space size budget");

  auto* extend = app.add_subcommand("extend", "build an abelian extension from a 2-cocycle");
  extend->add_option("file", file)->required();
  extend->add_option("--cocycle", cocycle_file, "cochain file (defaults to the zero cocycle)");
  extend->add_option("--module-kind", kind,
                     "adjoint, anti-adjoint, sym-adjoint, trivial or file")
      ->check(CLI::IsMember({"adjoint", "anti-adjoint", "sym-adjoint", "trivial", "file"}));
  extend->add_option("--module", module_file, "module file for --module-kind file");

  auto* classify2 = app.add_subcommand("classify2", "classify a two-dimensional Leibniz algebra");
  classify2->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file);
    if (report->parsed()) return run_report(file, format, with_cohomology, max_degree, max_space);
    if (series_cmd->parsed()) return run_series(file, variant);
    if (cohomology_cmd->parsed())
      return run_cohomology(file, degree, kind, module_file, max_degree, max_space);
    if (extend->parsed()) return run_extend(file, cocycle_file, kind, module_file);
    if (classify2->parsed()) return run_classify2(file);
  } catch (const leibkit::ParseError& e) {
    std::cerr << "leibkit: " << e.what() << "\n";
    return 2;
  } catch (const leibkit::SemanticError& e) {
    std::cerr << "leibkit: " << e.what() << "\n";
    return 2;
  } catch (const leibkit::Error& e) {
    std::cerr << "leibkit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "leibkit: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
