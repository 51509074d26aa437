#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leibkit/bimodule.hpp"
#include "leibkit/cohomology.hpp"

namespace leibkit {

/// One parsed rule: left * right = combo (products), or an action rule.
struct DocumentRule {
  std::string left;
  std::string right;
  std::vector<std::pair<Scalar, std::string>> combo;
  std::size_t line = 0;
};

/// The surface form of an algebra file: omitted products default to zero.
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> basis;
  std::vector<DocumentRule> rules;
};

AlgebraDocument parse_algebra_document(const std::string& text);
StructureAlgebra elaborate(const AlgebraDocument& doc);
StructureAlgebra parse_algebra(const std::string& text);
std::string serialize(const StructureAlgebra& a);

/// Module files reuse the grammar with a `module` header and action rules
/// `x . m = combo` (left action) and `m . x = combo` (right action);
/// omitted actions default to zero, so a file with only left rules is an
/// anti-symmetric bimodule candidate. The result is not validated here.
BimoduleRep parse_module(const std::string& text, const StructureAlgebra& algebra);

/// Cochain files declare a degree-2 cochain over an algebra and a module:
/// header `cochain NAME`, rules `x * y = combo-of-module-labels`.
Cochain parse_cochain(const std::string& text, const StructureAlgebra& algebra,
                      const std::vector<std::string>& module_labels, std::size_t module_dim);

}  // namespace leibkit
