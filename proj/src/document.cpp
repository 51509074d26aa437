#include "leibkit/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "leibkit/errors.hpp"

namespace leibkit {

namespace {

enum class TokenKind { ident, number, star, dot, equals, plus, minus, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize_line(const std::string& line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t column = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      tokens.push_back({TokenKind::ident, line.substr(i, j - i), column});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        if (j >= line.size() || !std::isdigit(static_cast<unsigned char>(line[j])))
          throw ParseError("malformed rational", line_no, column);
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      tokens.push_back({TokenKind::number, line.substr(i, j - i), column});
      i = j;
    } else {
      TokenKind kind;
      switch (c) {
        case '*': kind = TokenKind::star; break;
        case '.': kind = TokenKind::dot; break;
        case '=': kind = TokenKind::equals; break;
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line_no, column);
      }
      tokens.push_back({kind, std::string(1, c), column});
      ++i;
    }
  }
  tokens.push_back({TokenKind::end, "", line.size() + 1});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == TokenKind::end; }

  Token expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError("expected " + what, line_, peek().column);
    return tokens_[pos_++];
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Scalar parse_number() {
    const Token token = expect(TokenKind::number, "a rational number");
    try {
      return parse_rational(token.text);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_, token.column);
    }
  }

  /// combo := '0' | [-] term (('+'|'-') term)* ; term := [NUMBER] IDENT
  std::vector<std::pair<Scalar, std::string>> parse_combo() {
    std::vector<std::pair<Scalar, std::string>> combo;
    if (peek().kind == TokenKind::number && peek().text == "0") {
      ++pos_;
      if (!at_end()) throw ParseError("trailing input after zero", line_, peek().column);
      return combo;
    }
    bool negative = accept(TokenKind::minus);
    while (true) {
      if (accept(TokenKind::minus)) negative = !negative;  // allows "+ -3 v"
      Scalar coeff = peek().kind == TokenKind::number ? parse_number() : Scalar(1);
      if (negative) coeff = -coeff;
      const Token label = expect(TokenKind::ident, "a basis label");
      combo.emplace_back(coeff, label.text);
      if (at_end()) break;
      if (accept(TokenKind::plus))
        negative = false;
      else if (accept(TokenKind::minus))
        negative = true;
      else
        throw ParseError("expected '+' or '-'", line_, peek().column);
    }
    return combo;
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::vector<std::pair<std::size_t, LineParser>> logical_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, LineParser>> lines;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    LineParser parser(tokenize_line(line, line_no), line_no);
    if (!parser.at_end()) lines.emplace_back(line_no, std::move(parser));
  }
  return lines;
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& label,
                        std::size_t line) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw SemanticError("unknown basis label '" + label + "'", line);
  return static_cast<std::size_t>(it - labels.begin());
}

Vec combo_vector(const std::vector<std::pair<Scalar, std::string>>& combo,
                 const std::vector<std::string>& labels, std::size_t line) {
  Vec out(labels.size(), Scalar(0));
  for (const auto& [coeff, label] : combo) out[label_index(labels, label, line)] += coeff;
  return out;
}

std::vector<std::string> parse_basis_line(LineParser& parser) {
  std::vector<std::string> labels;
  while (!parser.at_end()) labels.push_back(parser.expect(TokenKind::ident, "a basis label").text);
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw SemanticError("duplicate basis label", parser.line());
  return labels;
}

}  // namespace

AlgebraDocument parse_algebra_document(const std::string& text) {
  AlgebraDocument doc;
  bool have_header = false;
  bool have_basis = false;
  std::map<std::pair<std::string, std::string>, std::size_t> seen_rules;

  for (auto& [line_no, parser] : logical_lines(text)) {
    if (!have_header) {
      const Token keyword = parser.expect(TokenKind::ident, "'algebra'");
      if (keyword.text != "algebra")
        throw ParseError("expected 'algebra' header", line_no, keyword.column);
      doc.name = parser.expect(TokenKind::ident, "an algebra name").text;
      if (!parser.at_end()) throw ParseError("trailing input after header", line_no, parser.peek().column);
      have_header = true;
      continue;
    }
    if (!have_basis) {
      const Token keyword = parser.expect(TokenKind::ident, "'basis'");
      if (keyword.text != "basis")
        throw ParseError("expected 'basis' line", line_no, keyword.column);
      doc.basis = parse_basis_line(parser);
      have_basis = true;
      continue;
    }
    DocumentRule rule;
    rule.line = line_no;
    rule.left = parser.expect(TokenKind::ident, "a basis label").text;
    parser.expect(TokenKind::star, "'*'");
    rule.right = parser.expect(TokenKind::ident, "a basis label").text;
    parser.expect(TokenKind::equals, "'='");
    rule.combo = parser.parse_combo();
    label_index(doc.basis, rule.left, line_no);
    label_index(doc.basis, rule.right, line_no);
    for (const auto& [coeff, label] : rule.combo) label_index(doc.basis, label, line_no);
    const auto key = std::make_pair(rule.left, rule.right);
    if (seen_rules.count(key))
      throw SemanticError("duplicate rule for " + rule.left + "*" + rule.right +
                              " (first at line " + std::to_string(seen_rules[key]) + ")",
                          line_no);
    seen_rules[key] = line_no;
    doc.rules.push_back(std::move(rule));
  }
  if (!have_header) throw SemanticError("missing 'algebra' header", 1);
  if (!have_basis) throw SemanticError("missing 'basis' line", 1);
  return doc;
}

StructureAlgebra elaborate(const AlgebraDocument& doc) {
  StructureAlgebra a(doc.name, doc.basis);
  for (const auto& rule : doc.rules) {
    const std::size_t i = label_index(doc.basis, rule.left, rule.line);
    const std::size_t j = label_index(doc.basis, rule.right, rule.line);
    a.set_product(i, j, combo_vector(rule.combo, doc.basis, rule.line));
  }
  return a;
}

StructureAlgebra parse_algebra(const std::string& text) {
  return elaborate(parse_algebra_document(text));
}

namespace {

std::string render_combo(const Vec& coords, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    const bool negative = coords[k] < 0;
    const Scalar magnitude = negative ? Scalar(-coords[k]) : coords[k];
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string serialize(const StructureAlgebra& a) {
  std::string out = "algebra " + a.name() + "\n";
  out += "basis";
  for (const auto& label : a.labels()) out += " " + label;
  out += "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec product = a.basis_product(i, j);
      if (is_zero(product)) continue;
      out += a.label(i) + "*" + a.label(j) + " = " + render_combo(product, a.labels()) + "\n";
    }
  return out;
}

BimoduleRep parse_module(const std::string& text, const StructureAlgebra& algebra) {
  std::string name;
  std::vector<std::string> labels;
  bool have_header = false;
  bool have_basis = false;
  std::vector<Matrix> lambda, rho;
  std::map<std::pair<std::string, std::string>, std::size_t> seen_rules;

  for (auto& [line_no, parser] : logical_lines(text)) {
    if (!have_header) {
      const Token keyword = parser.expect(TokenKind::ident, "'module'");
      if (keyword.text != "module")
        throw ParseError("expected 'module' header", line_no, keyword.column);
      name = parser.expect(TokenKind::ident, "a module name").text;
      have_header = true;
      continue;
    }
    if (!have_basis) {
      const Token keyword = parser.expect(TokenKind::ident, "'basis'");
      if (keyword.text != "basis")
        throw ParseError("expected 'basis' line", line_no, keyword.column);
      labels = parse_basis_line(parser);
      for (const auto& label : labels)
        if (std::find(algebra.labels().begin(), algebra.labels().end(), label) !=
            algebra.labels().end())
          throw SemanticError("module label '" + label + "' collides with the algebra basis",
                              line_no);
      lambda.assign(algebra.dim(), Matrix(labels.size(), labels.size()));
      rho.assign(algebra.dim(), Matrix(labels.size(), labels.size()));
      have_basis = true;
      continue;
    }
    const Token first = parser.expect(TokenKind::ident, "a label");
    parser.expect(TokenKind::dot, "'.'");
    const Token second = parser.expect(TokenKind::ident, "a label");
    parser.expect(TokenKind::equals, "'='");
    const Vec value = combo_vector(parser.parse_combo(), labels, line_no);

    const auto key = std::make_pair(first.text, second.text);
    if (seen_rules.count(key))
      throw SemanticError("duplicate action rule for " + first.text + " . " + second.text, line_no);
    seen_rules[key] = line_no;

    const bool first_is_algebra =
        std::find(algebra.labels().begin(), algebra.labels().end(), first.text) !=
        algebra.labels().end();
    if (first_is_algebra) {
      const std::size_t i = label_index(algebra.labels(), first.text, line_no);
      const std::size_t b = label_index(labels, second.text, line_no);
      for (std::size_t p = 0; p < labels.size(); ++p) lambda[i].at(p, b) = value[p];
    } else {
      const std::size_t b = label_index(labels, first.text, line_no);
      const std::size_t i = label_index(algebra.labels(), second.text, line_no);
      for (std::size_t p = 0; p < labels.size(); ++p) rho[i].at(p, b) = value[p];
    }
  }
  if (!have_header) throw SemanticError("missing 'module' header", 1);
  if (!have_basis) throw SemanticError("missing 'basis' line", 1);
  return bimodule(algebra, std::move(lambda), std::move(rho), std::move(labels));
}

Cochain parse_cochain(const std::string& text, const StructureAlgebra& algebra,
                      const std::vector<std::string>& module_labels, std::size_t module_dim) {
  if (module_labels.size() != module_dim) throw DimensionMismatch("module label count mismatch");
  Cochain out{2, Vec(algebra.dim() * algebra.dim() * module_dim, Scalar(0))};
  bool have_header = false;
  std::map<std::pair<std::string, std::string>, std::size_t> seen_rules;

  for (auto& [line_no, parser] : logical_lines(text)) {
    if (!have_header) {
      const Token keyword = parser.expect(TokenKind::ident, "'cochain'");
      if (keyword.text != "cochain")
        throw ParseError("expected 'cochain' header", line_no, keyword.column);
      parser.expect(TokenKind::ident, "a cochain name");
      have_header = true;
      continue;
    }
    const Token left = parser.expect(TokenKind::ident, "an algebra label");
    parser.expect(TokenKind::star, "'*'");
    const Token right = parser.expect(TokenKind::ident, "an algebra label");
    parser.expect(TokenKind::equals, "'='");
    const Vec value = combo_vector(parser.parse_combo(), module_labels, line_no);

    const auto key = std::make_pair(left.text, right.text);
    if (seen_rules.count(key))
      throw SemanticError("duplicate cochain rule for " + left.text + "*" + right.text, line_no);
    seen_rules[key] = line_no;

    const std::size_t i = label_index(algebra.labels(), left.text, line_no);
    const std::size_t j = label_index(algebra.labels(), right.text, line_no);
    for (std::size_t a = 0; a < module_dim; ++a)
      out.values[(i * algebra.dim() + j) * module_dim + a] = value[a];
  }
  if (!have_header) throw SemanticError("missing 'cochain' header", 1);
  return out;
}

}  // namespace leibkit
