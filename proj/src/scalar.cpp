#include "leibkit/scalar.hpp"

#include <cctype>

#include "leibkit/errors.hpp"

namespace leibkit {

Scalar rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

Scalar parse_rational(const std::string& text) {
  auto bad = [&]() -> Error { return Error("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_integer = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_integer(num_part) || !is_integer(den_part)) throw bad();
  mpz_class num(num_part);
  mpz_class den(den_part);
  if (den == 0) throw Error("zero denominator in rational '" + text + "'");
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace leibkit
