#include "clasp/rational.hpp"

#include "clasp/errors.hpp"

#include <cctype>

namespace clasp {

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (num.front() == '+') num.remove_prefix(1);
  if (slash == std::string_view::npos) return Rational(std::string(num));
  const std::string_view den = text.substr(slash + 1);
  if (!digits_ok(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
  Rational d(std::string{den});
  if (d.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  return Rational(std::string(num)) / d;
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

}  // namespace clasp
