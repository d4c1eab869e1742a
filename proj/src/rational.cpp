#include "clusterlab/rational.hpp"

#include <cctype>

#include "clusterlab/errors.hpp"

namespace clusterlab {

Rational make_rational(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw ArithmeticError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_integer_text(text)) throw InputError("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace clusterlab
