#include "bicov/scalar.hpp"

#include <cctype>

namespace bicov {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size()) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (start == s.size()) throw std::invalid_argument("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& x, int e) {
  if (e < 0) {
    if (is_zero(x)) throw std::domain_error("negative power of zero");
    Rational inv = 1 / x;
    return pow(inv, -e);
  }
  Rational acc = 1;
  Rational base = x;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace bicov
