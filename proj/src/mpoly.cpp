#include "bicov/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bicov {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "a1", "a2", "a3", "a4", "a5", "a6", "a7",  //
    "b1", "b2", "b3", "b4", "b5", "b6", "b7",  //
    "c1", "c2", "c3", "c4", "c5", "c6", "c7",  //
    "mu", "nu", "kappa"};

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

}  // namespace

std::optional<int> var_index(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kNames[i] == name) return i;
  return std::nullopt;
}

std::string_view var_name(int index) { return kNames.at(index); }

int var_a(int i) { return i - 1; }
int var_b(int i) { return 6 + i; }
int var_c(int i) { return 13 + i; }

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly::MPoly(const Rational& c) {
  if (!bicov::is_zero(c)) terms_.emplace_back(zero_exponents(), c);
}

MPoly MPoly::variable(int index) {
  MPoly p;
  Exponents e = zero_exponents();
  e.at(index) = 1;
  p.terms_.emplace_back(e, Rational(1));
  return p;
}

MPoly MPoly::variable(std::string_view name) {
  auto idx = var_index(name);
  if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
  return variable(*idx);
}

int MPoly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == zero_exponents());
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == zero_exponents()) return terms_[0].second;
  return 0;
}

std::uint32_t MPoly::support() const {
  std::uint32_t mask = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (e[i]) mask |= 1u << i;
  return mask;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && bicov::is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && bicov::is_zero(out.back().second)) out.pop_back();
  terms_ = std::move(out);
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (!bicov::is_zero(s)) r.terms_.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int k = 0; k < kNumVars; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.terms_.emplace_back(e, ca * cb);
    }
  }
  r.normalize();
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

Rational MPoly::evaluate(const std::array<Rational, kNumVars>& values) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < kNumVars; ++k)
      if (e[k]) t *= bicov::pow(values[k], e[k]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::map<int, MPoly>& values) const {
  MPoly acc;
  for (const auto& [e, c] : terms_) {
    MPoly t(c);
    Exponents rest = e;
    for (const auto& [var, val] : values) {
      for (int k = 0; k < e[var]; ++k) t = t * val;
      rest[var] = 0;
    }
    MPoly mono;
    mono.terms_.emplace_back(rest, Rational(1));
    acc += t * mono;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (auto x : e) has_var |= x != 0;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (int k = 0; k < kNumVars; ++k) {
      if (!e[k]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << kNames[k];
      if (e[k] > 1) os << "^" << static_cast<int>(e[k]);
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  MPoly parse() {
    if (text_.empty()) throw std::invalid_argument("empty polynomial");
    MPoly p = expr();
    if (pos_ != text_.size()) fail();
    return p;
  }

 private:
  [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse polynomial: " + text_); }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  MPoly expr() {
    MPoly acc;
    bool neg = false;
    if (at('-') || at('+')) neg = text_[pos_++] == '-';
    acc = neg ? -term() : term();
    while (at('+') || at('-')) {
      bool minus = text_[pos_++] == '-';
      MPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (at('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  MPoly factor() {
    MPoly base;
    if (at('(')) {
      ++pos_;
      base = expr();
      if (!at(')')) fail();
      ++pos_;
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      base = MPoly(parse_rational(text_.substr(start, pos_ - start)));
    } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      base = MPoly::variable(text_.substr(start, pos_ - start));
    } else {
      fail();
    }
    if (at('^')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail();
      int e = std::stoi(text_.substr(start, pos_ - start));
      MPoly acc(1);
      for (int k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace bicov
