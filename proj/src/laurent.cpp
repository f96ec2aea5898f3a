#include "bicov/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bicov {

LaurentQ::LaurentQ(long c) : LaurentQ(Rational(c)) {}

LaurentQ::LaurentQ(const Rational& c) {
  if (!bicov::is_zero(c)) terms_[0] = c;
}

LaurentQ LaurentQ::monomial(LaurentBase base, int exponent, const Rational& c) {
  LaurentQ p;
  p.base_ = base;
  if (!bicov::is_zero(c)) p.terms_[exponent] = c;
  return p;
}

LaurentQ LaurentQ::half_q_power(int twice_e) {
  return monomial(LaurentBase::s, twice_e).simplified();
}

int LaurentQ::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentQ::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentQ LaurentQ::in_s() const {
  if (base_ == LaurentBase::s) return *this;
  LaurentQ r;
  r.base_ = LaurentBase::s;
  for (const auto& [e, c] : terms_) r.terms_[2 * e] = c;
  return r;
}

LaurentQ LaurentQ::simplified() const {
  if (base_ == LaurentBase::q) return *this;
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return *this;
  LaurentQ r;
  for (const auto& [e, c] : terms_) r.terms_[e / 2] = c;
  return r;
}

namespace {

// Brings both operands to a common base.
std::pair<LaurentQ, LaurentQ> unify(const LaurentQ& a, const LaurentQ& b) {
  if (a.base() == b.base()) return {a, b};
  return {a.in_s(), b.in_s()};
}

}  // namespace

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
  if (a.base_ != b.base_) {
    auto [x, y] = unify(a, b);
    return x + y;
  }
  LaurentQ r = a;
  for (const auto& [e, c] : b.terms_) {
    Rational s = r.terms_[e] + c;
    if (bicov::is_zero(s))
      r.terms_.erase(e);
    else
      r.terms_[e] = s;
  }
  return r;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return a + (-b); }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.base_ != b.base_) {
    auto [x, y] = unify(a, b);
    return x * y;
  }
  LaurentQ r;
  r.base_ = a.base_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (bicov::is_zero(it->second))
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

bool operator==(const LaurentQ& a, const LaurentQ& b) {
  if (a.base_ != b.base_) {
    auto [x, y] = unify(a, b);
    return x.terms_ == y.terms_;
  }
  return a.terms_ == b.terms_;
}

Rational LaurentQ::evaluate_base(const Rational& x) const {
  if (bicov::is_zero(x)) throw std::domain_error("Laurent polynomial evaluated at zero");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * bicov::pow(x, e);
  return acc;
}

Rational LaurentQ::evaluate_q(const Rational& q0) const {
  if (bicov::is_zero(q0)) throw std::domain_error("Laurent polynomial evaluated at q = 0");
  LaurentQ p = simplified();
  if (p.base_ == LaurentBase::q) return p.evaluate_base(q0);
  Integer num = q0.get_num();
  Integer den = q0.get_den();
  if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw std::domain_error("half-integer powers need q0 to be a rational square");
  Integer sn = sqrt(num);
  Integer sd = sqrt(den);
  return p.evaluate_base(Rational(sn, sd));
}

Rational LaurentQ::derivative_at_one() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * e;
  if (base_ == LaurentBase::s) acc /= 2;
  return acc;
}

std::string LaurentQ::str() const {
  if (terms_.empty()) return "0";
  const char* sym = base_ == LaurentBase::q ? "q" : "s";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << sym;
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

LaurentQ q_number(int n) {
  if (n < 0) return -q_number(-n);
  LaurentQ acc;
  for (int k = 0; k < n; ++k) acc += LaurentQ::q_power(n - 1 - 2 * k);
  return acc;
}

LaurentQ q_lambda() { return LaurentQ::q_power(1) - LaurentQ::q_power(-1); }

Rational laurent_eval(const LaurentQ& p, const Rational& q0) { return p.evaluate_q(q0); }

}  // namespace bicov
