#include "propp/laurent.hpp"

#include <sstream>

namespace propp {

LaurentPolynomial::LaurentPolynomial(
    std::initializer_list<std::pair<int, long long>> terms) {
  for (const auto& [e, c] : terms) insert_term(e, BigInt(c));
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, int exp) {
  LaurentPolynomial p;
  p.insert_term(exp, c);
  return p;
}

void LaurentPolynomial::insert_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto it = coeff_.find(exp);
  if (it == coeff_.end()) {
    coeff_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

BigInt LaurentPolynomial::coeff(int exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exp() const {
  if (is_zero()) throw ArithmeticError("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
  if (is_zero()) throw ArithmeticError("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.coeff_) out.insert_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.coeff_) out.insert_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.coeff_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) out.insert_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int exp) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.coeff_.emplace(e + exp, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.coeff_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.insert_term(e - 1, c * e);
  return out;
}

BigInt LaurentPolynomial::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeff_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::exact_div(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (is_zero()) return {};
  // Work with the top coefficient of the divisor; remainder must vanish.
  LaurentPolynomial rem = *this;
  LaurentPolynomial quot;
  const int d_top = divisor.max_exp();
  const BigInt d_lead = divisor.coeff(d_top);
  while (!rem.is_zero()) {
    const int r_top = rem.max_exp();
    const BigInt r_lead = rem.coeff(r_top);
    if (r_lead % d_lead != 0)
      throw ArithmeticError("inexact polynomial division (coefficient)");
    const BigInt q = r_lead / d_lead;
    const int e = r_top - d_top;
    quot.insert_term(e, q);
    rem = rem - divisor.shifted(e) * monomial(q, 0);
    if (!rem.is_zero() && rem.max_exp() >= r_top)
      throw ArithmeticError("inexact polynomial division (degree)");
  }
  return quot;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const int e = it->first;
    const BigInt& c = it->second;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      out << 't';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

}  // namespace propp
