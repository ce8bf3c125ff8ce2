#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace propp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer-coefficient polynomial in t and t^-1, finitely supported;
/// zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<int, long long>> terms);

  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return monomial(1, 0); }
  static LaurentPolynomial t() { return monomial(1, 1); }
  static LaurentPolynomial monomial(BigInt c, int exp);

  bool is_zero() const { return coeff_.empty(); }
  BigInt coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;
  const std::map<int, BigInt>& terms() const { return coeff_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const {
    return coeff_ == o.coeff_;
  }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  LaurentPolynomial shifted(int exp) const;      // multiply by t^exp
  LaurentPolynomial inverted_variable() const;   // t -> t^-1
  LaurentPolynomial derivative() const;          // formal d/dt
  BigInt evaluate_at_one() const;

  /// Exact division; throws ArithmeticError if the quotient is not a
  /// Laurent polynomial over the integers.
  LaurentPolynomial exact_div(const LaurentPolynomial& divisor) const;

  /// Rendering with descending exponents and explicit signs,
  /// e.g. "2*t - 3 + 2*t^-1".
  std::string to_string() const;

 private:
  void insert_term(int exp, const BigInt& c);
  std::map<int, BigInt> coeff_;
};

}  // namespace propp
