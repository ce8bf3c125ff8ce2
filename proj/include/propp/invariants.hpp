#pragma once

#include <vector>

#include "propp/braid.hpp"
#include "propp/laurent.hpp"

namespace propp {

/// Dense square matrix over Z[t, t^-1].
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int n) : n_(n), cells_(n * n) {}
  static LaurentMatrix identity(int n);

  int size() const { return n_; }
  LaurentPolynomial& at(int i, int j) { return cells_[i * n_ + j]; }
  const LaurentPolynomial& at(int i, int j) const { return cells_[i * n_ + j]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }

  /// Fraction-free Bareiss elimination; exact over the Laurent ring.
  LaurentPolynomial determinant() const;

 private:
  int n_;
  std::vector<LaurentPolynomial> cells_;
};

/// Reduced Burau image of a standard braid word: (n-1)x(n-1), multiplicative,
/// identity on the empty word.
LaurentMatrix burau_reduced(const BraidWord& standard_word);

/// Alexander polynomial of the knot closure via
/// det(burau_reduced(w) - I) * (1-t) / (1-t^n), normalized so that
/// Delta(t) = Delta(1/t) and Delta(1) = 1. Band words are converted first.
LaurentPolynomial alexander(const BraidWord& w);

/// Independent route: Seifert matrix V of the Seifert-algorithm surface of
/// the closed braid diagram, Delta = det(V - t V^T) normalized as above.
LaurentPolynomial alexander_seifert_oracle(const BraidWord& standard_word);

/// Integer Seifert matrix of the closed-braid Seifert surface (exposed for
/// tests; rows/cols indexed by the surface's homology basis).
std::vector<std::vector<int>> seifert_matrix(const BraidWord& standard_word);

/// Normalization step shared by both Alexander routes.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& raw);

/// v2(K) = Delta''(1)/2, the order-2 Vassiliev invariant.
BigInt casson_v2(const BraidWord& w);

/// Linking number of a 2-component closure: half the signed count of
/// crossings between strands on different components.
Rational linking_number(const BraidWord& w);

/// A braid template with a marked insertion slot; member(n) inserts |n|
/// letters of the marked generator with sign(n).
struct TwistFamily {
  BraidWord template_word;
  std::size_t insert_pos = 0;
  uint8_t generator = 0;

  TwistFamily(BraidWord t, std::size_t pos, uint8_t gen)
      : template_word(std::move(t)), insert_pos(pos), generator(gen) {}
};

BraidWord twist_member(const TwistFamily& f, int n);

struct QuadraticFit {
  Rational a2, a1, a0;
  Rational eval(const Rational& x) const { return (a2 * x + a1) * x + a0; }
};

/// Exact quadratic through v2 of the family members at >= 3 odd samples;
/// every further sample is cross-checked against the fit.
QuadraticFit twist_family_quadratic(const TwistFamily& f,
                                    const std::vector<int>& odd_samples);

/// Rational roots of the quadratic (empty when none exist).
std::vector<Rational> quadratic_rational_roots(const QuadraticFit& q);

}  // namespace propp
