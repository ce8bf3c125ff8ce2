#include "propp/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace propp {

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::one();
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  LaurentMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const LaurentPolynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + a * o.at(k, j);
      }
    }
  return out;
}

LaurentPolynomial LaurentMatrix::determinant() const {
  if (n_ == 0) return LaurentPolynomial::one();
  LaurentMatrix m = *this;
  LaurentPolynomial prev = LaurentPolynomial::one();
  int sign = 1;
  for (int k = 0; k + 1 < n_; ++k) {
    if (m.at(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n_; ++i)
        if (!m.at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return LaurentPolynomial::zero();
      for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j))
                         .exact_div(prev);
      m.at(i, k) = LaurentPolynomial::zero();
    }
    prev = m.at(k, k);
  }
  LaurentPolynomial det = m.at(n_ - 1, n_ - 1);
  return sign < 0 ? -det : det;
}

LaurentMatrix burau_reduced(const BraidWord& standard_word) {
  if (standard_word.alphabet() != Alphabet::Standard)
    throw AlphabetError("burau_reduced needs a standard word (convert band words first)");
  const int n = standard_word.strands();
  const int dim = n - 1;
  LaurentMatrix acc = LaurentMatrix::identity(dim);
  const LaurentPolynomial t = LaurentPolynomial::t();
  const LaurentPolynomial tinv = LaurentPolynomial::monomial(1, -1);

  for (const Letter& l : standard_word.letters()) {
    LaurentMatrix m = LaurentMatrix::identity(dim);
    const int c = l.generator;  // affected column
    if (l.sign > 0) {
      if (c - 1 >= 0) m.at(c - 1, c) = t;
      m.at(c, c) = -t;
      if (c + 1 < dim) m.at(c + 1, c) = LaurentPolynomial::one();
    } else {
      if (c - 1 >= 0) m.at(c - 1, c) = LaurentPolynomial::one();
      m.at(c, c) = -tinv;
      if (c + 1 < dim) m.at(c + 1, c) = tinv;
    }
    acc = acc * m;
  }
  return acc;
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& raw) {
  if (raw.is_zero())
    throw ArithmeticError("Alexander normalization: zero polynomial");
  const int lo = raw.min_exp(), hi = raw.max_exp();
  if ((lo + hi) % 2 != 0)
    throw ArithmeticError("Alexander normalization: odd exponent span");
  LaurentPolynomial s = raw.shifted(-(lo + hi) / 2);
  if (s != s.inverted_variable())
    throw ArithmeticError("Alexander normalization: not symmetric");
  const BigInt at_one = s.evaluate_at_one();
  if (at_one == 1) return s;
  if (at_one == -1) return -s;
  throw ArithmeticError("Alexander normalization: Delta(1) != +-1");
}

LaurentPolynomial alexander(const BraidWord& w) {
  const BraidWord std_word =
      w.alphabet() == Alphabet::Band ? w.band_to_standard() : w;
  if (std_word.component_count() != 1)
    throw NotAKnotError("Alexander polynomial route requires a knot closure");
  const int n = std_word.strands();
  LaurentMatrix b = burau_reduced(std_word);
  for (int i = 0; i < b.size(); ++i)
    b.at(i, i) = b.at(i, i) - LaurentPolynomial::one();
  const LaurentPolynomial det = b.determinant();
  const LaurentPolynomial one_minus_t =
      LaurentPolynomial::one() - LaurentPolynomial::t();
  const LaurentPolynomial one_minus_tn =
      LaurentPolynomial::one() - LaurentPolynomial::monomial(1, n);
  return normalize_alexander((det * one_minus_t).exact_div(one_minus_tn));
}

namespace {

struct ColumnData {
  std::vector<int> positions;
  std::vector<int> signs;
};

// Interleaving convention for cycles in adjacent columns, pinned against the
// Burau route on torus and twist knots (see tests).
struct Interleave {
  int left_right;  // V[left cycle][right cycle]
  int right_left;  // V[right cycle][left cycle]
};
constexpr Interleave kPattern1{0, 1};   // p < q < p' < q'
constexpr Interleave kPattern2{0, -1};  // q < p < q' < p'

}  // namespace

std::vector<std::vector<int>> seifert_matrix(const BraidWord& standard_word) {
  if (standard_word.alphabet() != Alphabet::Standard)
    throw AlphabetError("seifert_matrix needs a standard word");
  if (standard_word.component_count() != 1)
    throw NotAKnotError("Seifert-matrix route requires a knot closure");

  const int cols = standard_word.strands() - 1;
  std::vector<ColumnData> columns(cols);
  for (std::size_t p = 0; p < standard_word.size(); ++p) {
    const Letter& l = standard_word.letter(p);
    columns[l.generator].positions.push_back(static_cast<int>(p));
    columns[l.generator].signs.push_back(l.sign);
  }
  for (const ColumnData& c : columns)
    if (c.positions.empty())
      throw ArithmeticError("internal: knot closure with an unused column");

  // One homology generator per consecutive same-column band pair.
  struct Cycle {
    int col, lo, hi, sign_lo, sign_hi;
  };
  std::vector<Cycle> cycles;
  std::vector<std::vector<int>> cycle_ids(cols);
  for (int c = 0; c < cols; ++c) {
    for (std::size_t k = 0; k + 1 < columns[c].positions.size(); ++k) {
      cycle_ids[c].push_back(static_cast<int>(cycles.size()));
      cycles.push_back({c, columns[c].positions[k], columns[c].positions[k + 1],
                        columns[c].signs[k], columns[c].signs[k + 1]});
    }
  }

  const int g = static_cast<int>(cycles.size());
  std::vector<std::vector<int>> v(g, std::vector<int>(g, 0));
  for (int a = 0; a < g; ++a)
    v[a][a] = -(cycles[a].sign_lo + cycles[a].sign_hi) / 2;

  for (int c = 0; c < cols; ++c) {
    const auto& ids = cycle_ids[c];
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      // Adjacent cycles share the middle band; epsilon is its sign.
      const int eps = cycles[ids[k + 1]].sign_lo;
      v[ids[k]][ids[k + 1]] = (eps - 1) / 2;
      v[ids[k + 1]][ids[k]] = (eps + 1) / 2;
    }
  }

  for (int c = 0; c + 1 < cols; ++c) {
    for (int a : cycle_ids[c]) {
      for (int b : cycle_ids[c + 1]) {
        const Cycle& ca = cycles[a];
        const Cycle& cb = cycles[b];
        if (ca.lo < cb.lo && cb.lo < ca.hi && ca.hi < cb.hi) {
          v[a][b] += kPattern1.left_right;
          v[b][a] += kPattern1.right_left;
        } else if (cb.lo < ca.lo && ca.lo < cb.hi && cb.hi < ca.hi) {
          v[a][b] += kPattern2.left_right;
          v[b][a] += kPattern2.right_left;
        }
      }
    }
  }
  return v;
}

LaurentPolynomial alexander_seifert_oracle(const BraidWord& standard_word) {
  const auto v = seifert_matrix(standard_word);
  const int g = static_cast<int>(v.size());
  if (g == 0) return LaurentPolynomial::one();  // disk: unknot
  LaurentMatrix m(g);
  const LaurentPolynomial t = LaurentPolynomial::t();
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      m.at(i, j) = LaurentPolynomial::monomial(v[i][j], 0) -
                   t * LaurentPolynomial::monomial(v[j][i], 0);
  return normalize_alexander(m.determinant());
}

BigInt casson_v2(const BraidWord& w) {
  const LaurentPolynomial delta = alexander(w);
  const BigInt second = delta.derivative().derivative().evaluate_at_one();
  if (second % 2 != 0)
    throw ArithmeticError("internal: Delta''(1) is odd");
  return second / 2;
}

Rational linking_number(const BraidWord& w) {
  const BraidWord std_word =
      w.alphabet() == Alphabet::Band ? w.band_to_standard() : w;
  const Permutation perm = std_word.permutation();
  if (perm.cycle_count() != 2)
    throw std::invalid_argument("linking_number requires a 2-component closure");

  std::vector<int> component(std_word.strands());
  int comp_id = 0;
  for (const auto& cyc : perm.cycles()) {
    for (int s : cyc) component[s] = comp_id;
    ++comp_id;
  }

  std::vector<int> slot(std_word.strands());
  for (int i = 0; i < std_word.strands(); ++i) slot[i] = i;
  long long total = 0;
  for (const Letter& l : std_word.letters()) {
    const int i = l.generator;
    if (component[slot[i]] != component[slot[i + 1]]) total += l.sign;
    std::swap(slot[i], slot[i + 1]);
  }
  return Rational(total, 2);
}

BraidWord twist_member(const TwistFamily& f, int n) {
  if (n == 0) return f.template_word;
  std::vector<Letter> ins(static_cast<std::size_t>(n > 0 ? n : -n),
                          Letter(f.generator, n > 0 ? 1 : -1));
  return f.template_word.with_inserted(f.insert_pos, ins);
}

QuadraticFit twist_family_quadratic(const TwistFamily& f,
                                    const std::vector<int>& odd_samples) {
  if (odd_samples.size() < 3)
    throw std::invalid_argument("need at least 3 odd samples");
  for (int n : odd_samples)
    if (n % 2 == 0)
      throw std::invalid_argument("samples must be odd half-twist counts");

  std::vector<std::pair<Rational, Rational>> pts;
  for (int n : odd_samples)
    pts.emplace_back(Rational(n), Rational(casson_v2(twist_member(f, n))));

  // Exact Lagrange quadratic through the first three samples.
  QuadraticFit fit{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const auto& [xi, yi] = pts[i];
    Rational denom = 1;
    // numerator (x - xj)(x - xk) expanded: x^2 - (xj+xk)x + xj*xk
    Rational sum_other = 0, prod_other = 1;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      denom *= xi - pts[j].first;
      sum_other += pts[j].first;
      prod_other *= pts[j].first;
    }
    const Rational w = yi / denom;
    fit.a2 += w;
    fit.a1 -= w * sum_other;
    fit.a0 += w * prod_other;
  }

  for (const auto& [x, y] : pts)
    if (fit.eval(x) != y)
      throw ArithmeticError(
          "sampled v2 values do not lie on a quadratic: family misuse");
  return fit;
}

std::vector<Rational> quadratic_rational_roots(const QuadraticFit& q) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  std::vector<Rational> roots;
  if (q.a2 == 0) {
    if (q.a1 != 0) roots.push_back(-q.a0 / q.a1);
    return roots;
  }
  const Rational disc = q.a1 * q.a1 - 4 * q.a2 * q.a0;
  if (disc < 0) return roots;
  const BigInt num = numerator(disc), den = denominator(disc);
  const BigInt rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return roots;
  const Rational root(rn, rd);
  roots.push_back((-q.a1 + root) / (2 * q.a2));
  if (root != 0) roots.push_back((-q.a1 - root) / (2 * q.a2));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace propp
