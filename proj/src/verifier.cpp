#include "propp/verifier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "propp/gabai.hpp"

namespace propp {

namespace {

const LaurentPolynomial& trefoil_delta() {
  static const LaurentPolynomial d{{1, 1}, {0, -1}, {-1, 1}};
  return d;
}

const LaurentPolynomial& five_two_delta() {
  static const LaurentPolynomial d{{1, 2}, {0, -3}, {-1, 2}};
  return d;
}

BraidWord band(const std::string& text) {
  return BraidWord::parse(text, 3, Alphabet::Band);
}

BraidWord spelled_delta_power(int k) {
  std::vector<Letter> ls;
  for (int i = 0; i < k; ++i) {
    ls.emplace_back(kA23, 1);
    ls.emplace_back(kA12, 1);
  }
  for (int i = 0; i > k; --i) {
    ls.emplace_back(kA12, -1);
    ls.emplace_back(kA23, -1);
  }
  return BraidWord(3, Alphabet::Band, std::move(ls));
}

/// All single-sign words of length 1..max_len avoiding the spellings of
/// delta^sign as subwords.
std::vector<BraidWord> delta_free_single_sign(int max_len, int sign) {
  std::vector<BraidWord> out;
  std::vector<Letter> cur;
  auto forbidden = [&](const Letter& a, const Letter& b) {
    for (const auto& sp : delta_spellings()) {
      if (sign > 0 && a == sp[0] && b == sp[1]) return true;
      if (sign < 0 && a == sp[1].inverse() && b == sp[0].inverse())
        return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!cur.empty()) out.emplace_back(3, Alphabet::Band, cur);
    if (remaining == 0) return;
    for (uint8_t g = 0; g <= kA13; ++g) {
      Letter next(g, sign);
      if (!cur.empty() && forbidden(cur.back(), next)) continue;
      cur.push_back(next);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_len);
  return out;
}

KnotId identify(const BraidWord& minimal_word, int components,
                const std::optional<LaurentPolynomial>& delta) {
  if (components != 1) return KnotId::Link;
  if (minimal_word.size() == 4 && delta) {
    if (*delta == trefoil_delta()) return KnotId::Trefoil;
    if (*delta == five_two_delta()) return KnotId::FiveTwo;
  }
  return KnotId::OtherKnot;
}

}  // namespace

std::string knot_id_name(KnotId id) {
  switch (id) {
    case KnotId::Trefoil: return "trefoil";
    case KnotId::FiveTwo: return "five-two";
    case KnotId::OtherKnot: return "other-knot";
    case KnotId::Link: return "link";
  }
  return "unknown";
}

const std::vector<std::string>& seven_positive_words() {
  static const std::vector<std::string> words = {
      "a12",         "a12^2",          "a12 a23",
      "a12^2 a23",   "a12 a23 a13",    "a12^2 a23 a13",
      "a12 a23 a13 a12",
  };
  return words;
}

std::vector<CaseRow> enumerate_cases(const EnumerateOptions& opts) {
  if (opts.maxP < 0 || opts.maxN < 0)
    throw std::invalid_argument("enumeration bounds must be non-negative");
  if (!opts.brute_force && (opts.maxP > 4 || opts.maxN > 4))
    throw std::invalid_argument(
        "the seven-word conjugacy reduction covers lengths <= 4 only; use "
        "brute force for larger bounds");

  const BraidWord empty(3, Alphabet::Band);

  std::vector<BraidWord> p_words{empty};
  if (opts.brute_force) {
    for (const BraidWord& w : delta_free_single_sign(opts.maxP, +1))
      p_words.push_back(w);
  } else {
    for (const std::string& s : seven_positive_words()) {
      BraidWord w = band(s);
      if (static_cast<int>(w.size()) <= opts.maxP) p_words.push_back(w);
    }
  }

  std::vector<BraidWord> n_words_full{empty};
  for (const BraidWord& w : delta_free_single_sign(opts.maxN, -1))
    n_words_full.push_back(w);

  // The negative side mirrors the seven-word reduction via the word inverse
  // (reverse + sign flip), which carries delta-free words to
  // delta^-1-free words; a letterwise sign flip does not.
  std::vector<BraidWord> n_words_mirrored_seven{empty};
  if (opts.brute_force) {
    n_words_mirrored_seven = n_words_full;
  } else {
    for (const std::string& s : seven_positive_words()) {
      BraidWord w = band(s).inverse();
      if (static_cast<int>(w.size()) <= opts.maxN)
        n_words_mirrored_seven.push_back(w);
    }
  }

  std::vector<CaseRow> rows;
  std::set<std::string> seen;

  auto consider = [&](int k, const BraidWord& p, const BraidWord& n) {
    const BraidWord word = spelled_delta_power(k) + p + n;
    if (word.size() < 4) return;
    if (word != word.free_reduce()) return;
    const std::string key = word.format();
    if (!seen.insert(key).second) return;

    const ConjugacySearch search = conjugacy_search(word, opts.search);
    if (search.report.minimal_length != static_cast<int>(word.size())) return;

    CaseRow row;
    row.word = word;
    row.k = k;
    row.P = p;
    row.N = n;
    row.components = search.report.components;
    row.min_length = search.report.minimal_length;
    if (row.components == 1) row.alexander_poly = alexander(word);
    row.identification = identify(word, row.components, row.alexander_poly);

    const bool trefoil = row.identification == KnotId::Trefoil;
    int best = 0;
    for (const BraidWord& pw : search.plateau)
      best = std::max(best, census_band_word(pw).gabai_disk_count(trefoil));
    row.gabai_count = best;

    if (row.identification == KnotId::FiveTwo)
      row.note = "the finite case analysis identifies this row as the knot 5_2";
    else if (row.identification == KnotId::Trefoil)
      row.note = "trefoil row: excluded by hypothesis from the two-disk theorem";
    else if (row.components == 3)
      row.note = "closes to a 3-component link";
    rows.push_back(std::move(row));
  };

  // k = 0: P N with the usual normalizations; P empty ranges over the
  // mirrored seven words.
  for (const BraidWord& p : p_words) {
    if (p.empty()) continue;
    for (const BraidWord& n : n_words_full) consider(0, p, n);
  }
  for (const BraidWord& n : n_words_mirrored_seven)
    if (!n.empty()) consider(0, empty, n);

  // k > 0 forces N empty, k < 0 forces P empty; |k| = 2 rows are the
  // two-disk shortcut regime.
  for (int k : {1, 2}) {
    for (const BraidWord& p : p_words) consider(k, p, empty);
  }
  for (int k : {-1, -2}) {
    for (const BraidWord& n : n_words_mirrored_seven) consider(k, empty, n);
  }

  std::sort(rows.begin(), rows.end(), [](const CaseRow& a, const CaseRow& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.k != b.k) return a.k < b.k;
    return a.word.format() < b.word.format();
  });
  return rows;
}

Theorem4Verdict verify_theorem4(const std::vector<CaseRow>& rows) {
  Theorem4Verdict v;
  std::set<std::string> exceptions;
  v.ok = true;
  for (const CaseRow& row : rows) {
    if (row.identification == KnotId::Link) continue;
    if (row.gabai_count >= 2) continue;
    exceptions.insert(knot_id_name(row.identification));
    if (row.identification != KnotId::Trefoil &&
        row.identification != KnotId::FiveTwo) {
      v.ok = false;
      v.violations.push_back(row);
    }
  }
  v.exceptions.assign(exceptions.begin(), exceptions.end());
  return v;
}

const std::vector<std::pair<std::string, std::string>>& case_identities() {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"a12^2 a23 a13^-1", "a12^2 a13^-1 a12"},
      {"a12^2 a13^-1 a23^-1", "a12 a23^-1 a12 a23^-1"},
      {"a12^2 a23 a13 a23^-1 a12^-1", "a12^2 a23 a12^-1 a13 a12^-1"},
      {"a12^2 a23 a13 a12^-1 a13^-1", "a12^2 a23 a12^-1 a23 a13^-1"},
      {"a12 a23 a13 a12 a13^-1 a23^-1", "a12 a23 a13 a23^-1 a12 a23^-1"},
      // Corrected sign on the final letter; the printed right side has a
      // different exponent sum from the left side.
      {"a12^2 a23 a12^-1 a13^-1 a23^-1", "a12^2 a13^-1 a23 a13^-1 a23^-1"},
      {"a12 a23 a13 a12^-1 a13^-1 a23^-1", "a12 a13^-1 a23^2 a13^-1 a23^-1"},
      {"a12 a23 a13 a23^-1 a12^-1 a13^-1", "a12 a23 a12^-2 a23 a13^-1"},
  };
  return ids;
}

std::vector<IdentityCheck> confirm_case_identities(const SearchOptions& opts) {
  std::vector<IdentityCheck> out;
  for (const auto& [lhs, rhs] : case_identities()) {
    IdentityCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.confirmed = words_equal_by_rewriting(band(lhs), band(rhs), opts);
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<std::string>& listed_three_component_links() {
  static const std::vector<std::string> links = {
      "a12 a23 a13 a23^-1",
      "a12 a23 a12^-1 a13^-1",
      "a12 a23 a13^-1 a23^-1",
  };
  return links;
}

namespace {

/// Conjugacy-minimal length with memoization on the canonical rotation.
class MinLengthCache {
 public:
  explicit MinLengthCache(const SearchOptions& opts) : opts_(opts) {}

  int min_length(const BraidWord& w) {
    const std::string key = canonical_rotation(w).format();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const int value = conjugacy_min(w, opts_).minimal_length;
    cache_.emplace(key, value);
    return value;
  }

 private:
  SearchOptions opts_;
  std::map<std::string, int> cache_;
};

STTriple st_triple_with_cache(const BraidWord& w, std::size_t position,
                              MinLengthCache& cache) {
  if (position >= w.size() || w.letter(position).sign != 1)
    throw std::invalid_argument("st_triple_check needs a positive letter");
  STTriple t;
  t.word = w;
  t.position = position;
  t.neg_chi_plus = cache.min_length(w) - 3;
  t.neg_chi_minus = cache.min_length(w.with_sign_flipped(position)) - 3;
  t.neg_chi_zero = cache.min_length(w.without_letter(position)) - 3;
  const int a = t.neg_chi_plus;
  const int b = t.neg_chi_minus;
  const int c = t.neg_chi_zero + 1;
  t.ok = (a == b && c <= a) || (a == c && b <= a) || (b == c && a <= b);
  return t;
}

}  // namespace

STTriple st_triple_check(const BraidWord& band_word, std::size_t position,
                         const SearchOptions& opts) {
  MinLengthCache cache(opts);
  return st_triple_with_cache(band_word, position, cache);
}

STReport st_exhaustive_check(int max_len, const SearchOptions& opts) {
  STReport rep;
  MinLengthCache cache(opts);

  std::vector<Letter> cur;
  auto visit = [&](auto&& self) -> void {
    BraidWord w(3, Alphabet::Band, cur);
    if (cache.min_length(w) == static_cast<int>(w.size())) {
      ++rep.words_checked;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.letter(i).sign != 1) continue;
        STTriple t = st_triple_with_cache(w, i, cache);
        ++rep.triples_checked;
        if (!t.ok) rep.violations.push_back(std::move(t));
      }
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (uint8_t g = 0; g <= kA13; ++g)
      for (int s : {+1, -1}) {
        cur.emplace_back(g, s);
        self(self);
        cur.pop_back();
      }
  };
  visit(visit);
  return rep;
}

STReport st_random_check(uint64_t seed, int count, int min_len, int max_len,
                         const SearchOptions& opts) {
  STReport rep;
  MinLengthCache cache(opts);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> gen_dist(0, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  while (rep.words_checked < count) {
    const int len = len_dist(rng);
    std::vector<Letter> ls;
    ls.reserve(len);
    for (int i = 0; i < len; ++i)
      ls.emplace_back(static_cast<uint8_t>(gen_dist(rng)),
                      sign_dist(rng) == 0 ? 1 : -1);
    BraidWord w(3, Alphabet::Band, std::move(ls));
    if (cache.min_length(w) != static_cast<int>(w.size())) continue;
    bool has_positive = false;
    for (const Letter& l : w.letters()) has_positive |= l.sign == 1;
    if (!has_positive) continue;
    ++rep.words_checked;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.letter(i).sign != 1) continue;
      STTriple t = st_triple_with_cache(w, i, cache);
      ++rep.triples_checked;
      if (!t.ok) rep.violations.push_back(std::move(t));
    }
  }
  return rep;
}

Theorem3Verdict verify_theorem3(const TwistFamily& f,
                                const std::vector<int>& fit_samples,
                                const std::vector<int>& holdout_samples) {
  Theorem3Verdict v;
  v.fit = twist_family_quadratic(f, fit_samples);
  v.leading_is_one_eighth = v.fit.a2 == Rational(1, 8);
  v.holdout_ok = true;
  for (int n : holdout_samples) {
    const Rational expect = v.fit.eval(Rational(n));
    if (Rational(casson_v2(twist_member(f, n))) != expect) {
      v.holdout_ok = false;
      break;
    }
  }
  for (int n : fit_samples)
    if (casson_v2(twist_member(f, n)) == 0) ++v.zero_samples;
  v.rational_roots = quadratic_rational_roots(v.fit);
  v.ok = v.leading_is_one_eighth && v.holdout_ok && v.zero_samples <= 2 &&
         v.rational_roots.size() <= 2;
  return v;
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::ordered_json row_to_json(const CaseRow& row) {
  nlohmann::ordered_json j;
  j["word"] = row.word.format();
  j["k"] = row.k;
  j["p"] = row.P.format();
  j["n"] = row.N.format();
  j["length"] = row.word.size();
  j["components"] = row.components;
  j["min_length"] = row.min_length;
  j["gabai_count"] = row.gabai_count;
  j["identification"] = knot_id_name(row.identification);
  if (row.alexander_poly) j["alexander"] = row.alexander_poly->to_string();
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

}  // namespace

nlohmann::ordered_json case_rows_to_json(const std::vector<CaseRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CaseRow& row : rows) arr.push_back(row_to_json(row));
  return arr;
}

std::string case_rows_to_csv(const std::vector<CaseRow>& rows) {
  std::ostringstream out;
  out << "word,k,p,n,length,components,min_length,gabai_count,identification\n";
  for (const CaseRow& r : rows)
    out << '"' << r.word.format() << "\"," << r.k << ",\"" << r.P.format()
        << "\",\"" << r.N.format() << "\"," << r.word.size() << ','
        << r.components << ',' << r.min_length << ',' << r.gabai_count << ','
        << knot_id_name(r.identification) << '\n';
  return out.str();
}

nlohmann::ordered_json theorem4_to_json(const std::vector<CaseRow>& rows,
                                        const Theorem4Verdict& verdict,
                                        const std::vector<IdentityCheck>& ids) {
  nlohmann::ordered_json j;
  j["rows"] = case_rows_to_json(rows);
  j["row_count"] = rows.size();
  j["verdict"] = verdict.ok;
  j["exceptions"] = verdict.exceptions;
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const CaseRow& r : verdict.violations) viol.push_back(row_to_json(r));
  j["violations"] = viol;
  nlohmann::ordered_json idj = nlohmann::ordered_json::array();
  for (const IdentityCheck& c : ids) {
    nlohmann::ordered_json e;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["confirmed"] = c.confirmed;
    idj.push_back(e);
  }
  j["identities"] = idj;
  return j;
}

nlohmann::ordered_json st_report_to_json(const STReport& rep) {
  nlohmann::ordered_json j;
  j["words_checked"] = rep.words_checked;
  j["triples_checked"] = rep.triples_checked;
  j["verdict"] = rep.ok();
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const STTriple& t : rep.violations) {
    nlohmann::ordered_json e;
    e["word"] = t.word.format();
    e["position"] = t.position;
    e["neg_chi"] = {t.neg_chi_plus, t.neg_chi_minus, t.neg_chi_zero};
    viol.push_back(e);
  }
  j["violations"] = viol;
  return j;
}

nlohmann::ordered_json theorem3_to_json(const TwistFamily& f,
                                        const std::vector<int>& fit_samples,
                                        const std::vector<int>& holdouts,
                                        const Theorem3Verdict& v) {
  nlohmann::ordered_json j;
  j["template"] = f.template_word.format();
  j["strands"] = f.template_word.strands();
  j["insert_position"] = f.insert_pos;
  j["generator"] =
      BraidWord::generator_name(f.template_word.alphabet(), f.generator);
  j["fit_samples"] = fit_samples;
  j["holdout_samples"] = holdouts;
  j["fit"] = {{"a2", rational_string(v.fit.a2)},
              {"a1", rational_string(v.fit.a1)},
              {"a0", rational_string(v.fit.a0)}};
  j["leading_is_one_eighth"] = v.leading_is_one_eighth;
  j["holdout_ok"] = v.holdout_ok;
  j["zero_samples"] = v.zero_samples;
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const Rational& r : v.rational_roots) roots.push_back(rational_string(r));
  j["rational_roots"] = roots;
  j["verdict"] = v.ok;
  return j;
}

}  // namespace propp
