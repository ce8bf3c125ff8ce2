#include "propp/band_calculus.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace propp {

namespace {

using Code = uint8_t;  // generator + (sign<0 ? 3 : 0), in [0,6)

inline Code code_of(const Letter& l) {
  return static_cast<Code>(l.generator + (l.sign < 0 ? 3 : 0));
}

inline Letter letter_of(Code c) {
  return Letter(static_cast<uint8_t>(c % 3), c < 3 ? 1 : -1);
}

inline Code code_inverse(Code c) {
  return static_cast<Code>(c < 3 ? c + 3 : c - 3);
}

constexpr std::size_t kMaxEncodedLength = 21;  // 3 bits per letter + sentinel

uint64_t pack(const std::vector<Code>& w) {
  uint64_t key = 1;
  for (std::size_t i = w.size(); i-- > 0;) key = (key << 3) | w[i];
  return key;
}

std::vector<Code> unpack(uint64_t key) {
  std::vector<Code> w;
  while (key != 1) {
    w.push_back(static_cast<Code>(key & 7));
    key >>= 3;
  }
  return w;
}

inline std::size_t packed_length(uint64_t key) {
  std::size_t n = 0;
  while (key != 1) {
    key >>= 3;
    ++n;
  }
  return n;
}

std::vector<Code> codes_of(const BraidWord& w) {
  std::vector<Code> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back(code_of(l));
  return out;
}

BraidWord word_of(const std::vector<Code>& codes) {
  std::vector<Letter> ls;
  ls.reserve(codes.size());
  for (Code c : codes) ls.push_back(letter_of(c));
  return BraidWord(3, Alphabet::Band, std::move(ls));
}

void require_band(const BraidWord& w) {
  if (w.alphabet() != Alphabet::Band)
    throw AlphabetError("operation requires a band word");
}

// Directed rule lookup keyed by the adjacent code pair.
struct RuleTable {
  std::vector<std::pair<Code, Code>> by_pair[36];

  void add(Code a, Code b, Code c, Code d) {
    by_pair[a * 6 + b].emplace_back(c, d);
  }
  const std::vector<std::pair<Code, Code>>& find(Code a, Code b) const {
    return by_pair[a * 6 + b];
  }
};

const RuleTable& rule_table() {
  static const RuleTable table = [] {
    RuleTable t;
    for (const RewriteRule& r : relation_rules())
      t.add(code_of(r.lhs[0]), code_of(r.lhs[1]), code_of(r.rhs[0]),
            code_of(r.rhs[1]));
    return t;
  }();
  return table;
}

// Removes adjacent inverse pairs, including across the cyclic wrap.
void cyclic_free_reduce(std::vector<Code>& w) {
  bool changed = true;
  while (changed && w.size() >= 2) {
    changed = false;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      if (i != j && w[j] == code_inverse(w[i])) {
        if (j > i) {
          w.erase(w.begin() + j);
          w.erase(w.begin() + i);
        } else {  // wrap pair (last, first)
          w.erase(w.begin() + i);
          w.erase(w.begin());
        }
        changed = true;
        break;
      }
    }
  }
}

void linear_free_reduce(std::vector<Code>& w) {
  std::vector<Code> stack;
  stack.reserve(w.size());
  for (Code c : w) {
    if (!stack.empty() && stack.back() == code_inverse(c))
      stack.pop_back();
    else
      stack.push_back(c);
  }
  w = std::move(stack);
}

std::vector<Code> least_rotation(const std::vector<Code>& w) {
  if (w.size() < 2) return w;
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Code a = w[(r + i) % n];
      const Code b = w[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<Code> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(best + i) % n];
  return out;
}

}  // namespace

const std::array<std::array<Letter, 2>, 3>& delta_spellings() {
  static const std::array<std::array<Letter, 2>, 3> spellings = {{
      {Letter(kA23, 1), Letter(kA12, 1)},
      {Letter(kA13, 1), Letter(kA23, 1)},
      {Letter(kA12, 1), Letter(kA13, 1)},
  }};
  return spellings;
}

const std::vector<RewriteRule>& relation_rules() {
  static const std::vector<RewriteRule> rules = [] {
    std::vector<RewriteRule> out;
    auto both_directions = [&out](Letter a, Letter b, Letter c, Letter d,
                                  RuleFamily fam) {
      out.push_back({{a, b}, {c, d}, fam});
      out.push_back({{c, d}, {a, b}, fam});
    };
    const Letter A12(kA12, 1), A23(kA23, 1), A13(kA13, 1);
    const Letter a12(kA12, -1), a23(kA23, -1), a13(kA13, -1);

    // The six relations of the presentation; the set is closed under
    // taking inverses of both sides.
    both_directions(A12, a23, a23, A13, RuleFamily::RelationPair);
    both_directions(A12, a13, a23, A12, RuleFamily::RelationPair);
    both_directions(A23, a12, a13, A23, RuleFamily::RelationPair);
    both_directions(A23, a13, a13, A12, RuleFamily::RelationPair);
    both_directions(A13, a12, a12, A23, RuleFamily::RelationPair);
    both_directions(A13, a23, a12, A13, RuleFamily::RelationPair);

    // delta = a23 a12 = a13 a23 = a12 a13, and the inverse spellings;
    // these carry the commutations delta a = tau(a) delta.
    const auto& sp = delta_spellings();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        both_directions(sp[i][0], sp[i][1], sp[j][0], sp[j][1],
                        RuleFamily::DeltaCommutation);
        both_directions(sp[i][1].inverse(), sp[i][0].inverse(),
                        sp[j][1].inverse(), sp[j][0].inverse(),
                        RuleFamily::DeltaCommutation);
      }
    return out;
  }();
  return rules;
}

Letter tau(const Letter& l, int power) {
  // delta a12 delta^-1 = a13, delta a13 delta^-1 = a23, delta a23 delta^-1 = a12.
  static constexpr uint8_t fwd[3] = {kA13, kA12, kA23};  // indexed by generator
  int p = ((power % 3) + 3) % 3;
  Letter out = l;
  for (int i = 0; i < p; ++i) out.generator = fwd[out.generator];
  return out;
}

BraidWord tau(const BraidWord& w, int power) {
  require_band(w);
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l = tau(l, power);
  return BraidWord(3, Alphabet::Band, std::move(ls));
}

std::pair<BraidWord, BraidWord> pn_form(const BraidWord& band_word) {
  require_band(band_word);
  std::vector<Code> w = codes_of(band_word);
  linear_free_reduce(w);

  // Eliminate every negative-positive adjacency: same generator cancels,
  // otherwise exactly one relation swaps the pair. Each step reduces
  // (length, inversions) lexicographically.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] >= 3 && w[i + 1] < 3) {
        if (w[i] == code_inverse(w[i + 1])) {
          w.erase(w.begin() + i, w.begin() + i + 2);
        } else {
          const auto& repl = rule_table().find(w[i], w[i + 1]);
          w[i] = repl.front().first;
          w[i + 1] = repl.front().second;
        }
        changed = true;
        break;
      }
    }
  }

  std::size_t split = 0;
  while (split < w.size() && w[split] < 3) ++split;
  std::vector<Code> p(w.begin(), w.begin() + split);
  std::vector<Code> n(w.begin() + split, w.end());
  return {word_of(p), word_of(n)};
}

namespace {

// Extracts spellings of delta^sign from a single-sign word, pulling each to
// the left end via the commutations x delta = delta tau^-1(x); returns the
// number extracted.
int extract_deltas(std::vector<Letter>& ls, int sign) {
  int count = 0;
  auto is_spelling = [&](const Letter& a, const Letter& b) {
    for (const auto& sp : delta_spellings()) {
      if (sign > 0 && a == sp[0] && b == sp[1]) return true;
      if (sign < 0 && a == sp[1].inverse() && b == sp[0].inverse()) return true;
    }
    return false;
  };
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (is_spelling(ls[i], ls[i + 1])) {
        for (std::size_t j = 0; j < i; ++j) ls[j] = tau(ls[j], -sign);
        ls.erase(ls.begin() + i, ls.begin() + i + 2);
        ++count;
        found = true;
        break;
      }
    }
  }
  return count;
}

}  // namespace

BraidWord DeltaForm::reassembled() const {
  std::vector<Letter> ls;
  const Letter A23(kA23, 1), A12(kA12, 1);
  for (int i = 0; i < k; ++i) {
    ls.push_back(A23);
    ls.push_back(A12);
  }
  for (int i = 0; i > k; --i) {
    ls.push_back(A12.inverse());
    ls.push_back(A23.inverse());
  }
  ls.insert(ls.end(), P.letters().begin(), P.letters().end());
  ls.insert(ls.end(), N.letters().begin(), N.letters().end());
  return BraidWord(3, Alphabet::Band, std::move(ls));
}

DeltaForm delta_form(const BraidWord& band_word) {
  auto [p_word, n_word] = pn_form(band_word);
  std::vector<Letter> p = p_word.letters();
  std::vector<Letter> n = n_word.letters();
  const int pos = extract_deltas(p, +1);
  const int neg = extract_deltas(n, -1);
  // delta^pos P' delta^-neg N' = delta^(pos-neg) tau^neg(P') N'.
  for (Letter& l : p) l = tau(l, neg);
  DeltaForm df;
  df.k = pos - neg;
  df.P = BraidWord(3, Alphabet::Band, std::move(p));
  df.N = BraidWord(3, Alphabet::Band, std::move(n));
  return df;
}

BraidWord canonical_rotation(const BraidWord& band_word) {
  require_band(band_word);
  return word_of(least_rotation(codes_of(band_word)));
}

ConjugacySearch conjugacy_search(const BraidWord& band_word,
                                 const SearchOptions& opts) {
  require_band(band_word);
  const std::size_t cap =
      std::min<std::size_t>(kMaxEncodedLength,
                            static_cast<std::size_t>(opts.max_word_length));
  if (band_word.size() > cap)
    throw BudgetExceeded(static_cast<int>(band_word.size()),
                         "band word exceeds the conjugacy search budget");

  std::vector<Code> start = codes_of(band_word);
  cyclic_free_reduce(start);
  start = least_rotation(start);

  std::unordered_set<uint64_t> visited;
  std::deque<uint64_t> queue;
  visited.reserve(1 << 14);
  const uint64_t start_key = pack(start);
  visited.insert(start_key);
  queue.push_back(start_key);
  std::size_t best = start.size();

  while (!queue.empty()) {
    const uint64_t key = queue.front();
    queue.pop_front();
    const std::vector<Code> w = unpack(key);
    best = std::min(best, w.size());
    const std::size_t n = w.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      for (const auto& [c, d] : rule_table().find(w[i], w[j])) {
        std::vector<Code> next = w;
        next[i] = c;
        next[j] = d;
        cyclic_free_reduce(next);
        const uint64_t nk = pack(least_rotation(next));
        if (visited.insert(nk).second) {
          if (visited.size() > opts.max_states)
            throw BudgetExceeded(static_cast<int>(best),
                                 "conjugacy search state budget exhausted");
          queue.push_back(nk);
        }
      }
    }
  }

  std::size_t min_len = start.size();
  for (uint64_t key : visited) min_len = std::min(min_len, packed_length(key));

  std::vector<std::vector<Code>> plateau_codes;
  for (uint64_t key : visited)
    if (packed_length(key) == min_len) plateau_codes.push_back(unpack(key));
  std::sort(plateau_codes.begin(), plateau_codes.end());

  ConjugacySearch out;
  out.plateau.reserve(plateau_codes.size());
  for (const auto& codes : plateau_codes) out.plateau.push_back(word_of(codes));

  GenusReport& rep = out.report;
  rep.minimal_length = static_cast<int>(min_len);
  rep.neg_euler = rep.minimal_length - 3;
  rep.witness = out.plateau.front();
  rep.components = rep.witness.component_count();
  if (rep.components == 1)
    rep.genus = Rational(rep.minimal_length - 2, 2);
  return out;
}

GenusReport conjugacy_min(const BraidWord& band_word,
                          const SearchOptions& opts) {
  return conjugacy_search(band_word, opts).report;
}

bool is_min_conjugacy_rep(const BraidWord& band_word,
                          const SearchOptions& opts) {
  return static_cast<int>(band_word.size()) ==
         conjugacy_min(band_word, opts).minimal_length;
}

bool words_equal_by_rewriting(const BraidWord& from, const BraidWord& to,
                              const SearchOptions& opts) {
  require_band(from);
  require_band(to);
  std::vector<Code> source = codes_of(from);
  std::vector<Code> target = codes_of(to);
  linear_free_reduce(source);
  linear_free_reduce(target);
  if (std::max(source.size(), target.size()) > kMaxEncodedLength)
    throw BudgetExceeded(static_cast<int>(source.size()),
                         "word too long for the rewrite-closure check");
  const uint64_t target_key = pack(target);

  std::unordered_set<uint64_t> visited;
  std::deque<uint64_t> queue;
  const uint64_t start_key = pack(source);
  if (start_key == target_key) return true;
  visited.insert(start_key);
  queue.push_back(start_key);

  while (!queue.empty()) {
    const std::vector<Code> w = unpack(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      for (const auto& [c, d] : rule_table().find(w[i], w[i + 1])) {
        std::vector<Code> next = w;
        next[i] = c;
        next[i + 1] = d;
        linear_free_reduce(next);
        const uint64_t nk = pack(next);
        if (nk == target_key) return true;
        if (visited.insert(nk).second) {
          if (visited.size() > opts.max_states)
            throw BudgetExceeded(static_cast<int>(w.size()),
                                 "rewrite-closure state budget exhausted");
          queue.push_back(nk);
        }
      }
    }
  }
  return false;
}

}  // namespace propp
