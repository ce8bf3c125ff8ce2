#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "propp/braid.hpp"
#include "propp/laurent.hpp"

namespace propp {

struct BudgetExceeded : std::runtime_error {
  int best_length_so_far;
  explicit BudgetExceeded(int best, const std::string& msg)
      : std::runtime_error(msg), best_length_so_far(best) {}
};

enum class RuleFamily : uint8_t { RelationPair, DeltaCommutation };

/// A directed length-preserving rewrite on an adjacent letter pair; both
/// sides represent the same element of B3.
struct RewriteRule {
  std::array<Letter, 2> lhs;
  std::array<Letter, 2> rhs;
  RuleFamily family;
};

/// All directed 2-letter rewrites of the presentation: the six mixed-sign
/// relations (closed under taking inverses) and the delta-spelling swaps
/// a23 a12 = a13 a23 = a12 a13 together with their inverse spellings, each
/// usable in both directions.
const std::vector<RewriteRule>& relation_rules();

/// Conjugation by delta permutes the band generators: a12 -> a13 -> a23 -> a12.
/// Applies that relabeling `power` times (negative powers allowed).
Letter tau(const Letter& l, int power);
BraidWord tau(const BraidWord& w, int power);

/// The three positive spellings of delta, as letter pairs.
const std::array<std::array<Letter, 2>, 3>& delta_spellings();

/// beta = P N with P positive, N negative, |P|+|N| <= |beta|, equal as a
/// group element.
std::pair<BraidWord, BraidWord> pn_form(const BraidWord& band_word);

/// beta = delta^k P N with P, N free of delta spellings.
struct DeltaForm {
  int k = 0;
  BraidWord P;
  BraidWord N;

  DeltaForm() : P(3, Alphabet::Band), N(3, Alphabet::Band) {}
  /// delta^k spelled as (a23 a12)^k, then P, then N.
  BraidWord reassembled() const;
};

DeltaForm delta_form(const BraidWord& band_word);

struct SearchOptions {
  std::size_t max_states = 2'000'000;
  int max_word_length = 16;
};

/// Minimal band length of the conjugacy class plus Xu's surface data:
/// -chi(S) = l - 3, and for knot closures genus = (l-2)/2.
struct GenusReport {
  int minimal_length = 0;
  int neg_euler = 0;
  std::optional<Rational> genus;  // knots only
  BraidWord witness;
  int components = 0;

  GenusReport() : witness(3, Alphabet::Band) {}
};

struct ConjugacySearch {
  GenusReport report;
  /// Every visited word of minimal length (canonical rotations), sorted.
  std::vector<BraidWord> plateau;
};

/// Breadth-first closure of the conjugacy class under free reduction,
/// relation rewrites and cyclic permutation; never increases length.
ConjugacySearch conjugacy_search(const BraidWord& band_word,
                                 const SearchOptions& opts = {});

GenusReport conjugacy_min(const BraidWord& band_word,
                          const SearchOptions& opts = {});

bool is_min_conjugacy_rep(const BraidWord& band_word,
                          const SearchOptions& opts = {});

/// True iff the rewrite closure of `from` (rules + free reduction, no
/// rotations) reaches `to`; both words then represent the same element.
bool words_equal_by_rewriting(const BraidWord& from, const BraidWord& to,
                              const SearchOptions& opts = {});

/// Canonical representative of the cyclic word (lexicographically least
/// rotation); used for deduplication and reproducible tie-breaks.
BraidWord canonical_rotation(const BraidWord& band_word);

}  // namespace propp
