#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "propp/band_calculus.hpp"
#include "propp/braid.hpp"
#include "propp/invariants.hpp"
#include "propp/laurent.hpp"

namespace propp {

enum class KnotId : uint8_t { Trefoil, FiveTwo, OtherKnot, Link };

std::string knot_id_name(KnotId id);

/// One enumerated delta^k P N case of the finite 3-braid analysis.
struct CaseRow {
  BraidWord word;  // spelled delta^k then P then N
  int k = 0;
  BraidWord P;
  BraidWord N;
  int components = 0;
  int min_length = 0;
  /// Max Gabai-disk count over the length-preserving conjugates reached by
  /// the rewriting engine; triples supply their second disk only off the
  /// trefoil.
  int gabai_count = 0;
  KnotId identification = KnotId::Link;
  std::optional<LaurentPolynomial> alexander_poly;
  std::string note;

  CaseRow() : word(3, Alphabet::Band), P(3, Alphabet::Band), N(3, Alphabet::Band) {}
};

struct EnumerateOptions {
  int maxP = 4;
  int maxN = 4;
  /// Brute-force mode drops the seven-word conjugacy reduction and ranges
  /// over every delta-free positive P; used to confirm the reduction.
  bool brute_force = false;
  SearchOptions search;
};

/// The paper-fixed list of positive words a non-empty P can take, up to
/// conjugacy, for the reduced enumeration.
const std::vector<std::string>& seven_positive_words();

std::vector<CaseRow> enumerate_cases(const EnumerateOptions& opts = {});

struct Theorem4Verdict {
  bool ok = false;
  /// Identifications of knot rows with fewer than two Gabai disks, sorted.
  std::vector<std::string> exceptions;
  std::vector<CaseRow> violations;  // such rows outside {trefoil, 5_2}
};

Theorem4Verdict verify_theorem4(const std::vector<CaseRow>& rows);

/// The explicit word identities of the finite case analysis, as grammar
/// strings (lhs, rhs). The sixth is stated with its sign corrected; the
/// printed form differs from the left side in exponent sum.
const std::vector<std::pair<std::string, std::string>>& case_identities();

struct IdentityCheck {
  std::string lhs, rhs;
  bool confirmed = false;
};

std::vector<IdentityCheck> confirm_case_identities(
    const SearchOptions& opts = {});

/// The three words of the case analysis asserted to close to 3-component
/// links.
const std::vector<std::string>& listed_three_component_links();

/// Scharlemann-Thompson data for one positive crossing: -chi values of the
/// crossing change and the smoothing, via the minimal band length.
struct STTriple {
  BraidWord word;
  std::size_t position = 0;
  int neg_chi_plus = 0;
  int neg_chi_minus = 0;
  int neg_chi_zero = 0;
  bool ok = false;  // two of (x+, x-, x0+1) equal, third not larger

  STTriple() : word(3, Alphabet::Band) {}
};

STTriple st_triple_check(const BraidWord& band_word, std::size_t position,
                         const SearchOptions& opts = {});

struct STReport {
  long long words_checked = 0;
  long long triples_checked = 0;
  std::vector<STTriple> violations;
  bool ok() const { return violations.empty(); }
};

/// Every positive position of every minimal band word of length <= max_len.
STReport st_exhaustive_check(int max_len, const SearchOptions& opts = {});

/// Random minimal band words with lengths in [min_len, max_len].
STReport st_random_check(uint64_t seed, int count, int min_len, int max_len,
                         const SearchOptions& opts = {});

struct Theorem3Verdict {
  QuadraticFit fit{0, 0, 0};
  bool leading_is_one_eighth = false;
  bool holdout_ok = false;
  int zero_samples = 0;
  std::vector<Rational> rational_roots;
  bool ok = false;
};

Theorem3Verdict verify_theorem3(const TwistFamily& f,
                                const std::vector<int>& fit_samples,
                                const std::vector<int>& holdout_samples);

nlohmann::ordered_json case_rows_to_json(const std::vector<CaseRow>& rows);
std::string case_rows_to_csv(const std::vector<CaseRow>& rows);
nlohmann::ordered_json theorem4_to_json(const std::vector<CaseRow>& rows,
                                        const Theorem4Verdict& verdict,
                                        const std::vector<IdentityCheck>& ids);
nlohmann::ordered_json st_report_to_json(const STReport& rep);
nlohmann::ordered_json theorem3_to_json(const TwistFamily& f,
                                        const std::vector<int>& fit_samples,
                                        const std::vector<int>& holdouts,
                                        const Theorem3Verdict& v);

}  // namespace propp
