#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propp/band_calculus.hpp"
#include "propp/braid.hpp"

namespace propp {

enum class TwistKind : uint8_t { Double, Triple };
enum class SurfaceKind : uint8_t { BandB3, SeifertHomogeneous };

/// Witness for a double or triple twist: parallel same-sign bands on one
/// generator, recorded by letter position.
struct TwistEvidence {
  TwistKind kind = TwistKind::Double;
  int sign = 1;
  std::string generator;
  std::vector<int> positions;  // strictly increasing
};

struct TwistCensus {
  SurfaceKind surface = SurfaceKind::BandB3;
  std::vector<TwistEvidence> evidence;
  int pos_double = 0;
  int neg_double = 0;
  int pos_triple = 0;
  int neg_triple = 0;
  bool disjoint_pos_double_pairs = false;
  bool disjoint_neg_double_pairs = false;

  /// Number of Gabai disks the evidence supplies. A generator occurring
  /// twice with one sign gives one disk, three or more times two disks;
  /// a triple twist's second disk is withheld on the trefoil (the triple
  /// twist lemma excludes it).
  int gabai_disk_count(bool is_trefoil = false) const;

  /// True when two evidences of the given sign (0 = any sign) share no
  /// letter positions.
  bool has_disjoint_evidence_pair(int sign = 0) const;

  /// As above, restricted to double-twist evidence.
  bool has_disjoint_double_pair(int sign) const;
};

/// Census of a minimal band representative: per-(generator, sign) letter
/// counts with thresholds 2 (double twist), 3 (triple), 4 (two disjoint
/// double twists).
TwistCensus census_band_word(const BraidWord& band_word);

/// Census of a delta^k P N form; delta^k is spelled out as (a23 a12)^k, so
/// |k| >= 2 contributes two same-sign double twists and delta^{+-1} none.
/// The caller certifies minimality of the representative.
TwistCensus census_3braid(const DeltaForm& df, bool minimal);

/// Per-generator constant sign if every occurring generator has one sign.
std::optional<std::map<std::string, int>> is_homogeneous(
    const BraidWord& standard_word);

/// Census on the Seifert-algorithm surface of a homogeneous braid closure:
/// consecutive occurrences of a generator cobound double twists, three or
/// more give a triple. Twist regions of distinct columns are disjoint.
TwistCensus census_homogeneous(const BraidWord& standard_word);

}  // namespace propp
