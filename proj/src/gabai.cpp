#include "propp/gabai.hpp"

#include <algorithm>
#include <stdexcept>

namespace propp {

namespace {

bool positions_disjoint(const TwistEvidence& a, const TwistEvidence& b) {
  for (int p : a.positions)
    if (std::find(b.positions.begin(), b.positions.end(), p) !=
        b.positions.end())
      return false;
  return true;
}

void refresh_counts(TwistCensus& c) {
  c.pos_double = c.neg_double = c.pos_triple = c.neg_triple = 0;
  for (const TwistEvidence& e : c.evidence) {
    if (e.kind == TwistKind::Double)
      (e.sign > 0 ? c.pos_double : c.neg_double)++;
    else
      (e.sign > 0 ? c.pos_triple : c.neg_triple)++;
  }
}

}  // namespace

bool TwistCensus::has_disjoint_evidence_pair(int sign) const {
  for (std::size_t i = 0; i < evidence.size(); ++i)
    for (std::size_t j = i + 1; j < evidence.size(); ++j) {
      if (sign != 0 && (evidence[i].sign != sign || evidence[j].sign != sign))
        continue;
      if (positions_disjoint(evidence[i], evidence[j])) return true;
    }
  return false;
}

bool TwistCensus::has_disjoint_double_pair(int sign) const {
  for (std::size_t i = 0; i < evidence.size(); ++i)
    for (std::size_t j = i + 1; j < evidence.size(); ++j) {
      if (evidence[i].kind != TwistKind::Double ||
          evidence[j].kind != TwistKind::Double)
        continue;
      if (evidence[i].sign != sign || evidence[j].sign != sign) continue;
      if (positions_disjoint(evidence[i], evidence[j])) return true;
    }
  return false;
}

int TwistCensus::gabai_disk_count(bool is_trefoil) const {
  // Group evidence by (generator, sign).
  std::map<std::pair<std::string, int>, std::vector<const TwistEvidence*>> by;
  for (const TwistEvidence& e : evidence)
    by[{e.generator, e.sign}].push_back(&e);

  int disks = 0;
  for (const auto& [key, group] : by) {
    bool has_double = false, has_triple = false, has_disjoint = false;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (group[i]->kind == TwistKind::Double) has_double = true;
      if (group[i]->kind == TwistKind::Triple) has_triple = true;
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (group[i]->kind == TwistKind::Double &&
            group[j]->kind == TwistKind::Double &&
            positions_disjoint(*group[i], *group[j]))
          has_disjoint = true;
    }
    if (has_disjoint || (has_triple && !is_trefoil))
      disks += 2;
    else if (has_double || has_triple)
      disks += 1;
  }
  return disks;
}

TwistCensus census_band_word(const BraidWord& band_word) {
  if (band_word.alphabet() != Alphabet::Band)
    throw AlphabetError("band census needs a band word");

  TwistCensus c;
  c.surface = SurfaceKind::BandB3;
  for (uint8_t gen = 0; gen <= kA13; ++gen) {
    for (int sign : {+1, -1}) {
      std::vector<int> pos;
      for (std::size_t i = 0; i < band_word.size(); ++i)
        if (band_word.letter(i).generator == gen &&
            band_word.letter(i).sign == sign)
          pos.push_back(static_cast<int>(i));
      const std::size_t m = pos.size();
      if (m < 2) continue;
      const std::string name = BraidWord::generator_name(Alphabet::Band, gen);
      if (m >= 4) {
        // Two disjoint double twists beat a single triple: the slope
        // interval they certify has no trefoil exclusion.
        c.evidence.push_back(
            {TwistKind::Double, sign, name, {pos[0], pos[1]}});
        c.evidence.push_back(
            {TwistKind::Double, sign, name, {pos[2], pos[3]}});
        (sign > 0 ? c.disjoint_pos_double_pairs
                  : c.disjoint_neg_double_pairs) = true;
      } else {
        c.evidence.push_back(
            {TwistKind::Double, sign, name, {pos[0], pos[1]}});
        if (m == 3)
          c.evidence.push_back(
              {TwistKind::Triple, sign, name, {pos[0], pos[1], pos[2]}});
      }
    }
  }
  refresh_counts(c);
  return c;
}

TwistCensus census_3braid(const DeltaForm& df, bool minimal) {
  if (!minimal)
    throw std::invalid_argument(
        "census_3braid requires a certified minimal representative");
  return census_band_word(df.reassembled());
}

std::optional<std::map<std::string, int>> is_homogeneous(
    const BraidWord& standard_word) {
  if (standard_word.alphabet() != Alphabet::Standard)
    throw AlphabetError("is_homogeneous needs a standard word");
  std::map<std::string, int> signs;
  for (const Letter& l : standard_word.letters()) {
    const std::string name =
        BraidWord::generator_name(Alphabet::Standard, l.generator);
    auto [it, inserted] = signs.emplace(name, l.sign);
    if (!inserted && it->second != l.sign) return std::nullopt;
  }
  return signs;
}

TwistCensus census_homogeneous(const BraidWord& standard_word) {
  const auto signs = is_homogeneous(standard_word);
  if (!signs)
    throw std::invalid_argument("census_homogeneous needs a homogeneous word");
  if (static_cast<int>(standard_word.size()) < standard_word.strands())
    throw std::invalid_argument(
        "census_homogeneous needs a non-trivial closure");

  TwistCensus c;
  c.surface = SurfaceKind::SeifertHomogeneous;
  for (int gen = 0; gen + 1 < standard_word.strands(); ++gen) {
    std::vector<int> pos;
    int sign = 0;
    for (std::size_t i = 0; i < standard_word.size(); ++i)
      if (standard_word.letter(i).generator == gen) {
        pos.push_back(static_cast<int>(i));
        sign = standard_word.letter(i).sign;
      }
    const std::size_t m = pos.size();
    if (m < 2) continue;
    const std::string name =
        BraidWord::generator_name(Alphabet::Standard, static_cast<uint8_t>(gen));
    for (std::size_t k = 0; k + 1 < m; ++k)
      c.evidence.push_back(
          {TwistKind::Double, sign, name, {pos[k], pos[k + 1]}});
    if (m >= 3)
      c.evidence.push_back(
          {TwistKind::Triple, sign, name, {pos[0], pos[1], pos[2]}});
  }
  refresh_counts(c);

  // The disjoint-pair flags feed the strongest twist lemma, so they demand
  // tight twist regions: adjacent letter positions with no other band
  // attached in between. A loose pair still supplies a Gabai disk but not a
  // clean 3-ball. (The closure of s2 s1 s2 s1 is the trefoil; counting its
  // loose pairs as disjoint double twists would assert a taut foliation in
  // the Poincare sphere.)
  auto tight = [](const TwistEvidence& e) {
    return e.kind == TwistKind::Double &&
           e.positions[1] == e.positions[0] + 1;
  };
  for (int sign : {+1, -1}) {
    bool found = false;
    for (std::size_t i = 0; i < c.evidence.size() && !found; ++i)
      for (std::size_t j = i + 1; j < c.evidence.size() && !found; ++j) {
        const TwistEvidence& a = c.evidence[i];
        const TwistEvidence& b = c.evidence[j];
        if (a.sign != sign || b.sign != sign) continue;
        if (tight(a) && tight(b) && positions_disjoint(a, b)) found = true;
      }
    (sign > 0 ? c.disjoint_pos_double_pairs : c.disjoint_neg_double_pairs) =
        found;
  }
  return c;
}

}  // namespace propp
