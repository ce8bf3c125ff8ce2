#include "propp/certify.hpp"

#include <algorithm>

namespace propp {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

const LaurentPolynomial& trefoil_delta() {
  static const LaurentPolynomial d{{1, 1}, {0, -1}, {-1, 1}};
  return d;
}

const LaurentPolynomial& five_two_delta() {
  static const LaurentPolynomial d{{1, 2}, {0, -3}, {-1, 2}};
  return d;
}

}  // namespace

std::string Slope::to_string() const {
  switch (kind) {
    case NegInf: return "-inf";
    case PosInf: return "inf";
    default: return rational_string(value);
  }
}

bool SlopeInterval::contains(const Rational& r) const {
  const bool above_lo = lo.kind == Slope::NegInf ||
                        (lo.kind == Slope::Finite && lo.value < r);
  const bool below_hi = hi.kind == Slope::PosInf ||
                        (hi.kind == Slope::Finite && r < hi.value);
  return above_lo && below_hi;
}

bool SlopeInterval::operator<(const SlopeInterval& o) const {
  if (!(lo == o.lo)) return lo < o.lo;
  if (!(hi == o.hi)) return hi < o.hi;
  return rule < o.rule;
}

std::string route_kind_name(RouteKind k) {
  switch (k) {
    case RouteKind::CassonNonzero: return "casson-nonzero";
    case RouteKind::ThreeBraidThm4: return "three-braid-thm4";
    case RouteKind::TwistLemma: return "twist-lemma";
    case RouteKind::HomogeneousThm5: return "homogeneous-thm5";
    case RouteKind::Alternating52Fallback: return "alternating-52-fallback";
    case RouteKind::TrefoilSpecial: return "trefoil-special";
    case RouteKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::PropertyPCertified: return "PropertyP-certified";
    case Conclusion::Trefoil: return "trefoil";
    case Conclusion::Unknot: return "unknot";
    case Conclusion::NotAKnot: return "not-a-knot";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<SlopeInterval> intervals_from_census(const TwistCensus& c,
                                                 bool is_trefoil) {
  std::vector<SlopeInterval> out;
  const Slope minus_inf = Slope::neg_inf();
  const Slope plus_inf = Slope::pos_inf();
  auto fin = [](long long v) { return Slope::finite(Rational(v)); };

  if (c.pos_double >= 1)
    out.push_back({minus_inf, fin(1), "twist1-pos"});
  if (c.neg_double >= 1)
    out.push_back({fin(-1), plus_inf, "twist1-neg"});
  if (c.pos_double >= 1 && c.neg_double >= 1)
    out.push_back({minus_inf, plus_inf, "corollary-both"});
  if (c.disjoint_pos_double_pairs)
    out.push_back({minus_inf, fin(2), "twist2-pos"});
  if (c.disjoint_neg_double_pairs)
    out.push_back({fin(-2), plus_inf, "twist2-neg"});
  if (c.pos_triple >= 1 && !is_trefoil)
    out.push_back({minus_inf, fin(2), "twist3-pos"});
  if (c.neg_triple >= 1 && !is_trefoil)
    out.push_back({fin(-2), plus_inf, "twist3-neg"});
  if (!is_trefoil && c.evidence.size() >= 2 && c.has_disjoint_evidence_pair())
    out.push_back({fin(-2), fin(2), "theorem1"});

  std::sort(out.begin(), out.end());
  return out;
}

bool is_homology_sphere_slope(const Rational& r) {
  if (r == 0) return false;
  return numerator(r) == 1 || numerator(r) == -1;
}

namespace {

void merge_intervals(std::vector<SlopeInterval>& dst,
                     const std::vector<SlopeInterval>& src) {
  for (const SlopeInterval& i : src)
    if (std::find(dst.begin(), dst.end(), i) == dst.end()) dst.push_back(i);
}

bool union_contains(const std::vector<SlopeInterval>& intervals,
                    const Rational& r) {
  return std::any_of(intervals.begin(), intervals.end(),
                     [&](const SlopeInterval& i) { return i.contains(r); });
}

}  // namespace

PropertyPReport certify(const BraidWord& w, const SearchOptions& opts) {
  PropertyPReport rep(w);
  rep.components = w.component_count();
  if (rep.components != 1) {
    rep.conclusion = Conclusion::NotAKnot;
    return rep;
  }

  const BraidWord std_word =
      w.alphabet() == Alphabet::Band ? w.band_to_standard() : w;
  rep.alexander_poly = alexander(w);
  {
    const BigInt second =
        rep.alexander_poly->derivative().derivative().evaluate_at_one();
    rep.v2 = second / 2;
  }
  const bool trefoil_poly = *rep.alexander_poly == trefoil_delta();
  const bool five_two_poly = *rep.alexander_poly == five_two_delta();

  // Band route (3-braids only).
  std::optional<ConjugacySearch> band_search;
  if (w.strands() == 3) {
    const BraidWord band_word =
        w.alphabet() == Alphabet::Band ? w : w.standard_to_band();
    try {
      band_search = conjugacy_search(band_word, opts);
    } catch (const BudgetExceeded&) {
      rep.budget_degraded = true;
    }
  }

  bool trefoil_identified = false;
  bool five_two_identified = false;
  if (band_search) {
    rep.band_minimal = band_search->report;
    if (band_search->report.minimal_length == 2) {
      rep.conclusion = Conclusion::Unknot;
      return rep;
    }
    if (band_search->report.minimal_length == 4) {
      trefoil_identified = trefoil_poly;
      five_two_identified = five_two_poly;
    }
  }

  const auto homog_signs = is_homogeneous(std_word);
  const bool homog_nontrivial =
      homog_signs.has_value() &&
      static_cast<int>(std_word.size()) >= std_word.strands();
  if (!trefoil_identified && trefoil_poly && homog_nontrivial) {
    // Homogeneous closures are fibred; Seifert genus 1 plus the trefoil
    // polynomial pins the trefoil.
    const int two_genus =
        static_cast<int>(std_word.size()) - std_word.strands() + 1;
    trefoil_identified = (two_genus == 2);
  }

  // Censuses and the slope-interval rule table.
  std::optional<BraidWord> best_census_word;
  if (band_search) {
    int best_disks = -1;
    for (const BraidWord& pw : band_search->plateau) {
      const TwistCensus c = census_band_word(pw);
      merge_intervals(rep.intervals, intervals_from_census(c, trefoil_poly));
      const int disks = c.gabai_disk_count(trefoil_poly);
      if (disks > best_disks) {
        best_disks = disks;
        rep.census = c;
        best_census_word = pw;
      }
    }
  }
  if (homog_nontrivial) {
    const TwistCensus ch = census_homogeneous(std_word);
    merge_intervals(rep.intervals, intervals_from_census(ch, trefoil_poly));
    if (!rep.census) rep.census = ch;
  }
  std::sort(rep.intervals.begin(), rep.intervals.end());

  // Routes, in a fixed order.
  if (*rep.v2 != 0) {
    nlohmann::ordered_json witness;
    witness["v2"] = rep.v2->str();
    rep.routes.push_back(
        {RouteKind::CassonNonzero,
         "the Casson invariant of 1/n-surgery is n*v2(K); nonzero v2 rules "
         "out homotopy-sphere surgeries",
         witness});
  }
  const bool theorem1_row =
      std::any_of(rep.intervals.begin(), rep.intervals.end(),
                  [](const SlopeInterval& i) { return i.rule == "theorem1"; });
  if (band_search && theorem1_row && !trefoil_identified) {
    nlohmann::ordered_json witness;
    if (best_census_word) witness["minimal_witness"] = best_census_word->format();
    witness["interval"] = {{"lo", "-2/1"}, {"hi", "2/1"}};
    rep.routes.push_back(
        {RouteKind::ThreeBraidThm4,
         "two Gabai disks with disjoint witnesses on a minimal band surface "
         "give essential laminations for every slope in (-2,2)",
         witness});
  }
  const bool covers_plus = union_contains(rep.intervals, Rational(1));
  const bool covers_minus = union_contains(rep.intervals, Rational(-1));
  if (covers_plus && covers_minus) {
    nlohmann::ordered_json witness;
    witness["covered_slopes"] = {"1/1", "-1/1"};
    rep.routes.push_back(
        {RouteKind::TwistLemma,
         "twist-lemma intervals cover both candidate homotopy-sphere slopes "
         "+1 and -1",
         witness});
  }
  if (homog_nontrivial) {
    nlohmann::ordered_json witness;
    for (const auto& [g, s] : *homog_signs)
      witness[g] = s > 0 ? "+" : "-";
    rep.routes.push_back(
        {RouteKind::HomogeneousThm5,
         "non-trivial closed homogeneous braids are fibred (Stallings) and "
         "their Seifert surface carries two Gabai disks",
         witness});
  }
  if (five_two_identified) {
    nlohmann::ordered_json witness;
    witness["knot"] = "5_2";
    rep.routes.push_back(
        {RouteKind::Alternating52Fallback,
         "Delman-Roberts: alternating non-torus knots whose checkerboard "
         "surface is the Seifert surface have laminar surgeries at every "
         "finite slope",
         witness});
  }
  if (trefoil_identified) {
    nlohmann::ordered_json witness;
    witness["finite_pi1_slopes"] = {"1/1", "-1/1"};
    witness["v2"] = rep.v2->str();
    rep.routes.push_back(
        {RouteKind::TrefoilSpecial,
         "v2 = 1 still certifies Property P, but the trefoil admits "
         "finite-fundamental-group surgeries (the Poincare sphere) exactly "
         "at slopes 1 and -1",
         witness});
  }

  if (trefoil_identified) {
    rep.conclusion = Conclusion::Trefoil;
  } else if (!rep.routes.empty()) {
    rep.conclusion = Conclusion::PropertyPCertified;
  } else {
    rep.conclusion = Conclusion::Inconclusive;
    rep.routes.push_back({RouteKind::Inconclusive,
                          "no applicable certification route; no guess is "
                          "made outside the covered hypotheses",
                          nlohmann::ordered_json::object()});
  }
  return rep;
}

nlohmann::ordered_json census_to_json(const TwistCensus& c) {
  nlohmann::ordered_json j;
  j["surface"] = c.surface == SurfaceKind::BandB3 ? "band-b3"
                                                  : "seifert-homogeneous";
  j["pos_double"] = c.pos_double;
  j["neg_double"] = c.neg_double;
  j["pos_triple"] = c.pos_triple;
  j["neg_triple"] = c.neg_triple;
  j["disjoint_pos_double_pairs"] = c.disjoint_pos_double_pairs;
  j["disjoint_neg_double_pairs"] = c.disjoint_neg_double_pairs;
  nlohmann::ordered_json ev = nlohmann::ordered_json::array();
  for (const TwistEvidence& e : c.evidence) {
    nlohmann::ordered_json je;
    je["kind"] = e.kind == TwistKind::Double ? "double" : "triple";
    je["sign"] = e.sign > 0 ? "+" : "-";
    je["generator"] = e.generator;
    je["positions"] = e.positions;
    ev.push_back(je);
  }
  j["evidence"] = ev;
  return j;
}

nlohmann::ordered_json report_to_json(const PropertyPReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input.format();
  j["strands"] = r.input.strands();
  j["alphabet"] =
      r.input.alphabet() == Alphabet::Band ? "band" : "standard";
  j["components"] = r.components;
  j["conclusion"] = conclusion_name(r.conclusion);
  if (r.band_minimal) {
    j["minimal_length"] = r.band_minimal->minimal_length;
    j["neg_euler"] = r.band_minimal->neg_euler;
    if (r.band_minimal->genus) {
      const Rational& g = *r.band_minimal->genus;
      if (denominator(g) == 1)
        j["genus"] = static_cast<long long>(numerator(g));
      else
        j["genus"] = rational_string(g);
    }
    j["minimal_witness"] = r.band_minimal->witness.format();
  }
  if (r.alexander_poly) j["alexander"] = r.alexander_poly->to_string();
  if (r.v2) j["v2"] = r.v2->convert_to<long long>();
  if (r.census) j["census"] = census_to_json(*r.census);
  nlohmann::ordered_json intervals = nlohmann::ordered_json::array();
  for (const SlopeInterval& i : r.intervals) {
    nlohmann::ordered_json ji;
    ji["lo"] = i.lo.to_string();
    ji["hi"] = i.hi.to_string();
    ji["rule"] = i.rule;
    intervals.push_back(ji);
  }
  j["intervals"] = intervals;
  nlohmann::ordered_json routes = nlohmann::ordered_json::array();
  for (const CertificateRoute& rt : r.routes) {
    nlohmann::ordered_json jr;
    jr["kind"] = route_kind_name(rt.kind);
    jr["cite"] = rt.cite;
    jr["witness"] = rt.witness;
    routes.push_back(jr);
  }
  j["routes"] = routes;
  if (r.budget_degraded) j["budget_degraded"] = true;
  return j;
}

}  // namespace propp
