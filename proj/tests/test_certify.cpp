#include <doctest.h>

#include <random>

#include "propp/certify.hpp"
#include "testutil.hpp"

using namespace propp;
using testutil::band;
using testutil::random_band_word;
using testutil::standard;

namespace {

bool has_interval(const PropertyPReport& r, const std::string& lo,
                  const std::string& hi, const std::string& rule) {
  for (const SlopeInterval& i : r.intervals)
    if (i.lo.to_string() == lo && i.hi.to_string() == hi && i.rule == rule)
      return true;
  return false;
}

bool has_route(const PropertyPReport& r, RouteKind kind) {
  for (const CertificateRoute& rt : r.routes)
    if (rt.kind == kind) return true;
  return false;
}

TwistCensus census_of(const std::string& w) {
  return census_band_word(testutil::band(w));
}

}  // namespace

TEST_CASE("slope interval arithmetic") {
  SlopeInterval i{Slope::neg_inf(), Slope::finite(Rational(1)), "twist1-pos"};
  CHECK(i.contains(Rational(-1)));
  CHECK(i.contains(Rational(0)));
  CHECK_FALSE(i.contains(Rational(1)));
  CHECK(Slope::neg_inf().to_string() == "-inf");
  CHECK(Slope::pos_inf().to_string() == "inf");
  CHECK(Slope::finite(Rational(-2)).to_string() == "-2/1");
  CHECK(Slope::finite(Rational(1, 2)).to_string() == "1/2");
}

TEST_CASE("homology sphere slopes") {
  CHECK(is_homology_sphere_slope(Rational(1)));
  CHECK_FALSE(is_homology_sphere_slope(Rational(2, 3)));
  CHECK(is_homology_sphere_slope(Rational(-1, 5)));
  CHECK_FALSE(is_homology_sphere_slope(Rational(0)));
  CHECK(is_homology_sphere_slope(Rational(1, 7)));
  CHECK_FALSE(is_homology_sphere_slope(Rational(3)));
}

TEST_CASE("rule table rows") {
  // one positive double twist
  TwistCensus c1 = census_of("a12^2 a23 a13");
  auto rows1 = intervals_from_census(c1, false);
  REQUIRE(rows1.size() == 1);
  CHECK(rows1[0].rule == "twist1-pos");
  CHECK(rows1[0].lo.to_string() == "-inf");
  CHECK(rows1[0].hi.to_string() == "1/1");

  // positive and negative double twists: corollary-both emits all slopes
  TwistCensus c2 = census_of("a12 a23^-1 a12 a23^-1");
  auto rows2 = intervals_from_census(c2, false);
  bool both = false;
  for (auto& r : rows2)
    both |= (r.rule == "corollary-both" && r.lo.kind == Slope::NegInf &&
             r.hi.kind == Slope::PosInf);
  CHECK(both);

  // triple twist row is gated on the trefoil
  TwistCensus c3 = census_of("a12^3 a23^2");
  auto gated = intervals_from_census(c3, true);
  auto open = intervals_from_census(c3, false);
  auto has_rule = [](const std::vector<SlopeInterval>& v, const char* rule) {
    for (auto& r : v)
      if (r.rule == rule) return true;
    return false;
  };
  CHECK(has_rule(open, "twist3-pos"));
  CHECK_FALSE(has_rule(gated, "twist3-pos"));
  CHECK_FALSE(has_rule(gated, "theorem1"));

  // two disjoint evidences give the (-2,2) row off the trefoil
  CHECK(has_rule(open, "theorem1"));
}

TEST_CASE("certify the 5_2 knot") {
  PropertyPReport r = certify(band("a12^2 a23 a13"));
  CHECK(r.conclusion == Conclusion::PropertyPCertified);
  CHECK(*r.v2 == 2);
  REQUIRE(r.band_minimal.has_value());
  CHECK(r.band_minimal->minimal_length == 4);
  CHECK(*r.band_minimal->genus == 1);
  REQUIRE(r.intervals.size() == 1);
  CHECK(has_interval(r, "-inf", "1/1", "twist1-pos"));
  CHECK(has_route(r, RouteKind::CassonNonzero));
  CHECK(has_route(r, RouteKind::Alternating52Fallback));
  CHECK_FALSE(has_route(r, RouteKind::TrefoilSpecial));
}

TEST_CASE("certify the trefoil") {
  PropertyPReport r = certify(band("a23 a12 a23 a12"));
  CHECK(r.conclusion == Conclusion::Trefoil);
  CHECK(*r.v2 == 1);
  CHECK(has_route(r, RouteKind::TrefoilSpecial));
  CHECK(has_route(r, RouteKind::CassonNonzero));
  // no interval may cover slope +1: the Poincare sphere lives there
  for (const SlopeInterval& i : r.intervals)
    CHECK_FALSE(i.contains(Rational(1)));
  // the caveat names the slopes
  for (const CertificateRoute& rt : r.routes)
    if (rt.kind == RouteKind::TrefoilSpecial) {
      CHECK(rt.witness["finite_pi1_slopes"][0] == "1/1");
      CHECK(rt.witness["finite_pi1_slopes"][1] == "-1/1");
    }
}

TEST_CASE("certify the figure-8") {
  PropertyPReport r = certify(standard("s1 s2^-1 s1 s2^-1", 3));
  CHECK(r.conclusion == Conclusion::PropertyPCertified);
  CHECK(*r.v2 == -1);
  CHECK(has_interval(r, "-inf", "inf", "corollary-both"));
  CHECK(has_route(r, RouteKind::HomogeneousThm5));
  CHECK(has_route(r, RouteKind::TwistLemma));
}

TEST_CASE("certify unknots and links") {
  CHECK(certify(band("a23 a12")).conclusion == Conclusion::Unknot);
  CHECK(certify(band("a23 a12 a23 a12^-1")).conclusion == Conclusion::Unknot);
  CHECK(certify(BraidWord(3, Alphabet::Band)).conclusion ==
        Conclusion::NotAKnot);
  CHECK(certify(band("a12 a23 a13 a23^-1")).conclusion == Conclusion::NotAKnot);
}

TEST_CASE("certify B2 torus knots through the homogeneous route") {
  PropertyPReport tre = certify(standard("s1^3", 2));
  CHECK(tre.conclusion == Conclusion::Trefoil);
  PropertyPReport t25 = certify(standard("s1^5", 2));
  CHECK(t25.conclusion == Conclusion::PropertyPCertified);
  CHECK(*t25.v2 == 3);
  CHECK(has_route(t25, RouteKind::HomogeneousThm5));
}

TEST_CASE("inputs outside every hypothesis stay inconclusive") {
  // 4-strand unknot diagram: not a 3-braid, trivial Seifert genus, v2 = 0
  PropertyPReport r = certify(standard("s1 s2 s3", 4));
  CHECK(r.conclusion == Conclusion::Inconclusive);
  REQUIRE(r.routes.size() == 1);
  CHECK(r.routes[0].kind == RouteKind::Inconclusive);
}

TEST_CASE("certify is conjugation invariant") {
  std::mt19937_64 rng(103);
  int knots = 0;
  for (int i = 0; i < 100 && knots < 15; ++i) {
    BraidWord w = random_band_word(rng, 4 + i % 5);
    if (w.component_count() != 1) continue;
    ++knots;
    BraidWord u = random_band_word(rng, 1 + i % 2);
    PropertyPReport a = certify(w);
    PropertyPReport b = certify(u + w + u.inverse());
    CHECK(conclusion_name(a.conclusion) == conclusion_name(b.conclusion));
    CHECK(*a.v2 == *b.v2);
    CHECK(a.band_minimal->minimal_length == b.band_minimal->minimal_length);
    CHECK(a.intervals.size() == b.intervals.size());
  }
  CHECK(knots >= 10);
}

TEST_CASE("certify is equivariant under mirroring") {
  auto mirror_rule = [](std::string rule) {
    auto swap_suffix = [&](const char* from, const char* to) {
      if (rule.size() >= 4 && rule.substr(rule.size() - 4) == from)
        rule = rule.substr(0, rule.size() - 4) + to;
    };
    swap_suffix("-pos", "-tmp");
    swap_suffix("-neg", "-pos");
    if (rule.size() >= 4 && rule.substr(rule.size() - 4) == "-tmp")
      rule = rule.substr(0, rule.size() - 4) + "-neg";
    return rule;
  };
  std::mt19937_64 rng(107);
  int knots = 0;
  for (int i = 0; i < 100 && knots < 12; ++i) {
    BraidWord w = random_band_word(rng, 4 + i % 5);
    if (w.component_count() != 1) continue;
    ++knots;
    PropertyPReport a = certify(w);
    PropertyPReport m = certify(w.mirror());
    CHECK(conclusion_name(a.conclusion) == conclusion_name(m.conclusion));
    // mirrored intervals: (lo, hi) -> (-hi, -lo), pos<->neg rule tags
    REQUIRE(a.intervals.size() == m.intervals.size());
    std::vector<SlopeInterval> expected;
    for (const SlopeInterval& iv : a.intervals) {
      SlopeInterval e;
      e.lo = iv.hi.kind == Slope::PosInf ? Slope::neg_inf()
             : iv.hi.kind == Slope::NegInf
                 ? Slope::pos_inf()
                 : Slope::finite(-iv.hi.value);
      e.hi = iv.lo.kind == Slope::NegInf ? Slope::pos_inf()
             : iv.lo.kind == Slope::PosInf
                 ? Slope::neg_inf()
                 : Slope::finite(-iv.lo.value);
      e.rule = mirror_rule(iv.rule);
      expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(expected[k].lo.to_string() == m.intervals[k].lo.to_string());
      CHECK(expected[k].hi.to_string() == m.intervals[k].hi.to_string());
      CHECK(expected[k].rule == m.intervals[k].rule);
    }
  }
}

TEST_CASE("twist-lemma route only fires with both candidate slopes covered") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 80; ++i) {
    BraidWord w = random_band_word(rng, 4 + i % 5);
    if (w.component_count() != 1) continue;
    PropertyPReport r = certify(w);
    if (has_route(r, RouteKind::TwistLemma)) {
      bool plus = false, minus = false;
      for (const SlopeInterval& iv : r.intervals) {
        plus |= iv.contains(Rational(1));
        minus |= iv.contains(Rational(-1));
      }
      CHECK(plus);
      CHECK(minus);
    }
  }
}

TEST_CASE("report JSON carries the schema fields") {
  PropertyPReport r = certify(band("a12^2 a23 a13"));
  nlohmann::ordered_json j = report_to_json(r);
  for (const char* key : {"input", "strands", "conclusion", "alexander", "v2",
                          "census", "intervals", "routes", "minimal_length",
                          "genus"})
    CHECK(j.contains(key));
  CHECK(j["input"] == "a12^2 a23 a13");
  CHECK(j["conclusion"] == "PropertyP-certified");
  CHECK(j["alexander"] == "2*t - 3 + 2*t^-1");
  CHECK(j["v2"] == 2);
  CHECK(j["intervals"][0]["lo"] == "-inf");
  CHECK(j["intervals"][0]["hi"] == "1/1");

  // byte determinism
  CHECK(report_to_json(certify(band("a12^2 a23 a13"))).dump() == j.dump());
}

TEST_CASE("budget exhaustion degrades to the general routes") {
  SearchOptions starved;
  starved.max_states = 2;
  PropertyPReport r = certify(band("a12^2 a23 a13 a12 a23 a13"), starved);
  CHECK(r.budget_degraded);
  CHECK_FALSE(r.band_minimal.has_value());
  CHECK(r.conclusion == Conclusion::PropertyPCertified);  // casson route
}
