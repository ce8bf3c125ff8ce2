#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "propp/band_calculus.hpp"
#include "propp/braid.hpp"
#include "propp/gabai.hpp"
#include "propp/invariants.hpp"
#include "propp/laurent.hpp"

namespace propp {

/// Endpoint of an open slope interval: a rational or +-infinity.
struct Slope {
  enum Kind : int8_t { NegInf = -1, Finite = 0, PosInf = 1 };
  Kind kind = Finite;
  Rational value = 0;

  static Slope neg_inf() { return {NegInf, 0}; }
  static Slope pos_inf() { return {PosInf, 0}; }
  static Slope finite(Rational r) { return {Finite, std::move(r)}; }

  std::string to_string() const;
  bool operator==(const Slope& o) const {
    return kind == o.kind && (kind != Finite || value == o.value);
  }
  bool operator<(const Slope& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Finite && value < o.value;
  }
};

/// Open interval of surgery slopes together with the rule that justifies it.
struct SlopeInterval {
  Slope lo, hi;
  std::string rule;

  bool contains(const Rational& r) const;
  bool operator==(const SlopeInterval& o) const {
    return lo == o.lo && hi == o.hi && rule == o.rule;
  }
  bool operator<(const SlopeInterval& o) const;
};

enum class RouteKind : uint8_t {
  CassonNonzero,
  ThreeBraidThm4,
  TwistLemma,
  HomogeneousThm5,
  Alternating52Fallback,
  TrefoilSpecial,
  Inconclusive,
};

std::string route_kind_name(RouteKind k);

struct CertificateRoute {
  RouteKind kind;
  std::string cite;
  nlohmann::ordered_json witness;
};

enum class Conclusion : uint8_t {
  PropertyPCertified,
  Trefoil,
  Unknot,
  NotAKnot,
  Inconclusive,
};

std::string conclusion_name(Conclusion c);

struct PropertyPReport {
  BraidWord input;
  int components = 0;
  std::optional<GenusReport> band_minimal;
  std::optional<LaurentPolynomial> alexander_poly;
  std::optional<BigInt> v2;
  std::optional<TwistCensus> census;
  std::vector<SlopeInterval> intervals;
  std::vector<CertificateRoute> routes;
  Conclusion conclusion = Conclusion::Inconclusive;
  bool budget_degraded = false;

  explicit PropertyPReport(BraidWord w) : input(std::move(w)) {}
};

/// Rule table from twist evidence to laminar slope intervals; all applicable
/// rows are emitted. `is_trefoil` gates the triple-twist rows and the
/// two-disk row.
std::vector<SlopeInterval> intervals_from_census(const TwistCensus& c,
                                                 bool is_trefoil);

/// r-surgery on a knot gives a homology sphere exactly for r = 1/n, n != 0.
bool is_homology_sphere_slope(const Rational& r);

PropertyPReport certify(const BraidWord& w, const SearchOptions& opts = {});

nlohmann::ordered_json census_to_json(const TwistCensus& c);
nlohmann::ordered_json report_to_json(const PropertyPReport& r);

}  // namespace propp
