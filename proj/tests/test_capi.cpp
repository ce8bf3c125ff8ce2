#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "propp.h"

namespace {

struct Word {
  propp_word* w = nullptr;
  ~Word() { propp_word_free(w); }
};

struct Str {
  char* s = nullptr;
  ~Str() { propp_string_free(s); }
  std::string get() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse, format and inspect through the C API") {
  Word w;
  REQUIRE(propp_word_parse("a12^2 a23 a13", 3, PROPP_ALPHABET_AUTO, &w.w) ==
          PROPP_OK);
  CHECK(propp_word_length(w.w) == 4);
  CHECK(propp_word_strands(w.w) == 3);

  Str text;
  REQUIRE(propp_word_format(w.w, &text.s) == PROPP_OK);
  CHECK(text.get() == "a12^2 a23 a13");

  int comps = 0;
  REQUIRE(propp_word_component_count(w.w, &comps) == PROPP_OK);
  CHECK(comps == 1);
}

TEST_CASE("status codes and error messages") {
  Word bad;
  CHECK(propp_word_parse("a12 wat", 3, PROPP_ALPHABET_AUTO, &bad.w) ==
        PROPP_ERR_SYNTAX);
  CHECK(std::string(propp_last_error()).find("wat") != std::string::npos);

  Word mismatch;
  CHECK(propp_word_parse("s1 s2", 3, PROPP_ALPHABET_BAND, &mismatch.w) ==
        PROPP_ERR_ALPHABET);

  CHECK(propp_word_parse(nullptr, 3, PROPP_ALPHABET_AUTO, nullptr) ==
        PROPP_ERR_BAD_ARGUMENT);

  Word link;
  REQUIRE(propp_word_parse("a12 a23 a13 a23^-1", 3, PROPP_ALPHABET_AUTO,
                           &link.w) == PROPP_OK);
  Str poly;
  CHECK(propp_alexander(link.w, &poly.s) == PROPP_ERR_NOT_KNOT);

  CHECK(std::string(propp_status_name(PROPP_ERR_BUDGET)) == "budget-exceeded");
}

TEST_CASE("invariants through the C API") {
  Word w;
  REQUIRE(propp_word_parse("a12^2 a23 a13", 3, PROPP_ALPHABET_BAND, &w.w) ==
          PROPP_OK);
  Str poly;
  REQUIRE(propp_alexander(w.w, &poly.s) == PROPP_OK);
  CHECK(poly.get() == "2*t - 3 + 2*t^-1");
  long long v2 = 0;
  REQUIRE(propp_casson_v2(w.w, &v2) == PROPP_OK);
  CHECK(v2 == 2);
}

TEST_CASE("analyze emits the report schema") {
  Word w;
  REQUIRE(propp_word_parse("s1 s2^-1 s1 s2^-1", 3, PROPP_ALPHABET_STANDARD,
                           &w.w) == PROPP_OK);
  Str json;
  REQUIRE(propp_analyze_json(w.w, nullptr, &json.s) == PROPP_OK);
  auto j = nlohmann::json::parse(json.get());
  CHECK(j["conclusion"] == "PropertyP-certified");
  CHECK(j["v2"] == -1);
  bool all_slopes = false;
  for (const auto& i : j["intervals"])
    all_slopes |= (i["lo"] == "-inf" && i["hi"] == "inf" &&
                   i["rule"] == "corollary-both");
  CHECK(all_slopes);
}

TEST_CASE("theorem 4 verification through the C API") {
  Str json;
  int verdict = 0;
  REQUIRE(propp_verify_theorem4_json(4, 4, nullptr, &verdict, &json.s) ==
          PROPP_OK);
  CHECK(verdict == 1);
  auto j = nlohmann::json::parse(json.get());
  CHECK(j["exceptions"] == nlohmann::json({"five-two", "trefoil"}));

  Str json2;
  CHECK(propp_verify_theorem4_json(9, 4, nullptr, &verdict, &json2.s) ==
        PROPP_ERR_BOUNDS);
}

TEST_CASE("st checks through the C API") {
  Str json;
  int verdict = 0;
  REQUIRE(propp_st_check_random_json(5, 25, 4, 8, nullptr, &verdict,
                                     &json.s) == PROPP_OK);
  CHECK(verdict == 1);
  auto j = nlohmann::json::parse(json.get());
  CHECK(j["words_checked"] == 25);
  CHECK(j["verdict"] == true);

  Str json2;
  REQUIRE(propp_st_check_exhaustive_json(3, nullptr, &verdict, &json2.s) ==
          PROPP_OK);
  CHECK(verdict == 1);
}

TEST_CASE("family check through the C API") {
  Word tmpl;
  REQUIRE(propp_word_parse("s2^3", 3, PROPP_ALPHABET_STANDARD, &tmpl.w) ==
          PROPP_OK);
  const int fit[] = {1, 3, 5};
  const int holdout[] = {7, -1};
  Str json;
  int verdict = 0;
  REQUIRE(propp_family_check_json(tmpl.w, 0, "s1", fit, 3, holdout, 2, &verdict,
                                  &json.s) == PROPP_OK);
  CHECK(verdict == 1);
  auto j = nlohmann::json::parse(json.get());
  CHECK(j["fit"]["a2"] == "1/8");
  CHECK(j["leading_is_one_eighth"] == true);
}

TEST_CASE("version and budget plumbing") {
  CHECK(std::string(propp_version()).size() > 0);
  Word w;
  REQUIRE(propp_word_parse("a12^2 a23 a13 a12 a23 a13", 3, PROPP_ALPHABET_BAND,
                           &w.w) == PROPP_OK);
  propp_options starved{};
  starved.search_max_states = 2;
  Str json;
  // analysis survives budget exhaustion by degrading to general routes
  REQUIRE(propp_analyze_json(w.w, &starved, &json.s) == PROPP_OK);
  auto j = nlohmann::json::parse(json.get());
  CHECK(j["budget_degraded"] == true);
}
