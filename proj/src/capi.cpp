#include "propp.h"

#include <cstring>
#include <new>
#include <string>

#include "propp/band_calculus.hpp"
#include "propp/braid.hpp"
#include "propp/certify.hpp"
#include "propp/gabai.hpp"
#include "propp/invariants.hpp"
#include "propp/verifier.hpp"

using namespace propp;

struct propp_word {
  BraidWord word;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchOptions to_search_options(const propp_options* options) {
  SearchOptions opts;
  if (options) {
    if (options->search_max_states) opts.max_states = options->search_max_states;
    if (options->search_max_length) opts.max_word_length = options->search_max_length;
  }
  return opts;
}

/// Runs fn, mapping exceptions onto status codes and g_last_error.
template <typename Fn>
propp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return PROPP_ERR_SYNTAX;
  } catch (const AlphabetError& e) {
    g_last_error = e.what();
    return PROPP_ERR_ALPHABET;
  } catch (const NotAKnotError& e) {
    g_last_error = e.what();
    return PROPP_ERR_NOT_KNOT;
  } catch (const BudgetExceeded& e) {
    g_last_error = e.what();
    return PROPP_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return PROPP_ERR_BAD_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PROPP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PROPP_ERR_INTERNAL;
  }
}

propp_status emit_json(const nlohmann::ordered_json& j, char** out) {
  *out = dup_string(j.dump(2));
  return *out ? PROPP_OK : PROPP_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* propp_version(void) { return "1.0.0"; }

const char* propp_status_name(propp_status status) {
  switch (status) {
    case PROPP_OK: return "ok";
    case PROPP_ERR_SYNTAX: return "syntax-error";
    case PROPP_ERR_ALPHABET: return "alphabet-error";
    case PROPP_ERR_NOT_KNOT: return "not-a-knot";
    case PROPP_ERR_BUDGET: return "budget-exceeded";
    case PROPP_ERR_BOUNDS: return "bounds-error";
    case PROPP_ERR_BAD_ARGUMENT: return "bad-argument";
    case PROPP_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* propp_last_error(void) { return g_last_error.c_str(); }

void propp_string_free(char* s) { delete[] s; }

propp_status propp_word_parse(const char* text, int strands,
                              propp_alphabet alphabet, propp_word** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return PROPP_ERR_BAD_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() {
    std::optional<Alphabet> hint;
    if (alphabet == PROPP_ALPHABET_BAND) hint = Alphabet::Band;
    if (alphabet == PROPP_ALPHABET_STANDARD) hint = Alphabet::Standard;
    BraidWord w = BraidWord::parse(text, strands, hint);
    if (alphabet == PROPP_ALPHABET_BAND && w.alphabet() != Alphabet::Band)
      throw AlphabetError("word is not in the band alphabet");
    if (alphabet == PROPP_ALPHABET_STANDARD &&
        w.alphabet() != Alphabet::Standard)
      throw AlphabetError("word is not in the standard alphabet");
    *out = new propp_word{std::move(w)};
    return PROPP_OK;
  });
}

void propp_word_free(propp_word* w) { delete w; }

propp_status propp_word_format(const propp_word* w, char** out) {
  if (!w || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    *out = dup_string(w->word.format());
    return *out ? PROPP_OK : PROPP_ERR_INTERNAL;
  });
}

int propp_word_length(const propp_word* w) {
  return w ? static_cast<int>(w->word.size()) : -1;
}

int propp_word_strands(const propp_word* w) {
  return w ? w->word.strands() : -1;
}

propp_status propp_word_component_count(const propp_word* w, int* out) {
  if (!w || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    *out = w->word.component_count();
    return PROPP_OK;
  });
}

propp_status propp_alexander(const propp_word* w, char** out) {
  if (!w || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    *out = dup_string(alexander(w->word).to_string());
    return *out ? PROPP_OK : PROPP_ERR_INTERNAL;
  });
}

propp_status propp_casson_v2(const propp_word* w, long long* out) {
  if (!w || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    *out = casson_v2(w->word).convert_to<long long>();
    return PROPP_OK;
  });
}

propp_status propp_analyze_json(const propp_word* w,
                                const propp_options* options, char** out) {
  if (!w || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    const PropertyPReport rep = certify(w->word, to_search_options(options));
    return emit_json(report_to_json(rep), out);
  });
}

propp_status propp_enumerate_cases_json(int maxp, int maxn,
                                        const propp_options* options,
                                        char** out) {
  if (!out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    EnumerateOptions opts;
    opts.maxP = maxp;
    opts.maxN = maxn;
    opts.search = to_search_options(options);
    if (maxp > 4 || maxn > 4) {
      g_last_error = "reduced enumeration bounds must be <= 4";
      return PROPP_ERR_BOUNDS;
    }
    return emit_json(case_rows_to_json(enumerate_cases(opts)), out);
  });
}

propp_status propp_verify_theorem4_json(int maxp, int maxn,
                                        const propp_options* options,
                                        int* verdict_out, char** out) {
  if (!verdict_out || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    EnumerateOptions opts;
    opts.maxP = maxp;
    opts.maxN = maxn;
    opts.search = to_search_options(options);
    if (maxp > 4 || maxn > 4) {
      g_last_error = "reduced enumeration bounds must be <= 4";
      return PROPP_ERR_BOUNDS;
    }
    const std::vector<CaseRow> rows = enumerate_cases(opts);
    const Theorem4Verdict verdict = verify_theorem4(rows);
    const std::vector<IdentityCheck> ids = confirm_case_identities(opts.search);
    bool identities_ok = true;
    for (const IdentityCheck& c : ids) identities_ok &= c.confirmed;
    *verdict_out = (verdict.ok && identities_ok) ? 1 : 0;
    return emit_json(theorem4_to_json(rows, verdict, ids), out);
  });
}

propp_status propp_st_check_random_json(unsigned long long seed, int count,
                                        int min_len, int max_len,
                                        const propp_options* options,
                                        int* verdict_out, char** out) {
  if (!verdict_out || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    const STReport rep =
        st_random_check(seed, count, min_len, max_len, to_search_options(options));
    *verdict_out = rep.ok() ? 1 : 0;
    return emit_json(st_report_to_json(rep), out);
  });
}

propp_status propp_st_check_exhaustive_json(int max_len,
                                            const propp_options* options,
                                            int* verdict_out, char** out) {
  if (!verdict_out || !out) return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    const STReport rep = st_exhaustive_check(max_len, to_search_options(options));
    *verdict_out = rep.ok() ? 1 : 0;
    return emit_json(st_report_to_json(rep), out);
  });
}

propp_status propp_family_check_json(const propp_word* template_word,
                                     size_t insert_pos, const char* generator,
                                     const int* fit_samples, size_t n_fit,
                                     const int* holdout_samples,
                                     size_t n_holdout, int* verdict_out,
                                     char** out) {
  if (!template_word || !generator || !fit_samples || !verdict_out || !out)
    return PROPP_ERR_BAD_ARGUMENT;
  return guarded([&]() {
    const BraidWord& tw = template_word->word;
    const BraidWord gen_word =
        BraidWord::parse(generator, tw.strands(), tw.alphabet());
    if (gen_word.size() != 1 || gen_word.alphabet() != tw.alphabet())
      throw std::invalid_argument("generator must be a single letter in the "
                                  "template's alphabet");
    TwistFamily family(tw, insert_pos, gen_word.letter(0).generator);
    std::vector<int> fit(fit_samples, fit_samples + n_fit);
    std::vector<int> holdout;
    if (holdout_samples)
      holdout.assign(holdout_samples, holdout_samples + n_holdout);
    const Theorem3Verdict v = verify_theorem3(family, fit, holdout);
    *verdict_out = v.ok ? 1 : 0;
    return emit_json(theorem3_to_json(family, fit, holdout, v), out);
  });
}

}  // extern "C"
