#pragma once

#include <random>
#include <vector>

#include "propp/braid.hpp"

namespace propp::testutil {

inline BraidWord band(const std::string& text) {
  return BraidWord::parse(text, 3, Alphabet::Band);
}

inline BraidWord standard(const std::string& text, int strands) {
  return BraidWord::parse(text, strands, Alphabet::Standard);
}

inline BraidWord random_band_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> ls;
  ls.reserve(len);
  for (int i = 0; i < len; ++i)
    ls.emplace_back(static_cast<uint8_t>(gen(rng)), sgn(rng) ? 1 : -1);
  return BraidWord(3, Alphabet::Band, std::move(ls));
}

inline BraidWord random_standard_word(std::mt19937_64& rng, int strands,
                                      int len) {
  std::uniform_int_distribution<int> gen(0, strands - 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> ls;
  ls.reserve(len);
  for (int i = 0; i < len; ++i)
    ls.emplace_back(static_cast<uint8_t>(gen(rng)), sgn(rng) ? 1 : -1);
  return BraidWord(strands, Alphabet::Standard, std::move(ls));
}

}  // namespace propp::testutil
