#include "propp/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace propp {

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycles().size());
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int x = i;
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

Permutation Permutation::then(const Permutation& other) const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[i] = other.apply(images_[i]);
  return Permutation(std::move(images));
}

std::pair<int, int> letter_transposition(Alphabet a, const Letter& l) {
  if (a == Alphabet::Band) {
    switch (l.generator) {
      case kA12: return {0, 1};
      case kA23: return {1, 2};
      case kA13: return {0, 2};
      default: throw AlphabetError("invalid band generator");
    }
  }
  return {l.generator, l.generator + 1};
}

namespace {

void validate_letters(int strands, Alphabet alphabet,
                      const std::vector<Letter>& letters) {
  if (strands < 2) throw std::invalid_argument("strand count must be >= 2");
  if (alphabet == Alphabet::Band && strands != 3)
    throw AlphabetError("band alphabet requires exactly 3 strands");
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
    if (alphabet == Alphabet::Band) {
      if (l.generator > kA13) throw AlphabetError("invalid band generator");
    } else if (static_cast<int>(l.generator) + 1 >= strands) {
      throw AlphabetError("standard generator index exceeds strand count");
    }
  }
}

}  // namespace

BraidWord::BraidWord(int strands, Alphabet alphabet)
    : strands_(strands), alphabet_(alphabet) {
  validate_letters(strands_, alphabet_, letters_);
}

BraidWord::BraidWord(int strands, Alphabet alphabet, std::vector<Letter> letters)
    : strands_(strands), alphabet_(alphabet), letters_(std::move(letters)) {
  validate_letters(strands_, alphabet_, letters_);
}

BraidWord BraidWord::parse(const std::string& text, int strands,
                           std::optional<Alphabet> hint) {
  if (strands < 2) throw std::invalid_argument("strand count must be >= 2");
  std::vector<Letter> letters;
  std::optional<Alphabet> alphabet = std::nullopt;

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t tok_start = i;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string tok = text.substr(i, j - i);
    i = j;

    std::string base = tok;
    long long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string exp_str = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exponent = std::stoll(exp_str, &used);
        if (used != exp_str.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("invalid exponent '" + exp_str + "'", tok_start);
      }
      if (exponent == 0) throw ParseError("exponent must be nonzero", tok_start);
    }

    Alphabet tok_alpha;
    uint8_t gen = 0;
    if (base == "a12" || base == "a23" || base == "a13") {
      tok_alpha = Alphabet::Band;
      gen = base == "a12" ? kA12 : base == "a23" ? kA23 : kA13;
      if (strands != 3)
        throw ParseError("band generator '" + base + "' needs 3 strands",
                         tok_start);
    } else if (base.size() >= 2 && base[0] == 's' &&
               std::all_of(base.begin() + 1, base.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
      tok_alpha = Alphabet::Standard;
      long long idx = std::stoll(base.substr(1));
      if (idx < 1 || idx >= strands)
        throw ParseError("generator index out of range for " +
                             std::to_string(strands) + " strands",
                         tok_start);
      gen = static_cast<uint8_t>(idx - 1);
    } else {
      throw ParseError("unrecognized token '" + tok + "'", tok_start);
    }

    if (alphabet && *alphabet != tok_alpha)
      throw ParseError("mixed band and standard generators", tok_start);
    alphabet = tok_alpha;

    const int sign = exponent > 0 ? 1 : -1;
    for (long long k = 0; k < (exponent > 0 ? exponent : -exponent); ++k)
      letters.emplace_back(gen, sign);
  }

  Alphabet final_alpha =
      alphabet ? *alphabet
               : hint.value_or(strands == 3 ? Alphabet::Band
                                            : Alphabet::Standard);
  return BraidWord(strands, final_alpha, std::move(letters));
}

std::string BraidWord::generator_name(Alphabet a, uint8_t gen) {
  if (a == Alphabet::Band) {
    switch (gen) {
      case kA12: return "a12";
      case kA23: return "a23";
      case kA13: return "a13";
    }
    throw AlphabetError("invalid band generator");
  }
  return "s" + std::to_string(gen + 1);
}

std::string BraidWord::letter_name(Alphabet a, const Letter& l) {
  std::string s = generator_name(a, l.generator);
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string BraidWord::format() const {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long long run = static_cast<long long>(j - i);
    if (!first) out << ' ';
    first = false;
    out << generator_name(alphabet_, letters_[i].generator);
    const long long e = letters_[i].sign > 0 ? run : -run;
    if (e != 1) out << '^' << e;
    i = j;
  }
  return out.str();
}

Permutation BraidWord::permutation() const {
  std::vector<int> images(strands_);
  std::iota(images.begin(), images.end(), 0);
  for (int x = 0; x < strands_; ++x) {
    int cur = x;
    for (const Letter& l : letters_) {
      auto [a, b] = letter_transposition(alphabet_, l);
      if (cur == a)
        cur = b;
      else if (cur == b)
        cur = a;
    }
    images[x] = cur;
  }
  return Permutation(std::move(images));
}

int BraidWord::component_count() const { return permutation().cycle_count(); }

std::map<std::string, int> BraidWord::exponent_sums() const {
  std::map<std::string, int> sums;
  const int gens = alphabet_ == Alphabet::Band ? 3 : strands_ - 1;
  for (int g = 0; g < gens; ++g)
    sums[generator_name(alphabet_, static_cast<uint8_t>(g))] = 0;
  for (const Letter& l : letters_)
    sums[generator_name(alphabet_, l.generator)] += l.sign;
  return sums;
}

int BraidWord::writhe() const {
  int w = 0;
  for (const Letter& l : letters_) w += l.sign;
  return w;
}

BraidWord BraidWord::free_reduce() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(strands_, alphabet_, std::move(stack));
}

BraidWord BraidWord::mirror() const {
  std::vector<Letter> ls = letters_;
  for (Letter& l : ls) l.sign = static_cast<int8_t>(-l.sign);
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
  for (Letter& l : ls) l.sign = static_cast<int8_t>(-l.sign);
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> ls(letters_.begin() + k, letters_.end());
  ls.insert(ls.end(), letters_.begin(), letters_.begin() + k);
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::operator+(const BraidWord& o) const {
  if (strands_ != o.strands_ || alphabet_ != o.alphabet_)
    throw AlphabetError("cannot concatenate words over different alphabets");
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::with_sign_flipped(std::size_t i) const {
  std::vector<Letter> ls = letters_;
  ls.at(i).sign = static_cast<int8_t>(-ls.at(i).sign);
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::without_letter(std::size_t i) const {
  std::vector<Letter> ls = letters_;
  ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
  return BraidWord(strands_, alphabet_, std::move(ls));
}

BraidWord BraidWord::with_inserted(std::size_t pos,
                                   const std::vector<Letter>& ls) const {
  std::vector<Letter> out = letters_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), ls.begin(),
             ls.end());
  return BraidWord(strands_, alphabet_, std::move(out));
}

BraidWord BraidWord::band_to_standard() const {
  if (alphabet_ != Alphabet::Band)
    throw AlphabetError("band_to_standard needs a band word");
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    switch (l.generator) {
      case kA12:
        out.emplace_back(0, l.sign);
        break;
      case kA23:
        out.emplace_back(1, l.sign);
        break;
      case kA13:
        // a13 = s1^-1 s2 s1, a13^-1 = s1^-1 s2^-1 s1.
        out.emplace_back(0, -1);
        out.emplace_back(1, l.sign);
        out.emplace_back(0, 1);
        break;
    }
  }
  return BraidWord(strands_, Alphabet::Standard, std::move(out));
}

BraidWord BraidWord::standard_to_band() const {
  if (alphabet_ != Alphabet::Standard)
    throw AlphabetError("standard_to_band needs a standard word");
  if (strands_ != 3)
    throw AlphabetError("standard_to_band needs a 3-strand word");
  std::vector<Letter> out;
  for (const Letter& l : letters_)
    out.emplace_back(l.generator == 0 ? kA12 : kA23, l.sign);
  return BraidWord(3, Alphabet::Band, std::move(out));
}

}  // namespace propp
