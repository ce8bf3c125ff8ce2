#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace propp {

enum class Alphabet : uint8_t { Band, Standard };

// Band generator indices for the B3 presentation <a12, a23, a13>.
inline constexpr uint8_t kA12 = 0;
inline constexpr uint8_t kA23 = 1;
inline constexpr uint8_t kA13 = 2;

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct AlphabetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAKnotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One signed generator letter. For band words the generator is one of
/// kA12/kA23/kA13; for standard words it is the 0-based sigma index.
struct Letter {
  uint8_t generator = 0;
  int8_t sign = 1;

  Letter() = default;
  Letter(uint8_t g, int s) : generator(g), sign(static_cast<int8_t>(s)) {}

  Letter inverse() const { return Letter(generator, -sign); }

  bool operator==(const Letter& o) const {
    return generator == o.generator && sign == o.sign;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

/// Permutation of {0..n-1}; composition is left-to-right (the first braid
/// letter acts first).
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }
  bool is_identity() const;
  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;
  /// Sorted cycle lengths (conjugation invariant).
  std::vector<int> cycle_type() const;
  /// this, then other.
  Permutation then(const Permutation& other) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

/// An immutable braid word over a declared strand count and alphabet.
class BraidWord {
 public:
  /// Empty word.
  BraidWord(int strands, Alphabet alphabet);
  /// Validating constructor: every letter must fit the alphabet and strand
  /// count (band requires exactly 3 strands).
  BraidWord(int strands, Alphabet alphabet, std::vector<Letter> letters);

  /// Parses the word grammar: whitespace-separated tokens `a12|a13|a23` or
  /// `s<k>`, optional `^<nonzero int>` exponent. An empty text yields the
  /// empty word (alphabet from `hint`, else band iff strands == 3).
  static BraidWord parse(const std::string& text, int strands,
                         std::optional<Alphabet> hint = std::nullopt);

  std::string format() const;
  static std::string letter_name(Alphabet a, const Letter& l);
  /// Generator name without sign, e.g. "a13" or "s2".
  static std::string generator_name(Alphabet a, uint8_t gen);

  int strands() const { return strands_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& letter(std::size_t i) const { return letters_[i]; }

  Permutation permutation() const;
  int component_count() const;
  std::map<std::string, int> exponent_sums() const;
  int writhe() const;

  BraidWord free_reduce() const;
  BraidWord mirror() const;
  BraidWord inverse() const;
  BraidWord rotated(std::size_t k) const;
  BraidWord operator+(const BraidWord& o) const;

  BraidWord with_sign_flipped(std::size_t i) const;
  BraidWord without_letter(std::size_t i) const;
  BraidWord with_inserted(std::size_t pos, const std::vector<Letter>& ls) const;

  /// a12 -> s1, a23 -> s2, a13 -> s1^-1 s2 s1 (inverses reversed).
  BraidWord band_to_standard() const;
  /// Only s1/s2 letters of a 3-strand standard word map to a12/a23.
  BraidWord standard_to_band() const;

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && alphabet_ == o.alphabet_ &&
           letters_ == o.letters_;
  }
  bool operator!=(const BraidWord& o) const { return !(*this == o); }

 private:
  int strands_;
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// The two strands (0-based) transposed by a letter.
std::pair<int, int> letter_transposition(Alphabet a, const Letter& l);

}  // namespace propp
