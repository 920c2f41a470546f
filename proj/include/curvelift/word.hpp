#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvelift {

struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidCharacterError : WordError {
  using WordError::WordError;
};
struct TrivialWordError : WordError {
  using WordError::WordError;
};
struct RankMismatchError : WordError {
  using WordError::WordError;
};
struct NonPrimitiveError : WordError {
  using WordError::WordError;
};

// One letter of a word in a rank-r free group. Text form: 'a'+gen for the
// generator itself, 'A'+gen for its inverse, so the letter order used for
// canonical rotations is a < A < b < B < ...
struct Letter {
  std::uint8_t gen = 0;
  bool inverse = false;

  int key() const { return 2 * int(gen) + (inverse ? 1 : 0); }
  Letter inverted() const { return Letter{gen, !inverse}; }
  char to_char() const {
    return char((inverse ? 'A' : 'a') + gen);
  }

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.gen == y.gen && x.inverse == y.inverse;
  }
  friend bool operator<(const Letter& x, const Letter& y) {
    return x.key() < y.key();
  }
};

// A cyclically reduced word in a rank-r free group, considered up to cyclic
// rotation. The stored representative is the lexicographically least
// rotation, so equal cyclic words compare equal letter-by-letter.
class CyclicWord {
 public:
  CyclicWord(std::vector<Letter> letters, int rank);

  // Parses text over {a..}/{A..}. Throws InvalidCharacterError for characters
  // outside the rank-r alphabet and TrivialWordError if the word reduces to
  // the identity.
  static CyclicWord parse(const std::string& text, int rank);

  std::string render() const;

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& letter(std::size_t i) const { return letters_[i % letters_.size()]; }

  CyclicWord inverted() const;

  // Decomposes the word as root^exponent with root not a proper power.
  std::pair<CyclicWord, int> power_root() const;
  int power_exponent() const;
  bool is_primitive() const { return power_exponent() == 1; }

  friend bool operator==(const CyclicWord& x, const CyclicWord& y) {
    return x.rank_ == y.rank_ && x.letters_ == y.letters_;
  }
  friend bool operator!=(const CyclicWord& x, const CyclicWord& y) {
    return !(x == y);
  }

 private:
  int rank_;
  std::vector<Letter> letters_;
};

// gamma_n = a * b^n, the curve family driving all growth bounds; n >= 0
// (n = 0 gives the word "a").
CyclicWord gamma_n(long long n);

}  // namespace curvelift
