#include "curvelift/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace curvelift {

namespace {

// Booth's least-rotation algorithm on letter keys; returns the start index of
// the lexicographically least rotation.
std::size_t least_rotation(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  auto key = [&](std::size_t i) { return v[i % n].key(); };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = key(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != key(k + std::size_t(i) + 1)) {
      if (sj < key(k + std::size_t(i) + 1)) k = j - std::size_t(i) - 1;
      i = f[std::size_t(i)];
    }
    if (i == -1 && sj != key(k)) {
      if (sj < key(k)) k = j;
      f[j - k] = -1;
    } else if (i == -1) {
      f[j - k] = 0;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

CyclicWord::CyclicWord(std::vector<Letter> letters, int rank) : rank_(rank) {
  if (rank < 1 || rank > 26) {
    throw RankMismatchError("rank must be between 1 and 26");
  }
  for (const Letter& l : letters) {
    if (int(l.gen) >= rank) {
      throw RankMismatchError("letter generator index exceeds rank");
    }
  }
  std::vector<Letter> w = free_reduce(letters);
  // cyclic reduction: cancel inverse first/last pairs
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  w.assign(w.begin() + std::ptrdiff_t(lo), w.begin() + std::ptrdiff_t(hi));
  if (w.empty()) {
    throw TrivialWordError("word reduces to the identity");
  }
  const std::size_t r = least_rotation(w);
  std::rotate(w.begin(), w.begin() + std::ptrdiff_t(r), w.end());
  letters_ = std::move(w);
}

CyclicWord CyclicWord::parse(const std::string& text, int rank) {
  if (text.empty()) {
    throw TrivialWordError("empty word");
  }
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    Letter l;
    if (c >= 'a' && c < char('a' + rank)) {
      l = Letter{std::uint8_t(c - 'a'), false};
    } else if (c >= 'A' && c < char('A' + rank)) {
      l = Letter{std::uint8_t(c - 'A'), true};
    } else {
      throw InvalidCharacterError(std::string("invalid character '") + c +
                                  "' for rank " + std::to_string(rank));
    }
    letters.push_back(l);
  }
  return CyclicWord(std::move(letters), rank);
}

std::string CyclicWord::render() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) s.push_back(l.to_char());
  return s;
}

CyclicWord CyclicWord::inverted() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l = l.inverted();
  return CyclicWord(std::move(rev), rank_);
}

int CyclicWord::power_exponent() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) {
      periodic = letters_[i] == letters_[(i + p) % n];
    }
    if (periodic) return int(n / p);
  }
  return 1;
}

std::pair<CyclicWord, int> CyclicWord::power_root() const {
  const int e = power_exponent();
  const std::size_t p = letters_.size() / std::size_t(e);
  std::vector<Letter> root(letters_.begin(), letters_.begin() + std::ptrdiff_t(p));
  return {CyclicWord(std::move(root), rank_), e};
}

CyclicWord gamma_n(long long n) {
  if (n < 0) {
    throw std::invalid_argument("gamma_n requires n >= 0");
  }
  if (n > 50'000'000) {
    throw std::invalid_argument("gamma_n: n too large to materialize");
  }
  std::vector<Letter> letters;
  letters.reserve(std::size_t(n) + 1);
  letters.push_back(Letter{0, false});
  for (long long i = 0; i < n; ++i) letters.push_back(Letter{1, false});
  return CyclicWord(std::move(letters), 2);
}

}  // namespace curvelift
