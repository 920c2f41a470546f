#pragma once

#include <optional>
#include <random>
#include <string>

#include "curvelift/word.hpp"

namespace curvelift::testing {

// Uniformly random freely and cyclically reduced word of the given length.
inline std::optional<CyclicWord> random_reduced_word(std::mt19937& rng, int rank,
                                                     std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Letter> letters;
    bool ok = true;
    for (std::size_t i = 0; i < length; ++i) {
      Letter l{};
      int guard = 0;
      do {
        const int k = pick(rng);
        l = Letter{std::uint8_t(k / 2), (k % 2) != 0};
        if (++guard > 1000) break;
      } while ((!letters.empty() && l == letters.back().inverted()) ||
               (i + 1 == length && l == letters.front().inverted()));
      letters.push_back(l);
    }
    if (!ok) continue;
    try {
      CyclicWord w(letters, rank);
      if (w.size() == length) return w;
    } catch (const TrivialWordError&) {
    }
  }
  return std::nullopt;
}

inline std::optional<CyclicWord> random_primitive_word(std::mt19937& rng, int rank,
                                                       std::size_t length) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto w = random_reduced_word(rng, rank, length);
    if (w && w->is_primitive()) return w;
  }
  return std::nullopt;
}

}  // namespace curvelift::testing
