#include <doctest.h>

#include <algorithm>
#include <random>

#include "curvelift/intersection.hpp"
#include "curvelift/ribbon.hpp"
#include "curvelift/word.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace curvelift;
using curvelift::testing::brute_force_self_intersection;
using curvelift::testing::random_primitive_word;

namespace {

RibbonGraph mirrored(const RibbonGraph& g) {
  auto orders = g.vertex_orders();
  for (auto& cyc : orders) std::reverse(cyc.begin(), cyc.end());
  return RibbonGraph(g.vertex_count(), g.edges(), orders);
}

CyclicWord swap_labels(const CyclicWord& w) {
  std::vector<Letter> letters = w.letters();
  for (Letter& l : letters) l.gen = std::uint8_t(1 - l.gen);
  return CyclicWord(letters, 2);
}

}  // namespace

TEST_CASE("as_path basics") {
  const RibbonGraph pants = pants_base();
  CHECK(as_path(CyclicWord::parse("a", 2), pants).size() == 1);
  CHECK(as_path(CyclicWord::parse("abbbb", 2), pants).size() == 5);
  CHECK_THROWS_AS(as_path(CyclicWord::parse("abab", 2), pants), NonPrimitiveError);
}

TEST_CASE("calibration: gamma_1 crosses once, aB is a simple cuff") {
  const RibbonGraph pants = pants_base();
  const CurvePath ab = as_path(CyclicWord::parse("ab", 2), pants);
  REQUIRE(ab.size() == 2);
  CHECK(crossing(pants, ab, 0, 1));
  CHECK(self_intersection(CyclicWord::parse("ab", 2), pants) == 1);

  const CurvePath aB = as_path(CyclicWord::parse("aB", 2), pants);
  CHECK(!crossing(pants, aB, 0, 1));
  CHECK(self_intersection(CyclicWord::parse("aB", 2), pants) == 0);
}

TEST_CASE("gamma_n series on the pants") {
  const RibbonGraph pants = pants_base();
  for (long long n = 0; n <= 8; ++n) {
    CHECK(self_intersection(gamma_n(n), pants) == int(n));
  }
}

TEST_CASE("gamma_4 has exactly 4 crossing pairs") {
  const RibbonGraph pants = pants_base();
  const CurvePath p = as_path(gamma_n(4), pants);
  int pairs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (crossing(pants, p, i, j)) ++pairs;
    }
  }
  CHECK(pairs == 4);
}

TEST_CASE("simple examples") {
  const RibbonGraph pants = pants_base();
  CHECK(is_simple(CyclicWord::parse("a", 2), pants));
  CHECK(is_simple(CyclicWord::parse("b", 2), pants));
  CHECK(is_simple(CyclicWord::parse("aB", 2), pants));
  CHECK(!is_simple(CyclicWord::parse("abb", 2), pants));
}

TEST_CASE("crossing predicate is symmetric") {
  const RibbonGraph pants = pants_base();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = random_primitive_word(rng, 2, 2 + trial % 7);
    if (!w) continue;
    const CurvePath p = as_path(*w, pants);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        CHECK(crossing(pants, p, i, j) == crossing(pants, p, j, i));
      }
    }
  }
}

TEST_CASE("matches the brute-force taut-position oracle") {
  const RibbonGraph pants = pants_base();
  // the gamma family and the boundary family
  for (long long n = 0; n <= 6; ++n) {
    CHECK(self_intersection(gamma_n(n), pants) ==
          brute_force_self_intersection(gamma_n(n), pants));
  }
  // the commutator
  const CyclicWord comm = CyclicWord::parse("abAB", 2);
  CHECK(self_intersection(comm, pants) == brute_force_self_intersection(comm, pants));
  // random primitive words
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    auto w = random_primitive_word(rng, 2, 2 + trial % 6);
    if (!w) continue;
    ++checked;
    CAPTURE(w->render());
    CHECK(self_intersection(*w, pants) == brute_force_self_intersection(*w, pants));
  }
  CHECK(checked >= 100);
}

TEST_CASE("oracle agreement on the torus rose") {
  const RibbonGraph torus = rose(2, {0, 2, 1, 3});
  CHECK(self_intersection(CyclicWord::parse("ab", 2), torus) ==
        brute_force_self_intersection(CyclicWord::parse("ab", 2), torus));
  std::mt19937 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    auto w = random_primitive_word(rng, 2, 2 + trial % 6);
    if (!w) continue;
    ++checked;
    CAPTURE(w->render());
    CHECK(self_intersection(*w, torus) == brute_force_self_intersection(*w, torus));
  }
}

TEST_CASE("intersection is invariant under inversion") {
  const RibbonGraph pants = pants_base();
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 100; ++trial) {
    auto w = random_primitive_word(rng, 2, 1 + trial % 12);
    if (!w) continue;
    ++checked;
    CHECK(self_intersection(*w, pants) == self_intersection(w->inverted(), pants));
  }
}

TEST_CASE("label swap with the mirrored ribbon structure preserves intersection") {
  const RibbonGraph pants = pants_base();
  const RibbonGraph mirror = mirrored(pants);
  std::mt19937 rng(31);
  for (long long n = 0; n <= 6; ++n) {
    const CyclicWord ban = swap_labels(gamma_n(n));  // b * a^n
    CHECK(self_intersection(ban, mirror) == int(n));
  }
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    auto w = random_primitive_word(rng, 2, 1 + trial % 9);
    if (!w) continue;
    ++checked;
    CHECK(self_intersection(*w, pants) == self_intersection(swap_labels(*w), mirror));
  }
}

TEST_CASE("multi-vertex paths: boundary walks of a cover are simple") {
  const RibbonGraph pants = pants_base();
  const RibbonGraph c = cover_ribbon(pants, {{1, 2, 0}, {1, 0, 2}});
  for (const auto& walk : boundary_walks(c)) {
    const CurvePath p(c, walk_traversals(c, walk));
    CHECK(is_simple(c, p));
  }
}
