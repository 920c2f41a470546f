#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "curvelift/ribbon.hpp"
#include "curvelift/word.hpp"

using namespace curvelift;

namespace {

// Canonical cyclic string of the free-group labels read along a walk.
std::string walk_cyclic_string(const RibbonGraph& g, const BoundaryWalk& w) {
  std::vector<Letter> letters;
  for (const Traversal& t : walk_traversals(g, w)) {
    letters.push_back(Letter{std::uint8_t(g.edge(t.edge).label), t.reverse});
  }
  return CyclicWord(letters, 26).render();
}

}  // namespace

TEST_CASE("one-petal rose with order (tail, head) is an annulus") {
  const RibbonGraph annulus = rose(1, {0, 1});
  const auto walks = boundary_walks(annulus);
  REQUIRE(walks.size() == 2);
  CHECK(walks[0].ends.size() + walks[1].ends.size() == 2u * std::size_t(annulus.edge_count()));
  const auto inv = euler_and_genus(annulus);
  CHECK(inv.euler == 0);
  CHECK(inv.genus == 0);
}

TEST_CASE("interleaved rose-2 is a one-holed torus") {
  // (a-tail, b-tail, a-head, b-head)
  const RibbonGraph torus = rose(2, {0, 2, 1, 3});
  const auto inv = euler_and_genus(torus);
  CHECK(inv.euler == -1);
  CHECK(inv.boundary_components == 1);
  CHECK(inv.genus == 1);
}

TEST_CASE("pants_base is a pair of pants") {
  const RibbonGraph pants = pants_base();
  const auto inv = euler_and_genus(pants);
  CHECK(inv.euler == -1);
  CHECK(inv.boundary_components == 3);
  CHECK(inv.genus == 0);
}

TEST_CASE("pants cuffs read a, b and aB") {
  const RibbonGraph pants = pants_base();
  const auto walks = boundary_walks(pants);
  REQUIRE(walks.size() == 3);
  std::vector<std::string> cuffs;
  for (const auto& w : walks) cuffs.push_back(walk_cyclic_string(pants, w));
  std::sort(cuffs.begin(), cuffs.end());
  const std::vector<std::string> expected = {"A", "aB", "b"};
  CHECK(cuffs == expected);
  // the third cuff is the class of aB
  CHECK(std::find(cuffs.begin(), cuffs.end(),
                  CyclicWord::parse("aB", 2).render()) != cuffs.end());
}

TEST_CASE("walk lengths sum to twice the edge count") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int rank = 1 + int(rng() % 3);
    std::vector<EndId> order(2 * std::size_t(rank));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = EndId(i);
    std::shuffle(order.begin(), order.end(), rng);
    const RibbonGraph g = rose(rank, order);
    std::size_t total = 0;
    for (const auto& w : boundary_walks(g)) total += w.ends.size();
    CHECK(total == 2 * std::size_t(g.edge_count()));
  }
}

TEST_CASE("identity cover reproduces the base") {
  const RibbonGraph pants = pants_base();
  const RibbonGraph c = cover_ribbon(pants, {{0}, {0}});
  CHECK(c.vertex_count() == 1);
  CHECK(c.edge_count() == 2);
  CHECK(c.vertex_orders() == pants.vertex_orders());
}

TEST_CASE("degree-2 cover with sigma_a = (1 2)") {
  const RibbonGraph pants = pants_base();
  const RibbonGraph c = cover_ribbon(pants, {{1, 0}, {0, 1}});
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 4);
  CHECK(euler_and_genus(c).euler == -2);
}

TEST_CASE("Euler characteristic multiplies by the degree") {
  const RibbonGraph pants = pants_base();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + int(rng() % 5);
    std::vector<std::vector<int>> sigma(2);
    for (auto& s : sigma) {
      s.resize(std::size_t(k));
      for (int i = 0; i < k; ++i) s[std::size_t(i)] = i;
      std::shuffle(s.begin(), s.end(), rng);
    }
    try {
      const RibbonGraph c = cover_ribbon(pants, sigma);
      CHECK(euler_and_genus(c).euler == -k);
    } catch (const RibbonError&) {
      // disconnected sample; skip
    }
  }
}

TEST_CASE("cover boundary walks project to powers of base walks") {
  const RibbonGraph pants = pants_base();
  std::vector<std::string> base_cuffs;
  for (const auto& w : boundary_walks(pants)) {
    base_cuffs.push_back(walk_cyclic_string(pants, w));
  }
  const RibbonGraph c = cover_ribbon(pants, {{1, 2, 0}, {1, 0, 2}});
  for (const auto& w : boundary_walks(c)) {
    std::vector<Letter> letters;
    for (const Traversal& t : walk_traversals(c, w)) {
      letters.push_back(Letter{std::uint8_t(c.edge(t.edge).label), t.reverse});
    }
    const CyclicWord cyc(letters, 2);
    const auto [root, exponent] = cyc.power_root();
    CHECK(std::find(base_cuffs.begin(), base_cuffs.end(), root.render()) !=
          base_cuffs.end());
    CHECK(exponent >= 1);
  }
}

TEST_CASE("validation rejects malformed graphs") {
  CHECK_THROWS_AS(rose(2, {0, 1, 2, 2}), RibbonError);
  CHECK_THROWS_AS(rose(2, {0, 1, 2}), RibbonError);
  // disconnected: two vertices, one loop each
  CHECK_THROWS_AS(RibbonGraph(2, {Edge{0, 0, 0}, Edge{1, 1, 1}}, {{0, 1}, {2, 3}}),
                  RibbonError);
  CHECK_THROWS_AS(cover_ribbon(pants_base(), {{0, 1}, {1, 0, 2}}), RibbonError);
}
