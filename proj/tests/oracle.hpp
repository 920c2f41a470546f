#pragma once

// Brute-force self-intersection oracle, independent of the corridor-based
// crossing predicate. A taut representative carried by the ribbon graph keeps
// the strands inside each edge band parallel, so it is determined by one
// total order per band (read as the ccw point order at the band's tail arc;
// the gluing of an oriented band reverses the arc orientation, so the head
// arc carries the reversed order). Crossings then happen only inside vertex
// disks, where they are forced by chord interleaving. The minimum of the disk
// crossing count over all band orders is the self-intersection number.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "curvelift/intersection.hpp"
#include "curvelift/ribbon.hpp"

namespace curvelift::testing {

inline int count_disk_crossings(const RibbonGraph& g, const CurvePath& path,
                                const std::vector<std::vector<std::size_t>>& band_order) {
  const std::size_t L = path.size();
  // point ids: 2m = departure point of traversal m, 2m+1 = arrival point
  std::vector<int> point_vertex(2 * L), point_rank(2 * L);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int rank = 0;
    for (EndId end : g.vertex_orders()[std::size_t(v)]) {
      const int e = edge_of(end);
      std::vector<std::size_t> strands = band_order[std::size_t(e)];
      if (is_head(end)) std::reverse(strands.begin(), strands.end());
      for (std::size_t m : strands) {
        const Traversal& t = path.steps()[m];
        // the strand's point on this arc: departure if the traversal leaves
        // through this end, arrival if it enters through it
        const bool departs_here = departure_end(t) == end;
        const std::size_t point = 2 * m + (departs_here ? 0 : 1);
        point_vertex[point] = v;
        point_rank[point] = rank++;
      }
    }
  }
  std::vector<int> vertex_points(std::size_t(g.vertex_count()), 0);
  for (std::size_t p = 0; p < 2 * L; ++p) vertex_points[std::size_t(point_vertex[p])]++;

  auto chord = [&](std::size_t k) {
    const std::size_t in_point = 2 * ((k + L - 1) % L) + 1;
    const std::size_t out_point = 2 * k;
    return std::pair{in_point, out_point};
  };
  int total = 0;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      auto [a1, a2] = chord(i);
      auto [b1, b2] = chord(j);
      const int v = point_vertex[a1];
      if (point_vertex[b1] != v) continue;
      const int n = vertex_points[std::size_t(v)];
      const int pa = point_rank[a1];
      const int span = (point_rank[a2] - pa + n) % n;
      auto inside = [&](std::size_t p) {
        const int r = (point_rank[p] - pa + n) % n;
        return r > 0 && r < span;
      };
      if (inside(b1) != inside(b2)) ++total;
    }
  }
  return total;
}

// Minimum disk-crossing count over all per-band strand orders.
inline int brute_force_self_intersection(const RibbonGraph& g, const CurvePath& path) {
  const int E = g.edge_count();
  std::vector<std::vector<std::size_t>> bands(static_cast<std::size_t>(E));
  for (std::size_t m = 0; m < path.size(); ++m) {
    bands[std::size_t(path.steps()[m].edge)].push_back(m);
  }
  std::uint64_t configs = 1;
  for (const auto& b : bands) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= b.size(); ++i) f *= i;
    configs *= f;
    if (configs > 10'000'000) throw std::runtime_error("oracle: too many configurations");
  }
  std::vector<std::vector<std::size_t>> order = bands;
  int best = -1;
  // odometer over the product of per-band permutations
  std::vector<std::vector<std::size_t>> perms(bands.size());
  for (std::size_t e = 0; e < bands.size(); ++e) {
    perms[e].resize(bands[e].size());
    std::iota(perms[e].begin(), perms[e].end(), 0);
  }
  for (;;) {
    for (std::size_t e = 0; e < bands.size(); ++e) {
      for (std::size_t i = 0; i < bands[e].size(); ++i) {
        order[e][i] = bands[e][perms[e][i]];
      }
    }
    const int c = count_disk_crossings(g, path, order);
    if (best < 0 || c < best) best = c;
    std::size_t e = 0;
    while (e < perms.size() && !std::next_permutation(perms[e].begin(), perms[e].end())) {
      ++e;  // this band wrapped around; advance the next one
    }
    if (e == perms.size()) break;
  }
  return best;
}

inline int brute_force_self_intersection(const CyclicWord& w, const RibbonGraph& g) {
  return brute_force_self_intersection(g, as_path(w, g));
}

}  // namespace curvelift::testing
