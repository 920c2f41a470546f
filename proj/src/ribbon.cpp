#include "curvelift/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace curvelift {

RibbonGraph::RibbonGraph(int vertices, std::vector<Edge> edges,
                         std::vector<std::vector<EndId>> vertex_orders)
    : vertices_(vertices), edges_(std::move(edges)), orders_(std::move(vertex_orders)) {
  if (vertices_ < 1) throw RibbonError("ribbon graph needs at least one vertex");
  if (int(orders_.size()) != vertices_) {
    throw RibbonError("vertex order list size does not match vertex count");
  }
  const int ends = 2 * int(edges_.size());
  end_vertex_.assign(std::size_t(ends), -1);
  end_pos_.assign(std::size_t(ends), -1);
  for (int v = 0; v < vertices_; ++v) {
    const auto& cyc = orders_[std::size_t(v)];
    for (int i = 0; i < int(cyc.size()); ++i) {
      EndId e = cyc[std::size_t(i)];
      if (e < 0 || e >= ends) throw RibbonError("end id out of range");
      if (end_vertex_[std::size_t(e)] != -1) throw RibbonError("end listed twice");
      end_vertex_[std::size_t(e)] = v;
      end_pos_[std::size_t(e)] = i;
    }
  }
  for (int e = 0; e < int(edges_.size()); ++e) {
    const Edge& ed = edges_[std::size_t(e)];
    if (ed.from < 0 || ed.from >= vertices_ || ed.to < 0 || ed.to >= vertices_) {
      throw RibbonError("edge endpoint out of range");
    }
    if (end_vertex_[std::size_t(tail_end(e))] != ed.from) {
      throw RibbonError("tail end not attached at its origin vertex");
    }
    if (end_vertex_[std::size_t(head_end(e))] != ed.to) {
      throw RibbonError("head end not attached at its terminus vertex");
    }
  }
  // connectivity
  std::vector<char> seen(std::size_t(vertices_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (EndId e : orders_[std::size_t(v)]) {
      int w = end_vertex_[std::size_t(other_end(e))];
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_) throw RibbonError("ribbon graph is not connected");
}

EndId RibbonGraph::next_at_vertex(EndId e) const {
  const auto& cyc = orders_[std::size_t(end_vertex_[std::size_t(e)])];
  int i = end_pos_[std::size_t(e)];
  return cyc[std::size_t((i + 1) % int(cyc.size()))];
}

bool RibbonGraph::ccw_less_from(EndId base, EndId e1, EndId e2) const {
  const int v = end_vertex_[std::size_t(base)];
  const int val = valence(v);
  const int pb = end_pos_[std::size_t(base)];
  const int r1 = (end_pos_[std::size_t(e1)] - pb + val) % val;
  const int r2 = (end_pos_[std::size_t(e2)] - pb + val) % val;
  if (r1 == 0 || r2 == 0 || r1 == r2) {
    throw RibbonError("ccw_less_from requires three distinct ends at one vertex");
  }
  return r1 < r2;
}

std::vector<BoundaryWalk> boundary_walks(const RibbonGraph& g) {
  const int ends = 2 * g.edge_count();
  std::vector<char> used(std::size_t(std::max(ends, 1)), 0);
  std::vector<BoundaryWalk> walks;
  for (EndId start = 0; start < ends; ++start) {
    if (used[std::size_t(start)]) continue;
    BoundaryWalk w;
    EndId x = start;
    do {
      used[std::size_t(x)] = 1;
      w.ends.push_back(x);
      x = other_end(g.next_at_vertex(x));
    } while (x != start);
    walks.push_back(std::move(w));
  }
  return walks;
}

std::vector<Traversal> walk_traversals(const RibbonGraph& g, const BoundaryWalk& w) {
  std::vector<Traversal> ts;
  ts.reserve(w.ends.size());
  for (EndId x : w.ends) {
    EndId dep = g.next_at_vertex(x);
    ts.push_back(Traversal{edge_of(dep), is_head(dep)});
  }
  return ts;
}

SurfaceInvariants euler_and_genus(const RibbonGraph& g) {
  SurfaceInvariants s;
  s.euler = g.vertex_count() - g.edge_count();
  s.boundary_components = int(boundary_walks(g).size());
  const int twice_genus = 2 - s.euler - s.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw RibbonError("inconsistent surface invariants (internal bug)");
  }
  s.genus = twice_genus / 2;
  return s;
}

RibbonGraph rose(int rank, const std::vector<EndId>& vertex_order) {
  std::vector<Edge> edges;
  edges.reserve(std::size_t(rank));
  for (int g = 0; g < rank; ++g) edges.push_back(Edge{0, 0, g});
  return RibbonGraph(1, std::move(edges), {vertex_order});
}

RibbonGraph pants_base() {
  // ends: a-tail=0, a-head=1, b-tail=2, b-head=3
  return rose(2, {0, 1, 3, 2});
}

RibbonGraph cover_ribbon(const RibbonGraph& base,
                         const std::vector<std::vector<int>>& sigma) {
  if (base.vertex_count() != 1) {
    throw RibbonError("cover_ribbon requires a one-vertex base");
  }
  const int rank = base.edge_count();
  if (int(sigma.size()) != rank) {
    throw RibbonError("permutation count does not match base edge labels");
  }
  for (int g = 0; g < rank; ++g) {
    if (base.edge(g).label != g) {
      throw RibbonError("base edges must be labeled 0..rank-1 in order");
    }
  }
  const int k = sigma.empty() ? 1 : int(sigma[0].size());
  std::vector<std::vector<int>> inv(std::size_t(rank), std::vector<int>(std::size_t(k), -1));
  for (int g = 0; g < rank; ++g) {
    if (int(sigma[std::size_t(g)].size()) != k) {
      throw RibbonError("permutations must share one degree");
    }
    for (int i = 0; i < k; ++i) {
      int im = sigma[std::size_t(g)][std::size_t(i)];
      if (im < 0 || im >= k || inv[std::size_t(g)][std::size_t(im)] != -1) {
        throw RibbonError("sigma is not a permutation");
      }
      inv[std::size_t(g)][std::size_t(im)] = i;
    }
  }
  std::vector<Edge> edges(std::size_t(rank * k));
  for (int g = 0; g < rank; ++g) {
    for (int i = 0; i < k; ++i) {
      edges[std::size_t(g * k + i)] = Edge{i, sigma[std::size_t(g)][std::size_t(i)], g};
    }
  }
  std::vector<std::vector<EndId>> orders(static_cast<std::size_t>(k));
  const auto& base_cyc = base.vertex_orders()[0];
  for (int i = 0; i < k; ++i) {
    auto& cyc = orders[std::size_t(i)];
    cyc.reserve(base_cyc.size());
    for (EndId be : base_cyc) {
      const int g = edge_of(be);
      if (!is_head(be)) {
        cyc.push_back(tail_end(g * k + i));
      } else {
        cyc.push_back(head_end(g * k + inv[std::size_t(g)][std::size_t(i)]));
      }
    }
  }
  return RibbonGraph(k, std::move(edges), std::move(orders));
}

}  // namespace curvelift
