#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace curvelift {

struct RibbonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Directed edge of a ribbon graph. Labels are generator indices on one-vertex
// bases and their covers. The two half-edge ends of edge e are numbered
// 2e (tail, attached at `from`) and 2e+1 (head, attached at `to`).
struct Edge {
  int from = 0;
  int to = 0;
  int label = 0;
};

using EndId = int;

inline int edge_of(EndId e) { return e >> 1; }
inline bool is_head(EndId e) { return (e & 1) != 0; }
inline EndId tail_end(int edge) { return 2 * edge; }
inline EndId head_end(int edge) { return 2 * edge + 1; }
inline EndId other_end(EndId e) { return e ^ 1; }

// One step along a curve carried by the graph: edge e traversed tail-to-head
// (reverse = false) or head-to-tail (reverse = true).
struct Traversal {
  int edge = 0;
  bool reverse = false;

  Traversal reversed() const { return Traversal{edge, !reverse}; }
  friend bool operator==(const Traversal& a, const Traversal& b) {
    return a.edge == b.edge && a.reverse == b.reverse;
  }
};

inline EndId departure_end(const Traversal& t) {
  return t.reverse ? head_end(t.edge) : tail_end(t.edge);
}
inline EndId arrival_end(const Traversal& t) {
  return t.reverse ? tail_end(t.edge) : head_end(t.edge);
}

// Graph with a cyclic (counterclockwise) order of half-edge ends at each
// vertex; determines a thickened oriented surface with boundary.
class RibbonGraph {
 public:
  RibbonGraph(int vertices, std::vector<Edge> edges,
              std::vector<std::vector<EndId>> vertex_orders);

  int vertex_count() const { return vertices_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[std::size_t(e)]; }
  const std::vector<std::vector<EndId>>& vertex_orders() const { return orders_; }

  int vertex_of_end(EndId e) const { return end_vertex_[std::size_t(e)]; }
  int end_position(EndId e) const { return end_pos_[std::size_t(e)]; }
  int valence(int v) const { return int(orders_[std::size_t(v)].size()); }

  // Cyclic successor of an end in its vertex's counterclockwise order.
  EndId next_at_vertex(EndId e) const;

  // True if e1 precedes e2 in the linear order obtained by cutting the cyclic
  // order of base's vertex just after base. All three ends must be distinct
  // and attached to the same vertex.
  bool ccw_less_from(EndId base, EndId e1, EndId e2) const;

  int from_vertex(const Traversal& t) const {
    return t.reverse ? edges_[std::size_t(t.edge)].to : edges_[std::size_t(t.edge)].from;
  }
  int to_vertex(const Traversal& t) const {
    return t.reverse ? edges_[std::size_t(t.edge)].from : edges_[std::size_t(t.edge)].to;
  }

 private:
  int vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EndId>> orders_;
  std::vector<int> end_vertex_;
  std::vector<int> end_pos_;
};

// One boundary component of the thickened surface. Each element of `ends`
// stands for one half-edge side; the walk starts at its least end id and the
// walks are listed by their least end id.
struct BoundaryWalk {
  std::vector<EndId> ends;
};

std::vector<BoundaryWalk> boundary_walks(const RibbonGraph& g);

// The edge traversals read along a boundary walk (one per side).
std::vector<Traversal> walk_traversals(const RibbonGraph& g, const BoundaryWalk& w);

struct SurfaceInvariants {
  int euler = 0;
  int boundary_components = 0;
  int genus = 0;
};

SurfaceInvariants euler_and_genus(const RibbonGraph& g);

// One-vertex rose with `rank` labeled loops and the given cyclic order of its
// 2*rank ends.
RibbonGraph rose(int rank, const std::vector<EndId>& vertex_order);

// The calibrated pair of pants: one vertex, loops a and b, cyclic order
// (a-tail, a-head, b-head, b-tail). This is the structure with three boundary
// walks whose curve a*b has self-intersection 1; the third cuff reads "aB".
RibbonGraph pants_base();

// Degree-k cover of a one-vertex base. sigma[g] sends sheet i to the sheet
// reached along the g-labeled edge; each cover vertex carries the pullback of
// the base vertex's cyclic order. Edge (g, sheet i) gets id g*k + i.
RibbonGraph cover_ribbon(const RibbonGraph& base,
                         const std::vector<std::vector<int>>& sigma);

}  // namespace curvelift
