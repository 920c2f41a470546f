#include "curvelift/intersection.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <utility>

namespace curvelift {

namespace {

// Germ of a strand at a vertex disk, walked outward (away from the disk).
// Out-germs advance forward along the path, in-germs backward.
struct Cursor {
  std::size_t passage;
  bool forward;
};

Cursor advance(const CurvePath& path, Cursor c) {
  const std::size_t L = path.size();
  if (c.forward) {
    c.passage = (c.passage + 1) % L;
  } else {
    c.passage = (c.passage + L - 1) % L;
  }
  return c;
}

EndId cursor_end(const CurvePath& path, const Cursor& c) {
  const VertexPassage& p = path.passage(c.passage);
  return c.forward ? p.out_end : p.in_end;
}

// True iff the chords {a1,a2} and {b1,b2} link in the cyclic order at their
// common vertex (all four ends distinct).
bool interleaved(const RibbonGraph& g, EndId a1, EndId a2, EndId b1, EndId b2) {
  const int v = g.vertex_of_end(a1);
  const int val = g.valence(v);
  const int pa = g.end_position(a1);
  const int span = (g.end_position(a2) - pa + val) % val;
  auto inside = [&](EndId e) {
    const int r = (g.end_position(e) - pa + val) % val;
    return r > 0 && r < span;
  };
  return inside(b1) != inside(b2);
}

std::pair<std::size_t, std::size_t> sorted_pair(std::size_t a, std::size_t b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

CurvePath::CurvePath(const RibbonGraph& g, std::vector<Traversal> steps)
    : steps_(std::move(steps)) {
  const std::size_t L = steps_.size();
  if (L == 0) throw RibbonError("empty curve path");
  for (std::size_t k = 0; k < L; ++k) {
    const Traversal& prev = steps_[(k + L - 1) % L];
    const Traversal& cur = steps_[k];
    if (g.to_vertex(prev) != g.from_vertex(cur)) {
      throw RibbonError("curve path is not closed at every step");
    }
    if (cur == prev.reversed()) {
      throw RibbonError("curve path is not freely reduced");
    }
  }
  for (std::size_t p = 1; p <= L / 2; ++p) {
    if (L % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < L && periodic; ++i) {
      periodic = steps_[i] == steps_[(i + p) % L];
    }
    if (periodic) throw NonPrimitiveError("curve path is a proper power");
  }
  passages_.reserve(L);
  for (std::size_t k = 0; k < L; ++k) {
    const Traversal& prev = steps_[(k + L - 1) % L];
    const Traversal& cur = steps_[k];
    passages_.push_back(VertexPassage{k, g.from_vertex(cur), arrival_end(prev),
                                      departure_end(cur)});
  }
}

CurvePath as_path(const CyclicWord& w, const RibbonGraph& g) {
  if (g.vertex_count() != 1) throw RibbonError("as_path requires a one-vertex graph");
  if (g.edge_count() != w.rank()) {
    throw RankMismatchError("word rank does not match graph edge labels");
  }
  if (!w.is_primitive()) throw NonPrimitiveError("word is a proper power");
  std::vector<int> edge_of_label(std::size_t(w.rank()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int lab = g.edge(e).label;
    if (lab < 0 || lab >= w.rank() || edge_of_label[std::size_t(lab)] != -1) {
      throw RibbonError("graph labels are not 0..rank-1");
    }
    edge_of_label[std::size_t(lab)] = e;
  }
  std::vector<Traversal> steps;
  steps.reserve(w.size());
  for (const Letter& l : w.letters()) {
    steps.push_back(Traversal{edge_of_label[std::size_t(l.gen)], l.inverse});
  }
  return CurvePath(g, std::move(steps));
}

bool crossing(const RibbonGraph& g, const CurvePath& path, std::size_t p,
              std::size_t q) {
  if (p == q) throw std::invalid_argument("crossing requires distinct passages");
  const VertexPassage& P = path.passage(p);
  const VertexPassage& Q = path.passage(q);
  if (P.vertex != Q.vertex) {
    throw std::invalid_argument("crossing requires passages at one vertex");
  }

  const bool ii = P.in_end == Q.in_end;
  const bool io = P.in_end == Q.out_end;
  const bool oi = P.out_end == Q.in_end;
  const bool oo = P.out_end == Q.out_end;
  const int shares = int(ii) + int(io) + int(oi) + int(oo);

  if (shares == 0) {
    return interleaved(g, P.in_end, P.out_end, Q.in_end, Q.out_end);
  }
  if (shares == 2) {
    // interior disk of a corridor; the crossing, if any, is claimed at an end
    return false;
  }

  // One shared end: this disk is an end of the corridor the two strands
  // share. Walk outward to the far end, decide whether the corridor crosses,
  // and let the lesser passage pair claim the crossing.
  EndId shared;
  EndId free_p, free_q;
  Cursor cp{p, false}, cq{q, false};
  if (ii) {
    shared = P.in_end;
    free_p = P.out_end;
    free_q = Q.out_end;
  } else if (io) {
    shared = P.in_end;
    free_p = P.out_end;
    free_q = Q.in_end;
    cq.forward = true;
  } else if (oi) {
    shared = P.out_end;
    free_p = P.in_end;
    free_q = Q.out_end;
    cp.forward = true;
  } else {
    shared = P.out_end;
    free_p = P.in_end;
    free_q = Q.in_end;
    cp.forward = true;
    cq.forward = true;
  }

  const bool near_first = g.ccw_less_from(shared, free_p, free_q);

  const std::size_t bound = 2 * path.size() + 2;
  for (std::size_t step = 0; step < bound; ++step) {
    const EndId entry = other_end(shared);
    cp = advance(path, cp);
    cq = advance(path, cq);
    const EndId contin_p = cursor_end(path, cp);
    const EndId contin_q = cursor_end(path, cq);
    if (contin_p != contin_q) {
      const bool far_first = g.ccw_less_from(entry, contin_p, contin_q);
      const bool corridor_crosses = (near_first == far_first);
      const auto near_pair = sorted_pair(p, q);
      const auto far_pair = sorted_pair(cp.passage, cq.passage);
      assert(near_pair != far_pair);
      return corridor_crosses && near_pair < far_pair;
    }
    shared = contin_p;
  }
  throw NonDivergentError("divergence walk exceeded its bound (internal bug)");
}

int self_intersection(const RibbonGraph& g, const CurvePath& path) {
  std::vector<std::vector<std::size_t>> by_vertex(std::size_t(g.vertex_count()));
  for (const VertexPassage& p : path.passages()) {
    by_vertex[std::size_t(p.vertex)].push_back(p.index);
  }
  int total = 0;
  for (const auto& group : by_vertex) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (crossing(g, path, group[i], group[j])) ++total;
      }
    }
  }
  return total;
}

int self_intersection(const CyclicWord& w, const RibbonGraph& g) {
  return self_intersection(g, as_path(w, g));
}

bool is_simple(const RibbonGraph& g, const CurvePath& path) {
  std::vector<std::vector<std::size_t>> by_vertex(std::size_t(g.vertex_count()));
  for (const VertexPassage& p : path.passages()) {
    by_vertex[std::size_t(p.vertex)].push_back(p.index);
  }
  for (const auto& group : by_vertex) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (crossing(g, path, group[i], group[j])) return false;
      }
    }
  }
  return true;
}

bool is_simple(const CyclicWord& w, const RibbonGraph& g) {
  return is_simple(g, as_path(w, g));
}

}  // namespace curvelift
