#pragma once

#include <cstddef>
#include <vector>

#include "curvelift/ribbon.hpp"
#include "curvelift/word.hpp"

namespace curvelift {

// Raised when a divergence walk exceeds its bound. Cannot occur for primitive
// paths; reaching it signals a bug.
struct NonDivergentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strand of a curve through one vertex disk: the ends through which it
// arrives and departs. Passage k of a path sits between traversals k-1 and k.
struct VertexPassage {
  std::size_t index = 0;
  int vertex = 0;
  EndId in_end = 0;
  EndId out_end = 0;
};

// Closed directed edge path in a ribbon graph, freely reduced and primitive
// as a cyclic traversal sequence.
class CurvePath {
 public:
  CurvePath(const RibbonGraph& g, std::vector<Traversal> steps);

  std::size_t size() const { return steps_.size(); }
  const std::vector<Traversal>& steps() const { return steps_; }
  const std::vector<VertexPassage>& passages() const { return passages_; }
  const VertexPassage& passage(std::size_t k) const { return passages_[k]; }

 private:
  std::vector<Traversal> steps_;
  std::vector<VertexPassage> passages_;
};

// Reads a primitive cyclic word as an edge path around the single vertex of a
// rose whose loops are labeled 0..rank-1. Throws NonPrimitiveError.
CurvePath as_path(const CyclicWord& w, const RibbonGraph& g);

// Linked-pair test: true iff the strands of passages p and q (which must pass
// the same vertex) cross there in the taut position of the curve. Strand
// germs sharing an end are ordered by following both strands outward through
// their common edges until they diverge; the corridor so traversed crosses at
// exactly one of its two end disks, selected by the least passage pair.
bool crossing(const RibbonGraph& g, const CurvePath& path, std::size_t p, std::size_t q);

// Geometric self-intersection number: the number of unordered crossing
// passage pairs.
int self_intersection(const RibbonGraph& g, const CurvePath& path);
int self_intersection(const CyclicWord& w, const RibbonGraph& g);

bool is_simple(const RibbonGraph& g, const CurvePath& path);
bool is_simple(const CyclicWord& w, const RibbonGraph& g);

}  // namespace curvelift
