#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curvelift/intersection.hpp"
#include "curvelift/ribbon.hpp"
#include "curvelift/word.hpp"

namespace curvelift {

struct CoverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree-d cover of a rose as one permutation of the sheets {0..d-1} per
// generator; sigma[g][i] is the sheet reached from sheet i along the g-edge.
// The sheet action must be transitive.
struct PermCover {
  int degree = 1;
  std::vector<std::vector<int>> sigma;

  int rank() const { return int(sigma.size()); }
  void validate() const;

  friend bool operator==(const PermCover& a, const PermCover& b) {
    return a.degree == b.degree && a.sigma == b.sigma;
  }
};

// Relabels sheets by first-visit order of a breadth-first scan from sheet 0
// reading directions g0, g0^-1, g1, g1^-1, ... Enumerated covers are already
// in this form.
PermCover canonicalize(const PermCover& c);
bool is_canonical(const PermCover& c);

// The permutation obtained by reading w sheet-by-sheet (inverse letters act
// by inverse permutations).
std::vector<int> sigma_of_word(const PermCover& c, const CyclicWord& w);

// Connected component of the preimage of a curve: it wraps the base curve
// `degree` times starting from `start_sheet` (the least sheet of its cycle).
struct Elevation {
  int start_sheet = 0;
  int degree = 1;
  CurvePath path;
};

// Lift of w starting at sheet s in the cover ribbon graph `cover_graph`
// (which must be cover_ribbon(base, c.sigma)).
Elevation lift_elevation(const PermCover& c, const CyclicWord& w,
                         const RibbonGraph& cover_graph, int start_sheet);

// One elevation per cycle of sigma_of_word, listed by least start sheet.
std::vector<Elevation> elevations(const PermCover& c, const CyclicWord& w,
                                  const RibbonGraph& base);

// Number of index-d subgroups of the rank-r free group:
//   a_d = d*(d!)^(r-1) - sum_{k=1}^{d-1} ((d-k)!)^(r-1) * a_k
std::uint64_t hall_count(int degree, int rank = 2);

// Visits every connected degree-d cover exactly once, in canonical form, in a
// fixed (lexicographic) order. The visitor returns false to stop early; the
// number of covers visited is returned.
std::uint64_t enumerate_covers(int degree, int rank,
                               const std::function<bool(const PermCover&)>& visit);

// Parallel count over canonical-prefix shards; result is schedule-independent.
std::uint64_t count_covers(int degree, int rank, int jobs);

// First cover in canonical enumeration order satisfying pred, or nullopt.
// With jobs > 1 the search is sharded by canonical prefix and pred must be
// safe to call concurrently; the result does not depend on the schedule.
std::optional<PermCover> search_covers(int degree, int rank, int jobs,
                                       const std::function<bool(const PermCover&)>& pred);

struct SimpleLiftWitness {
  int degree = 1;
  PermCover cover;
  Elevation lift;
};

// JSON Lines record for a cover, 1-indexed image arrays:
//   {"d": k, "sigma_a": [...], "sigma_b": [...]}
std::string cover_record(const PermCover& c);
PermCover parse_cover_record(const std::string& line);

// On-disk catalog of enumerated covers, one file per degree, reused when
// present and regenerated (with a warning to stderr) on a count mismatch
// against hall_count.
class CoverCatalog {
 public:
  explicit CoverCatalog(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(int degree) const;
  bool has(int degree) const;
  std::vector<PermCover> load(int degree) const;  // validates, may regenerate
  std::filesystem::path emit(int degree) const;

 private:
  std::filesystem::path dir_;
};

// Smallest d <= cap such that some connected degree-d cover has a simple
// degree-1 elevation of w, with the first witness in canonical search order.
// Degrees present in `catalog` are scanned from disk. nullopt encodes
// NotFoundUpTo(cap).
std::optional<SimpleLiftWitness> min_simple_lift_degree(
    const CyclicWord& w, int cap, int jobs = 1,
    const CoverCatalog* catalog = nullptr);

// True iff some sheet fixed by sigma_of_word carries a simple lift; fills the
// witness for the least such sheet.
std::optional<Elevation> first_simple_closed_lift(const PermCover& c,
                                                  const CyclicWord& w,
                                                  const RibbonGraph& base);

}  // namespace curvelift
