#include "curvelift/cover.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace curvelift {

namespace {

std::vector<std::vector<int>> invert_all(const std::vector<std::vector<int>>& sigma) {
  std::vector<std::vector<int>> inv(sigma.size());
  for (std::size_t g = 0; g < sigma.size(); ++g) {
    inv[g].assign(sigma[g].size(), -1);
    for (std::size_t i = 0; i < sigma[g].size(); ++i) {
      inv[g][std::size_t(sigma[g][i])] = int(i);
    }
  }
  return inv;
}

}  // namespace

void PermCover::validate() const {
  if (degree < 1) throw CoverError("cover degree must be >= 1");
  if (sigma.empty()) throw CoverError("cover needs at least one generator");
  for (const auto& s : sigma) {
    if (int(s.size()) != degree) throw CoverError("permutation size mismatch");
    std::vector<char> seen(std::size_t(degree), 0);
    for (int im : s) {
      if (im < 0 || im >= degree || seen[std::size_t(im)]) {
        throw CoverError("sigma is not a permutation");
      }
      seen[std::size_t(im)] = 1;
    }
  }
  // transitivity
  std::vector<char> seen(std::size_t(degree), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  auto inv = invert_all(sigma);
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < sigma.size(); ++g) {
      for (int t : {sigma[g][std::size_t(s)], inv[g][std::size_t(s)]}) {
        if (!seen[std::size_t(t)]) {
          seen[std::size_t(t)] = 1;
          ++reached;
          stack.push_back(t);
        }
      }
    }
  }
  if (reached != degree) throw CoverError("sheet action is not transitive");
}

PermCover canonicalize(const PermCover& c) {
  c.validate();
  const int d = c.degree;
  const int r = c.rank();
  const auto inv = invert_all(c.sigma);
  std::vector<int> relabel(std::size_t(d), -1);  // old sheet -> new number
  std::vector<int> order;                        // new number -> old sheet
  order.reserve(std::size_t(d));
  relabel[0] = 0;
  order.push_back(0);
  for (int pos = 0; pos < int(order.size()); ++pos) {
    const int s = order[std::size_t(pos)];
    for (int g = 0; g < r; ++g) {
      for (int t : {c.sigma[std::size_t(g)][std::size_t(s)], inv[std::size_t(g)][std::size_t(s)]}) {
        if (relabel[std::size_t(t)] == -1) {
          relabel[std::size_t(t)] = int(order.size());
          order.push_back(t);
        }
      }
    }
  }
  PermCover out;
  out.degree = d;
  out.sigma.assign(std::size_t(r), std::vector<int>(std::size_t(d)));
  for (int g = 0; g < r; ++g) {
    for (int i = 0; i < d; ++i) {
      out.sigma[std::size_t(g)][std::size_t(i)] =
          relabel[std::size_t(c.sigma[std::size_t(g)][std::size_t(order[std::size_t(i)])])];
    }
  }
  return out;
}

bool is_canonical(const PermCover& c) { return canonicalize(c) == c; }

std::vector<int> sigma_of_word(const PermCover& c, const CyclicWord& w) {
  if (w.rank() != c.rank()) throw RankMismatchError("word rank does not match cover");
  const auto inv = invert_all(c.sigma);
  std::vector<int> result(std::size_t(c.degree));
  for (int s = 0; s < c.degree; ++s) {
    int cur = s;
    for (const Letter& l : w.letters()) {
      cur = l.inverse ? inv[l.gen][std::size_t(cur)] : c.sigma[l.gen][std::size_t(cur)];
    }
    result[std::size_t(s)] = cur;
  }
  return result;
}

Elevation lift_elevation(const PermCover& c, const CyclicWord& w,
                         const RibbonGraph& cover_graph, int start_sheet) {
  const int d = c.degree;
  const auto inv = invert_all(c.sigma);
  std::vector<Traversal> steps;
  int s = start_sheet;
  int wraps = 0;
  do {
    for (const Letter& l : w.letters()) {
      if (!l.inverse) {
        steps.push_back(Traversal{int(l.gen) * d + s, false});
        s = c.sigma[l.gen][std::size_t(s)];
      } else {
        const int j = inv[l.gen][std::size_t(s)];
        steps.push_back(Traversal{int(l.gen) * d + j, true});
        s = j;
      }
    }
    ++wraps;
  } while (s != start_sheet);
  return Elevation{start_sheet, wraps, CurvePath(cover_graph, std::move(steps))};
}

std::vector<Elevation> elevations(const PermCover& c, const CyclicWord& w,
                                  const RibbonGraph& base) {
  if (!w.is_primitive()) throw NonPrimitiveError("word is a proper power");
  const RibbonGraph cover_graph = cover_ribbon(base, c.sigma);
  const std::vector<int> sw = sigma_of_word(c, w);
  std::vector<char> seen(std::size_t(c.degree), 0);
  std::vector<Elevation> out;
  for (int s = 0; s < c.degree; ++s) {
    if (seen[std::size_t(s)]) continue;
    for (int t = s; !seen[std::size_t(t)]; t = sw[std::size_t(t)]) seen[std::size_t(t)] = 1;
    out.push_back(lift_elevation(c, w, cover_graph, s));
  }
  return out;
}

std::uint64_t hall_count(int degree, int rank) {
  if (degree < 1 || rank < 1) throw std::invalid_argument("hall_count needs degree, rank >= 1");
  if (degree > 19 || rank > 3) {
    throw std::invalid_argument("hall_count would overflow 64-bit arithmetic");
  }
  std::vector<std::uint64_t> fact(std::size_t(degree) + 1, 1);
  for (int i = 1; i <= degree; ++i) fact[std::size_t(i)] = fact[std::size_t(i - 1)] * std::uint64_t(i);
  auto fpow = [&](int m) {
    std::uint64_t x = 1;
    for (int i = 1; i < rank; ++i) x *= fact[std::size_t(m)];
    return x;
  };
  std::vector<std::uint64_t> a(std::size_t(degree) + 1, 0);
  for (int d = 1; d <= degree; ++d) {
    std::uint64_t v = std::uint64_t(d) * fpow(d);
    for (int k = 1; k < d; ++k) {
      v -= fpow(d - k) * a[std::size_t(k)];
    }
    a[std::size_t(d)] = v;
  }
  return a[std::size_t(degree)];
}

namespace {

// Orderly generation of canonical covers: permutation tables are filled slot
// by slot (sheet-major, directions g, g^-1 per generator), and a fresh sheet
// may only be introduced as the next unused number. Every connected based
// cover is produced exactly once, already canonical.
struct CoverSearch {
  int d, rank;
  std::vector<int> sigma, inv;  // g*d + s; -1 = undefined
  int fresh = 1;
  int slot = 0;

  CoverSearch(int d_, int rank_)
      : d(d_), rank(rank_), sigma(std::size_t(d_) * std::size_t(rank_), -1),
        inv(std::size_t(d_) * std::size_t(rank_), -1) {}

  int total_slots() const { return d * 2 * rank; }

  PermCover to_cover() const {
    PermCover c;
    c.degree = d;
    c.sigma.assign(std::size_t(rank), std::vector<int>(std::size_t(d)));
    for (int g = 0; g < rank; ++g) {
      for (int s = 0; s < d; ++s) {
        c.sigma[std::size_t(g)][std::size_t(s)] = sigma[std::size_t(g * d + s)];
      }
    }
    return c;
  }
};

// Runs the DFS from `st`; returns false if the visitor stopped the walk.
bool dfs(CoverSearch& st, std::uint64_t& visited,
         const std::function<bool(const PermCover&)>& visit) {
  // skip slots already forced by earlier assignments
  int slot = st.slot;
  while (slot < st.total_slots()) {
    const int s = slot / (2 * st.rank);
    const int dir = slot % (2 * st.rank);
    const int g = dir / 2;
    if (s >= st.fresh) return true;  // orbit of sheet 0 closed early: prune
    const bool fwd = (dir % 2) == 0;
    const int idx = g * st.d + s;
    if ((fwd ? st.sigma[std::size_t(idx)] : st.inv[std::size_t(idx)]) != -1) {
      ++slot;
      continue;
    }
    // branch on the value of this slot
    for (int t = 0; t <= st.fresh && t < st.d; ++t) {
      const int a = fwd ? g * st.d + s : g * st.d + t;  // sigma index to set
      const int b = fwd ? g * st.d + t : g * st.d + s;  // inv index to set
      if (fwd ? st.inv[std::size_t(g * st.d + t)] != -1
              : st.sigma[std::size_t(g * st.d + t)] != -1) {
        continue;
      }
      st.sigma[std::size_t(a)] = fwd ? t : s;
      st.inv[std::size_t(b)] = fwd ? s : t;
      const int saved_fresh = st.fresh;
      const int saved_slot = st.slot;
      if (t == st.fresh) ++st.fresh;
      st.slot = slot + 1;
      if (!dfs(st, visited, visit)) return false;
      st.slot = saved_slot;
      st.fresh = saved_fresh;
      st.sigma[std::size_t(a)] = -1;
      st.inv[std::size_t(b)] = -1;
    }
    return true;
  }
  assert(st.fresh == st.d);
  ++visited;
  return visit(st.to_cover());
}

// Splits the search tree at `budget` branching levels into subtree roots, in
// DFS order. Complete tables land in the list as leaves.
void split_shards(CoverSearch st, int budget, std::vector<CoverSearch>& out) {
  int slot = st.slot;
  while (slot < st.total_slots()) {
    const int s = slot / (2 * st.rank);
    const int dir = slot % (2 * st.rank);
    const int g = dir / 2;
    if (s >= st.fresh) return;  // dead branch
    const bool fwd = (dir % 2) == 0;
    const int idx = g * st.d + s;
    if ((fwd ? st.sigma[std::size_t(idx)] : st.inv[std::size_t(idx)]) != -1) {
      ++slot;
      continue;
    }
    if (budget == 0) {
      st.slot = slot;
      out.push_back(std::move(st));
      return;
    }
    for (int t = 0; t <= st.fresh && t < st.d; ++t) {
      if (fwd ? st.inv[std::size_t(g * st.d + t)] != -1
              : st.sigma[std::size_t(g * st.d + t)] != -1) {
        continue;
      }
      CoverSearch child = st;
      const int a = fwd ? g * st.d + s : g * st.d + t;
      const int b = fwd ? g * st.d + t : g * st.d + s;
      child.sigma[std::size_t(a)] = fwd ? t : s;
      child.inv[std::size_t(b)] = fwd ? s : t;
      if (t == child.fresh) ++child.fresh;
      child.slot = slot + 1;
      split_shards(std::move(child), budget - 1, out);
    }
    return;
  }
  st.slot = slot;
  out.push_back(std::move(st));  // complete table
}

std::vector<CoverSearch> make_shards(int degree, int rank, int jobs) {
  std::vector<CoverSearch> shards;
  int budget = 1;
  while (true) {
    shards.clear();
    split_shards(CoverSearch(degree, rank), budget, shards);
    if (int(shards.size()) >= 4 * jobs || budget >= degree) break;
    ++budget;
  }
  return shards;
}

}  // namespace

std::uint64_t enumerate_covers(int degree, int rank,
                               const std::function<bool(const PermCover&)>& visit) {
  if (degree < 1 || rank < 1) {
    throw std::invalid_argument("enumerate_covers needs degree, rank >= 1");
  }
  CoverSearch st(degree, rank);
  std::uint64_t visited = 0;
  dfs(st, visited, visit);
  return visited;
}

std::uint64_t count_covers(int degree, int rank, int jobs) {
  if (jobs <= 1) {
    return enumerate_covers(degree, rank, [](const PermCover&) { return true; });
  }
  auto shards = make_shards(degree, rank, jobs);
  std::vector<std::uint64_t> counts(shards.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      CoverSearch st = shards[i];
      std::uint64_t n = 0;
      dfs(st, n, [](const PermCover&) { return true; });
      counts[i] = n;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t(0));
}

std::optional<PermCover> search_covers(int degree, int rank, int jobs,
                                       const std::function<bool(const PermCover&)>& pred) {
  if (jobs <= 1) {
    std::optional<PermCover> hit;
    enumerate_covers(degree, rank, [&](const PermCover& c) {
      if (pred(c)) {
        hit = c;
        return false;
      }
      return true;
    });
    return hit;
  }
  auto shards = make_shards(degree, rank, jobs);
  std::vector<std::optional<PermCover>> hits(shards.size());
  std::atomic<std::size_t> best{shards.size()};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      if (i > best.load()) continue;  // a hit in an earlier shard already wins
      CoverSearch st = shards[i];
      std::uint64_t n = 0;
      std::optional<PermCover> local;
      dfs(st, n, [&](const PermCover& c) {
        if (pred(c)) {
          local = c;
          return false;
        }
        return i <= best.load();  // abandon shard if it can no longer win
      });
      if (local) {
        hits[i] = std::move(local);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  const std::size_t b = best.load();
  if (b < shards.size()) return hits[b];
  return std::nullopt;
}

std::optional<Elevation> first_simple_closed_lift(const PermCover& c,
                                                  const CyclicWord& w,
                                                  const RibbonGraph& base) {
  const std::vector<int> sw = sigma_of_word(c, w);
  std::optional<RibbonGraph> cover_graph;
  for (int s = 0; s < c.degree; ++s) {
    if (sw[std::size_t(s)] != s) continue;
    if (!cover_graph) cover_graph = cover_ribbon(base, c.sigma);
    Elevation lift = lift_elevation(c, w, *cover_graph, s);
    if (is_simple(*cover_graph, lift.path)) return lift;
  }
  return std::nullopt;
}

std::optional<SimpleLiftWitness> min_simple_lift_degree(const CyclicWord& w, int cap,
                                                        int jobs,
                                                        const CoverCatalog* catalog) {
  if (cap < 1) throw std::invalid_argument("search cap must be >= 1");
  if (!w.is_primitive()) throw NonPrimitiveError("word is a proper power");
  const RibbonGraph base = pants_base();
  if (w.rank() != base.edge_count()) {
    throw RankMismatchError("min_simple_lift_degree expects rank-2 words");
  }
  for (int d = 1; d <= cap; ++d) {
    std::optional<PermCover> hit;
    if (catalog != nullptr && catalog->has(d)) {
      for (const PermCover& c : catalog->load(d)) {
        if (first_simple_closed_lift(c, w, base)) {
          hit = c;
          break;
        }
      }
    } else {
      hit = search_covers(d, w.rank(), jobs, [&](const PermCover& c) {
        return first_simple_closed_lift(c, w, base).has_value();
      });
    }
    if (hit) {
      Elevation lift = *first_simple_closed_lift(*hit, w, base);
      return SimpleLiftWitness{d, std::move(*hit), std::move(lift)};
    }
  }
  return std::nullopt;
}

std::string cover_record(const PermCover& c) {
  if (c.rank() != 2) throw CoverError("catalog records are rank-2");
  nlohmann::ordered_json j;
  j["d"] = c.degree;
  auto one_indexed = [](const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + 1;
    return out;
  };
  j["sigma_a"] = one_indexed(c.sigma[0]);
  j["sigma_b"] = one_indexed(c.sigma[1]);
  return j.dump();
}

PermCover parse_cover_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  PermCover c;
  c.degree = j.at("d").get<int>();
  auto zero_indexed = [&](const char* key) {
    std::vector<int> v = j.at(key).get<std::vector<int>>();
    for (int& x : v) x -= 1;
    return v;
  };
  c.sigma = {zero_indexed("sigma_a"), zero_indexed("sigma_b")};
  c.validate();
  return c;
}

std::filesystem::path CoverCatalog::path_for(int degree) const {
  return dir_ / ("covers-rank2-d" + std::to_string(degree) + ".jsonl");
}

bool CoverCatalog::has(int degree) const {
  return std::filesystem::exists(path_for(degree));
}

std::filesystem::path CoverCatalog::emit(int degree) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(degree);
  std::ofstream out(path);
  if (!out) throw CoverError("cannot write catalog file " + path.string());
  enumerate_covers(degree, 2, [&](const PermCover& c) {
    out << cover_record(c) << '\n';
    return true;
  });
  out.close();
  return path;
}

std::vector<PermCover> CoverCatalog::load(int degree) const {
  const auto path = path_for(degree);
  auto read_all = [&]() {
    std::vector<PermCover> covers;
    std::ifstream in(path);
    if (!in) throw CoverError("cannot read catalog file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      PermCover c = parse_cover_record(line);
      if (c.degree != degree) throw CoverError("catalog record has wrong degree");
      covers.push_back(std::move(c));
    }
    return covers;
  };
  std::vector<PermCover> covers;
  bool ok = true;
  try {
    covers = read_all();
  } catch (const std::exception&) {
    ok = false;
  }
  if (ok && std::uint64_t(covers.size()) != hall_count(degree, 2)) ok = false;
  if (!ok) {
    std::cerr << "warning: catalog " << path.string()
              << " failed validation against hall_count; regenerating\n";
    emit(degree);
    covers = read_all();
  }
  return covers;
}

}  // namespace curvelift
