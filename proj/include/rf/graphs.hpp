#pragma once

// Finite simple graphs on {1..d}, stable sets, perfection via the
// odd-hole/odd-antihole characterization, and isomorphism-reduced
// enumeration of small graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rf/exactmath.hpp"

namespace rf {

struct GuardError : Error {
  using Error::Error;
};

// Vertices are 1..d externally, 0..d-1 internally. Adjacency is kept as
// per-vertex bitmasks, which caps d at 31; every use here has d <= 10.
struct Graph {
  int d = 0;
  std::vector<uint32_t> adj;

  Graph() = default;
  explicit Graph(int d_) : d(d_), adj(d_, 0) {
    if (d_ < 0 || d_ > 31) throw Error("graph: vertex count out of range");
  }

  Graph(int d_, const std::vector<std::pair<int, int>>& edges_1based) : Graph(d_) {
    for (auto [i, j] : edges_1based) add_edge(i, j);
  }

  void add_edge(int i, int j) {  // 1-based
    if (i < 1 || i > d || j < 1 || j > d) throw Error("graph: vertex index out of range");
    if (i == j) throw Error("graph: loops not allowed");
    adj[i - 1] |= (1u << (j - 1));
    adj[j - 1] |= (1u << (i - 1));
  }

  bool has_edge(int i, int j) const {  // 1-based
    return (adj[i - 1] >> (j - 1)) & 1u;
  }

  int edge_count() const {
    int c = 0;
    for (int v = 0; v < d; ++v) c += std::popcount(adj[v]);
    return c / 2;
  }

  // normalized (i < j), 1-based, lexicographic
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (has_edge(i, j)) es.emplace_back(i, j);
    return es;
  }

  bool operator==(const Graph& o) const { return d == o.d && adj == o.adj; }
};

inline Graph complement(const Graph& g) {
  Graph h(g.d);
  uint32_t full = (g.d == 31) ? 0x7fffffffu : ((1u << g.d) - 1);
  for (int v = 0; v < g.d; ++v) h.adj[v] = full & ~g.adj[v] & ~(1u << v);
  return h;
}

// Induced subgraph on the 1-based vertex list, reindexed to 1..|vs| in order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return h;
}

inline bool is_stable_mask(const Graph& g, uint32_t mask) {
  for (uint32_t m = mask; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (g.adj[v] & mask) return false;
  }
  return true;
}

// All stable sets as bitmasks, ascending. Includes 0 and all singletons.
inline std::vector<uint32_t> stable_sets(const Graph& g) {
  std::vector<uint32_t> out;
  uint32_t full = (1u << g.d);
  for (uint32_t mask = 0; mask < full; ++mask)
    if (is_stable_mask(g, mask)) out.push_back(mask);
  return out;
}

inline int max_stable_size(const Graph& g) {
  int best = 0;
  for (uint32_t mask : stable_sets(g)) best = std::max(best, std::popcount(mask));
  return best;
}

inline int clique_number(const Graph& g) { return max_stable_size(complement(g)); }

namespace detail {

inline bool colorable(const Graph& g, int t) {
  if (g.d == 0) return true;
  std::vector<int> color(g.d, -1);
  // vertex order: descending degree helps pruning
  std::vector<int> order(g.d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(g.adj[a]) > std::popcount(g.adj[b]);
  });
  auto rec = [&](auto&& self, int idx, int used) -> bool {
    if (idx == g.d) return true;
    int v = order[idx];
    int limit = std::min(t, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (uint32_t m = g.adj[v]; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

// Smallest number of stable sets covering the vertex set (exact).
inline int chromatic_number(const Graph& g) {
  if (g.d == 0) return 0;
  for (int t = clique_number(g); t <= g.d; ++t)
    if (detail::colorable(g, t)) return t;
  return g.d;
}

// Induced chordless odd cycle of length >= 5, as a 1-based vertex walk.
inline std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
  uint32_t full = (1u << g.d);
  for (uint32_t mask = 0; mask < full; ++mask) {
    int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    // induced subgraph must be 2-regular and connected, i.e. one cycle
    bool regular = true;
    for (uint32_t m = mask; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (std::popcount(g.adj[v] & mask) != 2) {
        regular = false;
        break;
      }
    }
    if (!regular) continue;
    // walk the cycle
    int start = std::countr_zero(mask);
    std::vector<int> cycle{start};
    uint32_t seen = 1u << start;
    int cur = start;
    while (true) {
      uint32_t nxt = g.adj[cur] & mask & ~seen;
      if (!nxt) break;
      cur = std::countr_zero(nxt);
      seen |= 1u << cur;
      cycle.push_back(cur);
    }
    if (static_cast<int>(cycle.size()) != k) continue;  // disconnected
    for (int& v : cycle) ++v;
    return cycle;
  }
  return std::nullopt;
}

// Strong perfect graph theorem as a decision procedure: perfect iff neither
// the graph nor its complement has an odd hole.
inline bool is_perfect(const Graph& g) {
  return !find_odd_hole(g) && !find_odd_hole(complement(g));
}

// ---------------------------------------------------------------------------
// canonical labeling by brute force over all d! relabelings

namespace detail {

inline int pair_index(int d, int i, int j) {  // 0-based i < j
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

inline uint32_t edge_mask(const Graph& g) {
  uint32_t mask = 0;
  for (int i = 0; i < g.d; ++i)
    for (int j = i + 1; j < g.d; ++j)
      if (g.adj[i] >> j & 1u) mask |= 1u << pair_index(g.d, i, j);
  return mask;
}

inline Graph graph_from_edge_mask(int d, uint32_t mask) {
  Graph g(d);
  int idx = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j, ++idx)
      if (mask >> idx & 1u) g.add_edge(i + 1, j + 1);
  return g;
}

// per-permutation map on pair indices
inline std::vector<std::vector<int>> pair_permutations(int d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> tables;
  do {
    std::vector<int> tab(d * (d - 1) / 2);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        tab[pair_index(d, i, j)] = pair_index(d, a, b);
      }
    tables.push_back(std::move(tab));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

inline uint32_t apply_pair_permutation(uint32_t mask, const std::vector<int>& tab) {
  uint32_t out = 0;
  for (uint32_t m = mask; m;) {
    int p = std::countr_zero(m);
    m &= m - 1;
    out |= 1u << tab[p];
  }
  return out;
}

}  // namespace detail

// Lexicographically minimal edge set over all relabelings; equal canonical
// forms iff isomorphic. Cost guard: d <= 8.
inline std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
  if (g.d > 8) throw GuardError("canonical_form: d > 8");
  uint32_t mask = detail::edge_mask(g);
  uint32_t best = mask;
  for (const auto& tab : detail::pair_permutations(g.d))
    best = std::min(best, detail::apply_pair_permutation(mask, tab));
  return detail::graph_from_edge_mask(g.d, best).edges();
}

// Representatives (canonically labeled) of all isomorphism classes of
// perfect graphs on n vertices, in canonical edge-mask order.
inline std::vector<Graph> perfect_class_reps(int n) {
  if (n < 1 || n > 8) throw GuardError("perfect census: n out of range 1..8");
  auto tables = detail::pair_permutations(n);
  std::vector<Graph> reps;
  uint32_t total = 1u << (n * (n - 1) / 2);
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& tab : tables)
      if (detail::apply_pair_permutation(mask, tab) < mask) {
        canonical = false;
        break;
      }
    if (!canonical) continue;
    Graph g = detail::graph_from_edge_mask(n, mask);
    if (is_perfect(g)) reps.push_back(std::move(g));
  }
  return reps;
}

// Representatives of all isomorphism classes (no perfection filter).
inline std::vector<Graph> graph_class_reps(int n) {
  if (n < 1 || n > 8) throw GuardError("graph census: n out of range 1..8");
  auto tables = detail::pair_permutations(n);
  std::vector<Graph> reps;
  uint32_t total = 1u << (n * (n - 1) / 2);
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& tab : tables)
      if (detail::apply_pair_permutation(mask, tab) < mask) {
        canonical = false;
        break;
      }
    if (canonical) reps.push_back(detail::graph_from_edge_mask(n, mask));
  }
  return reps;
}

inline long long count_perfect(int n) {
  return static_cast<long long>(perfect_class_reps(n).size());
}

// unordered pairs with repetition
inline long long count_perfect_pairs(int n) {
  long long k = count_perfect(n);
  return k * (k + 1) / 2;
}

// ---------------------------------------------------------------------------
// I/O: text "d" then "i j" lines; JSON {"d": int, "edges": [[i,j],...]}

inline Graph read_graph_text(std::istream& in) {
  int d = 0;
  if (!(in >> d)) throw ParseError("graph: expected vertex count");
  Graph g(d);
  int i, j;
  while (in >> i >> j) g.add_edge(i, j);
  return g;
}

inline void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.d << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

}  // namespace rf
