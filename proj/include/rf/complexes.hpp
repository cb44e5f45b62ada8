#pragma once

// Simplicial complexes on {1..d}: closure constructors, the stable-set
// complex of a graph, flagness, incidence configurations, and induced
// subcomplexes. Faces are vertex bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "rf/configuration.hpp"
#include "rf/graphs.hpp"

namespace rf {

struct SimplicialComplex {
  int d = 0;
  std::vector<uint64_t> faces;  // sorted ascending as masks; contains 0 and all singletons

  bool has_face(uint64_t f) const { return std::binary_search(faces.begin(), faces.end(), f); }

  std::vector<int> face_vertices(uint64_t f) const {  // 1-based
    std::vector<int> vs;
    for (int v = 0; v < d; ++v)
      if (f >> v & 1u) vs.push_back(v + 1);
    return vs;
  }

  bool operator==(const SimplicialComplex& o) const { return d == o.d && faces == o.faces; }
};

namespace detail {

inline SimplicialComplex make_complex(int d, std::set<uint64_t> faceset) {
  faceset.insert(0);
  for (int v = 0; v < d; ++v) faceset.insert(uint64_t{1} << v);
  SimplicialComplex sc;
  sc.d = d;
  sc.faces.assign(faceset.begin(), faceset.end());
  return sc;
}

}  // namespace detail

// Down-closure of the given facets plus all singletons and the empty face.
inline SimplicialComplex from_facets(int d, const std::vector<std::vector<int>>& facets) {
  if (d < 0 || d > 62) throw Error("complex: vertex count out of range");
  std::set<uint64_t> closure;
  for (const auto& f : facets) {
    uint64_t mask = 0;
    for (int v : f) {
      if (v < 1 || v > d) throw Error("complex: vertex index out of range");
      mask |= uint64_t{1} << (v - 1);
    }
    // all subsets of mask
    uint64_t sub = mask;
    for (;;) {
      closure.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  return detail::make_complex(d, std::move(closure));
}

inline SimplicialComplex stable_set_complex(const Graph& g) {
  std::set<uint64_t> faces;
  for (uint32_t s : stable_sets(g)) faces.insert(s);
  return detail::make_complex(g.d, std::move(faces));
}

// Minimal nonfaces: subsets not in the complex all of whose proper subsets are.
inline std::vector<uint64_t> minimal_nonfaces(const SimplicialComplex& sc) {
  std::vector<uint64_t> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << sc.d); ++mask) {
    if (sc.has_face(mask)) continue;
    bool minimal = true;
    for (int v = 0; v < sc.d && minimal; ++v)
      if (mask >> v & 1u)
        if (!sc.has_face(mask & ~(uint64_t{1} << v))) minimal = false;
    if (minimal) out.push_back(mask);
  }
  return out;
}

// If every minimal nonface is an edge, the complex is the stable-set complex
// of the graph whose edges are exactly those nonfaces.
inline std::optional<Graph> is_flag(const SimplicialComplex& sc) {
  Graph g(sc.d);
  for (uint64_t nf : minimal_nonfaces(sc)) {
    if (std::popcount(nf) != 2) return std::nullopt;
    auto vs = sc.face_vertices(nf);
    g.add_edge(vs[0], vs[1]);
  }
  return g;
}

// Faces contained in V, reindexed to 1..|V| preserving vertex order.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& sc,
                                            const std::vector<int>& vertices_1based) {
  uint64_t vmask = 0;
  std::vector<int> newindex(sc.d, -1);
  {
    int k = 0;
    std::vector<int> sorted = vertices_1based;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
      if (v < 1 || v > sc.d) throw Error("induced_subcomplex: vertex out of range");
      vmask |= uint64_t{1} << (v - 1);
      newindex[v - 1] = k++;
    }
  }
  std::set<uint64_t> faces;
  for (uint64_t f : sc.faces) {
    if (f & ~vmask) continue;
    uint64_t g = 0;
    for (int v = 0; v < sc.d; ++v)
      if (f >> v & 1u) g |= uint64_t{1} << newindex[v];
    faces.insert(g);
  }
  return detail::make_complex(std::popcount(vmask), std::move(faces));
}

namespace detail {

inline IntVec indicator_vec(int d, uint64_t mask) {
  IntVec v(d, Int(0));
  for (int i = 0; i < d; ++i)
    if (mask >> i & 1u) v[i] = 1;
  return v;
}

// canonical column order: cardinality descending, then lexicographic on the
// support (so componentwise-smaller columns get later variables)
inline bool column_order_less(int d, uint64_t a, uint64_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca > cb;
  for (int v = 0; v < d; ++v) {
    bool ia = a >> v & 1u, ib = b >> v & 1u;
    if (ia != ib) return ia;  // support containing the smaller vertex first
  }
  return false;
}

}  // namespace detail

// Incidence configuration: one 0/1 column per nonempty face, zero column as
// the sharp flag. Column order makes divisibility compatible with index order.
inline Configuration incidence_matrix(const SimplicialComplex& sc) {
  std::vector<uint64_t> nonempty;
  for (uint64_t f : sc.faces)
    if (f) nonempty.push_back(f);
  std::sort(nonempty.begin(), nonempty.end(),
            [&](uint64_t a, uint64_t b) { return detail::column_order_less(sc.d, a, b); });
  std::vector<IntVec> cols;
  cols.reserve(nonempty.size());
  for (uint64_t f : nonempty) cols.push_back(detail::indicator_vec(sc.d, f));
  return Configuration(sc.d, std::move(cols), /*sharp=*/true);
}

// All simplicial complexes on exactly [d] (every singleton present),
// enumerated by brute force; intended for d <= 4 sweeps.
inline std::vector<SimplicialComplex> all_complexes_on(int d) {
  if (d < 0 || d > 4) throw GuardError("all_complexes_on: d out of range 0..4");
  std::vector<uint64_t> optional_faces;  // size >= 2
  for (uint64_t mask = 1; mask < (uint64_t{1} << d); ++mask)
    if (std::popcount(mask) >= 2) optional_faces.push_back(mask);
  int n = static_cast<int>(optional_faces.size());
  std::vector<SimplicialComplex> out;
  for (uint64_t pick = 0; pick < (uint64_t{1} << n); ++pick) {
    std::set<uint64_t> faces;
    for (int i = 0; i < n; ++i)
      if (pick >> i & 1u) faces.insert(optional_faces[i]);
    // down-closed?
    bool closed = true;
    for (uint64_t f : faces) {
      for (int v = 0; v < d && closed; ++v)
        if (f >> v & 1u) {
          uint64_t sub = f & ~(uint64_t{1} << v);
          if (std::popcount(sub) >= 2 && !faces.count(sub)) closed = false;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(detail::make_complex(d, std::move(faces)));
  }
  return out;
}

// Text format: first line "d", then one facet per line (closure on load).
inline SimplicialComplex read_complex_text(std::istream& in) {
  int d = 0;
  if (!(in >> d)) throw ParseError("complex: expected vertex count");
  std::vector<std::vector<int>> facets;
  std::string line;
  std::getline(in, line);  // rest of the first line
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!f.empty()) facets.push_back(std::move(f));
  }
  return from_facets(d, facets);
}

inline void write_complex_text(std::ostream& out, const SimplicialComplex& sc) {
  out << sc.d << "\n";
  // facets = maximal faces
  for (uint64_t f : sc.faces) {
    if (!f) continue;
    bool maximal = true;
    for (uint64_t g : sc.faces)
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    bool first = true;
    for (int v : sc.face_vertices(f)) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << "\n";
  }
}

}  // namespace rf
