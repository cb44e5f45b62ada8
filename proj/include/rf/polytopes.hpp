#pragma once

// Exact V/H-representations of lattice polytopes and the predicates built
// on them: Fano, Gorenstein, terminal, smooth, facet widths, duals,
// normalized volume, the merged polytope of two simplicial complexes, and
// obstruction-facet certificates.
//
// V-to-H conversion is an incremental double-description sweep over the
// homogenized cone, entirely in integer arithmetic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rf/complexes.hpp"
#include "rf/exactmath.hpp"

namespace rf {

struct NotFullDimensional : Error {
  using Error::Error;
};
struct NotFano : Error {
  using Error::Error;
};
struct OriginNotInterior : Error {
  using Error::Error;
};
struct OriginOnFacet : Error {
  using Error::Error;
};

// inequality normal . x <= rhs with primitive integer normal
struct Facet {
  IntVec normal;
  Rat rhs;

  bool tight(const IntVec& p) const { return Rat(dot(normal, p)) == rhs; }
  bool satisfied(const IntVec& p) const { return Rat(dot(normal, p)) <= rhs; }
  bool strict(const IntVec& p) const { return Rat(dot(normal, p)) < rhs; }

  bool operator<(const Facet& o) const {
    if (normal != o.normal) return normal < o.normal;
    return rhs < o.rhs;
  }
  bool operator==(const Facet& o) const { return normal == o.normal && rhs == o.rhs; }
};

// Combined representation: generating points, extreme ones, and the
// irredundant facet list produced by hull().
struct Polytope {
  int d = 0;
  std::vector<IntVec> points;
  std::vector<int> vertex_ids;  // indices into points
  std::vector<Facet> facets;

  std::vector<IntVec> vertices() const {
    std::vector<IntVec> vs;
    vs.reserve(vertex_ids.size());
    for (int i : vertex_ids) vs.push_back(points[i]);
    return vs;
  }

  bool contains(const IntVec& p) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Facet& f) { return f.satisfied(p); });
  }

  bool strictly_contains(const IntVec& p) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Facet& f) { return f.strict(p); });
  }
};

namespace detail {

inline int affine_rank(const std::vector<IntVec>& pts, int d) {
  if (pts.empty()) return -1;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return rank_of(IntMat::from_columns(d, diffs));
}

struct DDRay {
  IntVec y;                       // primitive, length d+1
  std::vector<uint64_t> tight;    // bitset over constraint indices
};

inline bool tight_get(const std::vector<uint64_t>& t, int i) {
  return t[i >> 6] >> (i & 63) & 1u;
}
inline void tight_set(std::vector<uint64_t>& t, int i) { t[i >> 6] |= uint64_t{1} << (i & 63); }

inline bool tight_subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

// rays of the simplicial cone {y : rows(i) . y >= 0, i in basis}: the signed
// adjugate columns of the basis matrix
inline std::vector<IntVec> simplicial_cone_rays(const IntMat& basis) {
  int n = basis.rows;
  Int det = determinant(basis);
  std::vector<IntVec> rays;
  for (int j = 0; j < n; ++j) {
    IntVec r(n);
    for (int i = 0; i < n; ++i) {
      // adjugate entry adj[i][j] = cofactor C[j][i]
      IntMat sub(n - 1, n - 1);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == j) continue;
        for (int b = 0, bi = 0; b < n; ++b) {
          if (b == i) continue;
          sub.at(ai, bi) = basis.at(a, b);
          ++bi;
        }
        ++ai;
      }
      Int c = determinant(sub);
      if ((i + j) % 2) c = -c;
      r[i] = c;
    }
    if (det < 0)
      for (Int& x : r) x = -x;
    make_primitive(r);
    rays.push_back(std::move(r));
  }
  return rays;
}

}  // namespace detail

// Irredundant H-representation and vertex identification of the convex hull
// of integer points. Throws NotFullDimensional if the affine span is proper.
inline Polytope hull(const std::vector<IntVec>& input_points) {
  if (input_points.empty()) throw Error("hull: no points");
  int d = static_cast<int>(input_points[0].size());

  Polytope P;
  P.d = d;
  for (const IntVec& p : input_points) {
    if (static_cast<int>(p.size()) != d) throw Error("hull: inconsistent dimensions");
    if (std::find(P.points.begin(), P.points.end(), p) == P.points.end()) P.points.push_back(p);
  }
  if (detail::affine_rank(P.points, d) != d)
    throw NotFullDimensional("hull: affine span is a proper subspace");

  int m = static_cast<int>(P.points.size());
  int words = (m + 63) / 64;

  // constraints: homogenized points (p, 1); the dual cone is pointed and
  // full-dimensional, so we can seed with any d+1 independent rows
  IntMat rows(m, d + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) rows.at(i, j) = P.points[i][j];
    rows.at(i, d) = 1;
  }

  // greedy independent subset
  std::vector<int> seed;
  {
    std::vector<IntVec> chosen;
    for (int i = 0; i < m && static_cast<int>(seed.size()) < d + 1; ++i) {
      IntVec r(d + 1);
      for (int j = 0; j <= d; ++j) r[j] = rows.at(i, j);
      chosen.push_back(std::move(r));
      if (rank_of(IntMat::from_columns(d + 1, chosen)) == static_cast<int>(chosen.size()))
        seed.push_back(i);
      else
        chosen.pop_back();
    }
    if (static_cast<int>(seed.size()) != d + 1)
      throw NotFullDimensional("hull: homogenized points do not span");
  }

  IntMat basis(d + 1, d + 1);
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= d; ++j) basis.at(k, j) = rows.at(seed[k], j);

  std::vector<detail::DDRay> rays;
  for (IntVec& r : detail::simplicial_cone_rays(basis)) {
    detail::DDRay ray;
    ray.y = std::move(r);
    ray.tight.assign(words, 0);
    rays.push_back(std::move(ray));
  }
  auto dot_row = [&](int i, const IntVec& y) {
    Int s = 0;
    for (int j = 0; j <= d; ++j) s += rows.at(i, j) * y[j];
    return s;
  };
  // seed tightness
  for (auto& ray : rays)
    for (int k = 0; k <= d; ++k)
      if (dot_row(seed[k], ray.y) == 0) detail::tight_set(ray.tight, seed[k]);

  std::vector<bool> processed(m, false);
  for (int i : seed) processed[i] = true;

  for (int cur = 0; cur < m; ++cur) {
    if (processed[cur]) continue;
    processed[cur] = true;
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot_row(cur, rays[r].y);
      if (val[r] < 0) any_neg = true;
      if (val[r] == 0) detail::tight_set(rays[r].tight, cur);
    }
    if (!any_neg) continue;

    std::vector<detail::DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        // combinatorial adjacency: no third ray's tight set contains the meet
        std::vector<uint64_t> meet(words);
        for (int w = 0; w < words; ++w) meet[w] = rays[p].tight[w] & rays[q].tight[w];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && detail::tight_subset(meet, rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        detail::DDRay nr;
        nr.y.resize(d + 1);
        for (int j = 0; j <= d; ++j) nr.y[j] = val[p] * rays[q].y[j] - val[q] * rays[p].y[j];
        make_primitive(nr.y);
        nr.tight = meet;
        detail::tight_set(nr.tight, cur);
        bool dup = false;
        for (const auto& ex : next)
          if (ex.y == nr.y) {
            dup = true;
            break;
          }
        if (!dup) next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  // extreme rays (a, b) of the dual cone give facets (-a) . x <= b
  std::set<Facet> facetset;
  for (const auto& ray : rays) {
    IntVec n(d);
    bool zero = true;
    for (int j = 0; j < d; ++j) {
      n[j] = -ray.y[j];
      if (n[j] != 0) zero = false;
    }
    if (zero) continue;
    Int b = ray.y[d];
    Int g = vec_gcd(n);
    for (Int& x : n) x /= g;
    facetset.insert(Facet{std::move(n), Rat(b) / Rat(g)});
  }
  P.facets.assign(facetset.begin(), facetset.end());

  // vertices: points whose tight facet normals span R^d
  for (int i = 0; i < m; ++i) {
    std::vector<IntVec> tight_normals;
    for (const Facet& f : P.facets)
      if (f.tight(P.points[i])) tight_normals.push_back(f.normal);
    if (static_cast<int>(tight_normals.size()) >= d &&
        rank_of(IntMat::from_columns(d, tight_normals)) == d)
      P.vertex_ids.push_back(i);
  }
  return P;
}

// All integer points of the polytope, by box scan over the vertex bounding
// box with per-coordinate interval pruning. Lexicographic output order.
inline std::vector<IntVec> lattice_points(const Polytope& P) {
  std::vector<IntVec> verts = P.vertices();
  if (verts.empty()) throw Error("lattice_points: polytope without vertices");
  int d = P.d;
  IntVec lo = verts[0], hi = verts[0];
  for (const IntVec& v : verts)
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  std::vector<IntVec> out;
  IntVec x(d);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == d) {
      if (P.contains(x)) out.push_back(x);
      return;
    }
    // interval for coordinate j implied by each facet, with the remaining
    // coordinates relaxed to their box ranges
    Int a = lo[j], b = hi[j];
    for (const Facet& f : P.facets) {
      if (f.normal[j] == 0) continue;
      Rat slack = f.rhs;
      for (int k = 0; k < j; ++k) slack -= Rat(f.normal[k] * x[k]);
      for (int k = j + 1; k < d; ++k) {
        const Int& c = f.normal[k];
        slack -= Rat(c > 0 ? c * lo[k] : c * hi[k]);
      }
      // f.normal[j] * x[j] <= slack
      Int num = rat_num(slack), den = rat_den(slack);
      const Int& c = f.normal[j];
      if (c > 0) {
        // x[j] <= floor(slack / c)
        Int bound = num / (den * c);
        if (Rat(bound) * Rat(c) > slack) bound -= 1;
        b = std::min(b, bound);
      } else {
        // x[j] >= ceil(slack / c)
        Int bound = num / (den * c);
        if (Rat(bound) * Rat(c) > slack) bound += 1;
        a = std::max(a, bound);
      }
    }
    for (Int v = a; v <= b; ++v) {
      x[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Fano: full-dimensional, integer vertices, and the interior contains
// exactly one lattice point, the origin.
inline bool is_fano(const Polytope& P) {
  IntVec origin(P.d, Int(0));
  if (!P.strictly_contains(origin)) return false;
  for (const IntVec& p : lattice_points(P))
    if (P.strictly_contains(p) && !is_zero(p)) return false;
  return true;
}

struct FacetScaling {
  IntVec normal;
  Rat rhs;
  bool integral_at_one = false;  // normal/rhs integral, i.e. dual vertex integral
};

inline bool facet_integral_at_one(const Facet& f) {
  Int num = rat_num(f.rhs), den = rat_den(f.rhs);
  if (num == 0) return false;
  for (const Int& c : f.normal)
    if ((c * den) % num != 0) return false;
  return true;
}

struct GorensteinReport {
  bool gorenstein = false;
  std::vector<FacetScaling> facets;
};

inline GorensteinReport gorenstein_report(const Polytope& P) {
  if (!is_fano(P)) throw NotFano("is_gorenstein_fano: polytope is not Fano");
  GorensteinReport rep;
  rep.gorenstein = true;
  for (const Facet& f : P.facets) {
    FacetScaling fs;
    fs.normal = f.normal;
    fs.rhs = f.rhs;
    fs.integral_at_one = facet_integral_at_one(f);
    if (!fs.integral_at_one) rep.gorenstein = false;
    rep.facets.push_back(std::move(fs));
  }
  return rep;
}

inline bool is_gorenstein_fano(const Polytope& P) { return gorenstein_report(P).gorenstein; }

// Terminal: every boundary lattice point is a vertex.
inline bool is_terminal(const Polytope& P) {
  if (!is_fano(P)) throw NotFano("is_terminal: polytope is not Fano");
  std::vector<IntVec> verts = P.vertices();
  std::set<IntVec> vertset(verts.begin(), verts.end());
  for (const IntVec& p : lattice_points(P)) {
    if (P.strictly_contains(p)) continue;
    if (!vertset.count(p)) return false;
  }
  return true;
}

inline bool is_simplicial(const Polytope& P) {
  std::vector<IntVec> verts = P.vertices();
  for (const Facet& f : P.facets) {
    int on = 0;
    for (const IntVec& v : verts)
      if (f.tight(v)) ++on;
    if (on != P.d) return false;
  }
  return true;
}

// Smooth: simplicial and each facet's d vertices form a Z-basis of Z^d.
inline bool is_smooth(const Polytope& P) {
  if (!is_fano(P)) throw NotFano("is_smooth: polytope is not Fano");
  std::vector<IntVec> verts = P.vertices();
  for (const Facet& f : P.facets) {
    std::vector<IntVec> on;
    for (const IntVec& v : verts)
      if (f.tight(v)) on.push_back(v);
    if (static_cast<int>(on.size()) != P.d) return false;
    Int det = determinant(IntMat::from_columns(P.d, on));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

// Lattice width of P in the direction of the facet normal.
inline Int facet_width(const Polytope& P, const Facet& f) {
  std::vector<IntVec> verts = P.vertices();
  if (verts.empty()) throw Error("facet_width: no vertices");
  Int mn = dot(f.normal, verts[0]), mx = mn;
  for (const IntVec& v : verts) {
    Int s = dot(f.normal, v);
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }
  return mx - mn;
}

inline bool all_facet_widths_one(const Polytope& P) {
  return std::all_of(P.facets.begin(), P.facets.end(),
                     [&](const Facet& f) { return facet_width(P, f) == 1; });
}

// Vertices of { y : x . y <= 1 for all x in P }: facet normals scaled to
// right-hand side 1. Requires the origin interior.
inline std::vector<std::vector<Rat>> dual_polytope(const Polytope& P) {
  std::vector<std::vector<Rat>> verts;
  for (const Facet& f : P.facets) {
    if (f.rhs <= 0) throw OriginNotInterior("dual_polytope: origin not interior");
    std::vector<Rat> v(P.d);
    for (int j = 0; j < P.d; ++j) v[j] = Rat(f.normal[j]) / f.rhs;
    verts.push_back(std::move(v));
  }
  return verts;
}

// ---------------------------------------------------------------------------
// triangulations and volume

// Pulling triangulation of the vertex set: cone the pulled vertex over the
// recursively triangulated facets that miss it. Returns index sets into
// `pts`. `pull_last` selects the lexicographically largest vertex instead of
// the smallest, giving a second, generally different, triangulation.
inline std::vector<std::vector<int>> triangulate_vertices(const std::vector<IntVec>& pts,
                                                          bool pull_last = false) {
  if (pts.empty()) throw Error("triangulate: no points");
  int d = static_cast<int>(pts[0].size());
  if (d == 0) return {{0}};
  Polytope P = hull(pts);
  std::vector<int> vids = P.vertex_ids;
  int pull = vids[0];
  for (int i : vids)
    if ((pull_last && P.points[i] > P.points[pull]) ||
        (!pull_last && P.points[i] < P.points[pull]))
      pull = i;

  // map hull-local point indices back to caller indices
  std::vector<int> back(P.points.size(), -1);
  for (std::size_t i = 0; i < P.points.size(); ++i) {
    auto it = std::find(pts.begin(), pts.end(), P.points[i]);
    back[i] = static_cast<int>(it - pts.begin());
  }

  std::vector<std::vector<int>> simplices;
  for (const Facet& f : P.facets) {
    if (f.tight(P.points[pull])) continue;
    std::vector<int> on;  // hull-local vertex ids on this facet
    for (int i : vids)
      if (f.tight(P.points[i])) on.push_back(i);
    if (d == 1) {
      // facet is a single point
      for (int i : on) simplices.push_back({back[pull], back[i]});
      continue;
    }
    // project the facet hyperplane onto coordinates that keep it bijective
    int drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<IntVec> proj;
    for (int i : on) {
      IntVec q;
      for (int j = 0; j < d; ++j)
        if (j != drop) q.push_back(P.points[i][j]);
      proj.push_back(std::move(q));
    }
    for (const auto& sub : triangulate_vertices(proj, pull_last)) {
      std::vector<int> simplex{back[pull]};
      for (int k : sub) simplex.push_back(back[on[k]]);
      std::sort(simplex.begin(), simplex.end());
      simplices.push_back(std::move(simplex));
    }
  }
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

// normalized volume of the simplex on d+1 points = |det| of the homogenized
// point matrix
inline Int simplex_normalized_volume(const std::vector<IntVec>& pts,
                                     const std::vector<int>& simplex) {
  int d = static_cast<int>(pts[0].size());
  if (static_cast<int>(simplex.size()) != d + 1) throw Error("simplex size mismatch");
  IntMat m(d + 1, d + 1);
  for (int c = 0; c <= d; ++c) {
    for (int r = 0; r < d; ++r) m.at(r, c) = pts[simplex[c]][r];
    m.at(d, c) = 1;
  }
  return boost::multiprecision::abs(determinant(m));
}

// d! times the Euclidean volume, summed over a pulling triangulation.
inline Int normalized_volume(const Polytope& P) {
  std::vector<IntVec> verts = P.vertices();
  Int vol = 0;
  for (const auto& s : triangulate_vertices(verts)) vol += simplex_normalized_volume(verts, s);
  return vol;
}

// conv( {rho(F) : F in A} u {-rho(F') : F' in B} ); full-dimensional with 0
// interior because every singleton appears in both complexes.
inline Polytope merge_polytope(const SimplicialComplex& A, const SimplicialComplex& B) {
  if (A.d != B.d) throw Error("merge_polytope: vertex sets differ");
  std::vector<IntVec> pts;
  for (uint64_t f : A.faces) pts.push_back(detail::indicator_vec(A.d, f));
  for (uint64_t f : B.faces) {
    IntVec v = detail::indicator_vec(B.d, f);
    pts.push_back(vec_neg(v));
  }
  return hull(pts);
}

struct FacetLatticeReport {
  bool z_span_full = false;      // lattice points on the facet span Z^d
  bool rhs_one_integral = false; // normal/rhs is an integer vector
};

inline FacetLatticeReport facet_lattice_report(const Polytope& P, const Facet& f) {
  if (f.rhs == 0) throw OriginOnFacet("facet_lattice_report: origin on the facet hyperplane");
  std::vector<IntVec> on;
  for (const IntVec& p : lattice_points(P))
    if (f.tight(p)) on.push_back(p);
  FacetLatticeReport rep;
  rep.z_span_full = lattice_span_is_full(on, P.d);
  rep.rhs_one_integral = facet_integral_at_one(f);
  return rep;
}

enum class ObstructionKind { nonflag, oddhole, antihole };

// The supporting-hyperplane obstruction to Gorensteinness: sum of the V
// coordinates equals e-1 (nonflag, |V|=e), l (odd hole, |V|=2l+1), or 2
// (odd antihole). Returns true iff the hyperplane supports P at that value
// and every facet containing its contact vertices has a non-integral
// scaled normal.
inline bool verify_obstruction_facet(const Polytope& P, ObstructionKind kind,
                                     const std::vector<int>& V_1based) {
  Int target;
  int k = static_cast<int>(V_1based.size());
  switch (kind) {
    case ObstructionKind::nonflag:
      target = k - 1;
      break;
    case ObstructionKind::oddhole:
      if (k < 5 || k % 2 == 0) return false;
      target = (k - 1) / 2;
      break;
    case ObstructionKind::antihole:
      if (k < 5 || k % 2 == 0) return false;
      target = 2;
      break;
  }
  IntVec h(P.d, Int(0));
  for (int v : V_1based) {
    if (v < 1 || v > P.d) throw Error("verify_obstruction_facet: vertex out of range");
    h[v - 1] = 1;
  }
  std::vector<IntVec> verts = P.vertices();
  Int mx = dot(h, verts[0]);
  for (const IntVec& v : verts) mx = std::max(mx, dot(h, v));
  if (mx != target) return false;  // not supporting at the claimed value

  std::vector<IntVec> contact;
  for (const IntVec& v : verts)
    if (dot(h, v) == target) contact.push_back(v);
  if (contact.empty()) return false;

  bool found_facet = false;
  for (const Facet& f : P.facets) {
    bool contains_all = std::all_of(contact.begin(), contact.end(),
                                    [&](const IntVec& v) { return f.tight(v); });
    if (!contains_all) continue;
    found_facet = true;
    if (facet_integral_at_one(f)) return false;  // certificate fails
  }
  return found_facet;
}

}  // namespace rf
