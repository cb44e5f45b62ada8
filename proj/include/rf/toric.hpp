#pragma once

// Toric ideals of configurations and everything the certification pipeline
// needs from them: reverse lexicographic Groebner bases of binomial ideals,
// lattice-ideal saturation, squarefree/compressed tests, harmony, the
// merged-order construction for pairs of configurations, fiber oracles, and
// triangulations read off squarefree initial ideals.
//
// All binomials here are differences of monomials with coefficients +-1, so
// no field arithmetic appears: S-binomials and reductions stay binomial.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rf/configuration.hpp"
#include "rf/exactmath.hpp"
#include "rf/polytopes.hpp"

namespace rf {

struct NotHarmony : Error {
  using Error::Error;
};
struct NotSquarefreeInput : Error {
  using Error::Error;
};
struct NotSquarefree : Error {
  using Error::Error;
};
struct TooLarge : GuardError {
  using GuardError::GuardError;
};
struct DegreeBoundExceeded : GuardError {
  using GuardError::GuardError;
};
struct CrossCheckMismatch : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// monomials as exponent vectors

using Expo = std::vector<int>;

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool expo_divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline bool expo_squarefree(const Expo& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
}

// u - v; orientation is fixed by the monomial order in use
struct Binomial {
  Expo plus;
  Expo minus;

  // order-free canonical storage for set comparisons
  Binomial canonical() const {
    if (minus > plus) return {minus, plus};
    return *this;
  }
  bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
  bool operator<(const Binomial& o) const {
    if (plus != o.plus) return plus < o.plus;
    return minus < o.minus;
  }
};

// Reverse lexicographic order given by a variable ranking (largest first).
// Degree decides first; at equal degree the smallest-ranked variable with a
// differing exponent decides, the smaller exponent winning.
struct MonomialOrder {
  std::vector<int> ranking;

  int cmp(const Expo& a, const Expo& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
      int v = *it;
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }

  static MonomialOrder identity(int nvars) {
    MonomialOrder o;
    o.ranking.resize(nvars);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    return o;
  }

  static MonomialOrder with_smallest(int nvars, int var) {
    MonomialOrder o;
    for (int v = 0; v < nvars; ++v)
      if (v != var) o.ranking.push_back(v);
    o.ranking.push_back(var);
    return o;
  }

  // smallest-first chain, as displayed ("z < x2 < x1 < ..."), reversed
  static MonomialOrder from_ascending(const std::vector<int>& asc) {
    MonomialOrder o;
    o.ranking.assign(asc.rbegin(), asc.rend());
    return o;
  }

  std::vector<int> ascending() const {
    return std::vector<int>(ranking.rbegin(), ranking.rend());
  }
};

struct MonomialIdeal {
  std::vector<Expo> gens;  // minimal generators, sorted

  bool divides_some(const Expo& m) const {
    return std::any_of(gens.begin(), gens.end(),
                       [&](const Expo& g) { return expo_divides(g, m); });
  }
  bool squarefree() const {
    return std::all_of(gens.begin(), gens.end(), expo_squarefree);
  }
  void minimalize() {
    std::sort(gens.begin(), gens.end(), [](const Expo& a, const Expo& b) {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
      return a < b;
    });
    std::vector<Expo> keep;
    for (const Expo& g : gens) {
      bool dominated = std::any_of(keep.begin(), keep.end(),
                                   [&](const Expo& k) { return expo_divides(k, g); });
      if (!dominated) keep.push_back(g);
    }
    gens = std::move(keep);
    std::sort(gens.begin(), gens.end());
  }
  bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Binomial> elements;  // plus = initial monomial; reduced; sorted
};

// ---------------------------------------------------------------------------
// Buchberger for binomial ideals

namespace detail {

inline Expo reduce_monomial(Expo m, const std::vector<Binomial>& basis) {
  bool again = true;
  while (again) {
    again = false;
    for (const Binomial& g : basis)
      if (expo_divides(g.plus, m)) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.minus[i] - g.plus[i];
        again = true;
        break;
      }
  }
  return m;
}

inline std::optional<Binomial> orient(Binomial b, const MonomialOrder& order) {
  int c = order.cmp(b.plus, b.minus);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(b.plus, b.minus);
  return b;
}

inline std::optional<Binomial> reduce_binomial(const Binomial& b,
                                               const std::vector<Binomial>& basis,
                                               const MonomialOrder& order) {
  Expo u = reduce_monomial(b.plus, basis);
  Expo v = reduce_monomial(b.minus, basis);
  return orient(Binomial{std::move(u), std::move(v)}, order);
}

}  // namespace detail

// Reduced Groebner basis of the binomial ideal generated by `gens`.
inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order) {
  std::vector<Binomial> basis;
  for (const Binomial& g : gens)
    if (auto og = detail::orient(g, order)) basis.push_back(*og);

  struct Pair {
    int i, j;
    int deg;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i)
      queue.push_back({i, j, total_degree(expo_lcm(basis[i].plus, basis[j].plus))});
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    // normal selection: smallest lcm degree, then smallest indices
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Pair &a = queue[k], &b = queue[best];
      if (a.deg != b.deg ? a.deg < b.deg : std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
    }
    Pair pr = queue[best];
    queue[best] = queue.back();
    queue.pop_back();

    const Binomial &f = basis[pr.i], &g = basis[pr.j];
    if (expo_coprime(f.plus, g.plus)) continue;  // S-pair reduces to zero
    Expo l = expo_lcm(f.plus, g.plus);
    Expo a(l.size()), b(l.size());
    for (std::size_t t = 0; t < l.size(); ++t) {
      a[t] = l[t] - g.plus[t] + g.minus[t];
      b[t] = l[t] - f.plus[t] + f.minus[t];
    }
    auto red = detail::reduce_binomial(Binomial{std::move(a), std::move(b)}, basis, order);
    if (red) {
      basis.push_back(*red);
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // minimalize: drop elements whose initial monomial another initial divides
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      if (expo_divides(basis[j].plus, basis[i].plus) &&
          (basis[j].plus != basis[i].plus || j < i))
        drop = true;
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  // reduce tails
  for (auto& g : minimal) g.minus = detail::reduce_monomial(g.minus, minimal);

  std::sort(minimal.begin(), minimal.end(), [&](const Binomial& x, const Binomial& y) {
    int c = order.cmp(x.plus, y.plus);
    if (c != 0) return c < 0;
    return order.cmp(x.minus, y.minus) < 0;
  });
  return GroebnerBasis{order, std::move(minimal)};
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  MonomialIdeal mi;
  for (const Binomial& g : gb.elements) mi.gens.push_back(g.plus);
  mi.minimalize();
  return mi;
}

inline bool is_squarefree(const MonomialIdeal& mi) { return mi.squarefree(); }

// ---------------------------------------------------------------------------
// toric ideals

namespace detail {

inline std::vector<Binomial> canonical_set(std::vector<Binomial> v) {
  for (auto& b : v) b = b.canonical();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

// Generating set of the toric ideal: binomials from a kernel lattice basis
// of the homogenized matrix, saturated with respect to every variable by
// repeated reverse-lexicographic Groebner passes. Returned as the reduced
// Groebner basis under the identity ranking (z smallest when present).
inline std::vector<Binomial> toric_ideal_generators(const Configuration& C) {
  int nvars = C.num_vars();
  IntMat M = C.homogenized_matrix();
  std::vector<Binomial> gens;
  for (const IntVec& v : kernel_lattice_basis(M)) {
    Expo plus(nvars), minus(nvars);
    for (int i = 0; i < nvars; ++i) {
      long x = static_cast<long>(v[i]);
      if (x > 0)
        plus[i] = static_cast<int>(x);
      else
        minus[i] = static_cast<int>(-x);
    }
    if (total_degree(plus) + total_degree(minus) > 0) gens.push_back({plus, minus});
  }
  if (gens.empty()) return gens;

  std::vector<Binomial> prev;
  for (int sweep = 0; sweep < 16; ++sweep) {
    for (int var = 0; var < nvars; ++var) {
      GroebnerBasis gb = buchberger(gens, MonomialOrder::with_smallest(nvars, var));
      gens.clear();
      for (Binomial g : gb.elements) {
        int k = std::min(g.plus[var], g.minus[var]);
        if (k > 0) {
          g.plus[var] -= k;
          g.minus[var] -= k;
        }
        gens.push_back(std::move(g));
      }
    }
    auto canon = detail::canonical_set(gens);
    if (canon == prev) break;
    prev = std::move(canon);
  }
  return buchberger(gens, MonomialOrder::identity(nvars)).elements;
}

// pi-image of a monomial: (sum of columns weighted by exponents, total degree)
inline IntVec monomial_image(const Configuration& C, const Expo& e) {
  IntVec img(C.d + 1, Int(0));
  for (int v = 0; v < C.num_cols(); ++v)
    if (e[v])
      for (int i = 0; i < C.d; ++i) img[i] += Int(e[v]) * C.cols[v][i];
  img[C.d] = total_degree(e);
  return img;
}

// ---------------------------------------------------------------------------
// harmony and merged configurations

// For every column a of A# and b of B#, with c = a - b: c+ is a column of A#
// and c- is a column of B#.
inline bool is_harmony(const Configuration& A, const Configuration& B) {
  if (A.d != B.d) throw Error("is_harmony: dimension mismatch");
  if (A.y_block || B.y_block) throw Error("is_harmony: inputs must be nonnegative blocks");
  IntVec zero(A.d, Int(0));
  std::set<IntVec> acols(A.cols.begin(), A.cols.end());
  std::set<IntVec> bcols(B.cols.begin(), B.cols.end());
  acols.insert(zero);
  bcols.insert(zero);
  for (const IntVec& a : acols)
    for (const IntVec& b : bcols) {
      auto [cp, cm] = positive_negative_parts(vec_sub(a, b));
      if (!acols.count(cp) || !bcols.count(cm)) return false;
    }
  return true;
}

// [-b1,...,-bm, a1,...,an, 0] with the variable roles y-block, x-block, z.
inline Configuration merge_config(const Configuration& A, const Configuration& B) {
  if (A.d != B.d) throw Error("merge_config: dimension mismatch");
  if (A.y_block || B.y_block) throw Error("merge_config: inputs must be nonnegative blocks");
  std::vector<IntVec> cols;
  for (const IntVec& b : B.cols) cols.push_back(vec_neg(b));
  for (const IntVec& a : A.cols) cols.push_back(a);
  return Configuration(A.d, std::move(cols), /*sharp=*/true,
                       /*y_block=*/B.num_cols());
}

// Reverse lexicographic order whose ranking extends divisibility: column a
// before a' whenever a' <= a componentwise; ties broken by coordinate sum
// descending, then lexicographically descending; z last when present.
inline MonomialOrder divisibility_order(const Configuration& C) {
  std::vector<int> idx(C.num_cols());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Int> sums(C.num_cols());
  for (int j = 0; j < C.num_cols(); ++j) {
    Int s = 0;
    for (const Int& x : C.cols[j]) s += x;
    sums[j] = s;
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (sums[a] != sums[b]) return sums[a] > sums[b];
    return C.cols[a] > C.cols[b];
  });
  MonomialOrder o;
  o.ranking = std::move(idx);
  if (C.sharp) o.ranking.push_back(C.z_index());
  return o;
}

// ---------------------------------------------------------------------------
// the merged-order construction for a harmonious pair

struct MergedInitialPlan {
  Configuration merged;                            // [-B, A]#
  MonomialOrder order;                             // z < x_n < ... < x_1 < y_m < ... < y_1
  std::vector<std::pair<int, int>> support_pairs;  // 1-based (i, j) with overlapping supports
  MonomialIdeal predicted_initial;                 // over the merged variables
  MonomialIdeal block_initial_A;                   // over A#'s variables
  MonomialIdeal block_initial_B;                   // over B#'s variables
};

// Plans the merged order and its predicted squarefree initial generators.
// Throws NotHarmony / NotSquarefreeInput when the hypotheses fail.
inline MergedInitialPlan plan_merged_initial(const Configuration& A_block,
                                             const Configuration& B_block) {
  Configuration A = A_block.unsharped();
  Configuration B = B_block.unsharped();
  if (!is_harmony(A, B)) throw NotHarmony("pair of configurations is not of harmony");

  MergedInitialPlan plan;
  Configuration As = A.sharped(), Bs = B.sharped();
  MonomialOrder orderA = divisibility_order(As);
  MonomialOrder orderB = divisibility_order(Bs);
  GroebnerBasis gbA = buchberger(toric_ideal_generators(As), orderA);
  GroebnerBasis gbB = buchberger(toric_ideal_generators(Bs), orderB);
  plan.block_initial_A = initial_ideal(gbA);
  plan.block_initial_B = initial_ideal(gbB);
  if (!plan.block_initial_A.squarefree() || !plan.block_initial_B.squarefree())
    throw NotSquarefreeInput("a block initial ideal under its divisibility order is not squarefree");

  plan.merged = merge_config(A, B);
  int m = B.num_cols(), n = A.num_cols();
  int mvars = plan.merged.num_vars();

  // ranking largest -> smallest: y's by orderB, x's by orderA, then z
  plan.order.ranking.clear();
  for (int v : orderB.ranking)
    if (v != Bs.z_index()) plan.order.ranking.push_back(v);  // y_j at merged index j
  for (int v : orderA.ranking)
    if (v != As.z_index()) plan.order.ranking.push_back(m + v);
  plan.order.ranking.push_back(plan.merged.z_index());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      bool overlap = false;
      for (int t = 0; t < A.d && !overlap; ++t)
        if (A.cols[i][t] != 0 && B.cols[j][t] != 0) overlap = true;
      if (overlap) plan.support_pairs.emplace_back(i + 1, j + 1);
    }

  // predicted generators: x_i y_j for overlapping pairs, plus both block
  // initials transported into the merged variables
  for (auto [i, j] : plan.support_pairs) {
    Expo e(mvars, 0);
    e[m + (i - 1)] = 1;
    e[j - 1] = 1;
    plan.predicted_initial.gens.push_back(std::move(e));
  }
  for (const Expo& g : plan.block_initial_A.gens) {
    Expo e(mvars, 0);
    if (g[As.z_index()] != 0) throw Error("block initial generator involves z");
    for (int v = 0; v < n; ++v) e[m + v] = g[v];
    plan.predicted_initial.gens.push_back(std::move(e));
  }
  for (const Expo& g : plan.block_initial_B.gens) {
    Expo e(mvars, 0);
    if (g[Bs.z_index()] != 0) throw Error("block initial generator involves z");
    for (int v = 0; v < m; ++v) e[v] = g[v];
    plan.predicted_initial.gens.push_back(std::move(e));
  }
  plan.predicted_initial.minimalize();
  return plan;
}

struct MergedInitialCheck {
  MergedInitialPlan plan;
  MonomialIdeal computed_initial;
  GroebnerBasis gb;
  bool matches = false;
  bool squarefree = false;
};

// Computes the merged toric ideal directly and compares its initial ideal
// with the plan's prediction.
inline MergedInitialCheck verify_merged_initial(const Configuration& A_block,
                                                const Configuration& B_block) {
  MergedInitialCheck chk{plan_merged_initial(A_block, B_block), {}, {}, false, false};
  std::vector<Binomial> gens = toric_ideal_generators(chk.plan.merged);
  chk.gb = buchberger(gens, chk.plan.order);
  chk.computed_initial = initial_ideal(chk.gb);
  chk.squarefree = chk.computed_initial.squarefree();
  chk.matches = chk.squarefree && chk.computed_initial == chk.plan.predicted_initial;
  return chk;
}

// ---------------------------------------------------------------------------
// order searches and compressedness

enum class OrderSearch { exhaustive, heuristic };

// First reverse lexicographic order with z smallest whose initial ideal is
// squarefree, over all (N-1)! rankings of the nonzero columns. Guarded at 8
// nonzero columns; heuristic mode tries a small declared family instead.
inline std::optional<MonomialOrder> exists_squarefree_revlex_z_smallest(
    const Configuration& C, OrderSearch mode = OrderSearch::exhaustive) {
  if (!C.sharp) throw Error("order search: configuration must carry the zero column");
  int n = C.num_cols();
  std::vector<Binomial> gens = toric_ideal_generators(C);
  auto squarefree_under = [&](const MonomialOrder& o) {
    return initial_ideal(buchberger(gens, o)).squarefree();
  };
  if (mode == OrderSearch::heuristic) {
    std::vector<MonomialOrder> candidates{divisibility_order(C)};
    for (int shift = 0; shift < n; ++shift) {
      MonomialOrder o;
      for (int k = 0; k < n; ++k) o.ranking.push_back((k + shift) % n);
      o.ranking.push_back(C.z_index());
      candidates.push_back(std::move(o));
    }
    for (const auto& o : candidates)
      if (squarefree_under(o)) return o;
    return std::nullopt;
  }
  if (n > 8) throw TooLarge("order search: more than 8 nonzero columns in exhaustive mode");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MonomialOrder o;
    o.ranking = perm;
    o.ranking.push_back(C.z_index());
    if (squarefree_under(o)) return o;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Lattice-faithful coordinates for a possibly lower-dimensional point set:
// translate by the first point and rewrite in a basis of the saturated
// lattice of the affine span.
inline std::vector<IntVec> full_dim_lattice_coords(const std::vector<IntVec>& pts) {
  if (pts.empty()) throw Error("full_dim_lattice_coords: no points");
  int d = static_cast<int>(pts[0].size());
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  if (!diffs.empty() && rank_of(IntMat::from_columns(d, diffs)) == d) return pts;
  SmithResult snf = smith_normal_form(IntMat::from_columns(d, diffs));
  int r = static_cast<int>(snf.divisors.size());
  std::vector<IntVec> out;
  for (const IntVec& p : pts) {
    IntVec w = snf.row_transform.mul(vec_sub(p, pts[0]));
    for (int i = r; i < d; ++i)
      if (w[i] != 0) throw Error("full_dim_lattice_coords: point outside the affine span");
    w.resize(r);
    out.push_back(std::move(w));
  }
  return out;
}

// Compressed: squarefree initial ideal for every reverse lexicographic
// order; decided by the facet-width-one criterion on the convex hull of the
// columns, cross-checked by exhaustive order enumeration on small inputs.
inline bool is_compressed(const Configuration& C) {
  std::vector<IntVec> pts = full_dim_lattice_coords(C.all_points());
  bool width_one;
  if (static_cast<int>(pts[0].size()) == 0) {
    width_one = true;  // single point
  } else {
    width_one = all_facet_widths_one(hull(pts));
  }
  if (C.num_cols() <= 6) {
    std::vector<Binomial> gens = toric_ideal_generators(C);
    int nvars = C.num_vars();
    std::vector<int> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    bool all_squarefree = true;
    do {
      MonomialOrder o;
      o.ranking = perm;
      if (!initial_ideal(buchberger(gens, o)).squarefree()) {
        all_squarefree = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (all_squarefree != width_one)
      throw CrossCheckMismatch("facet-width criterion disagrees with order enumeration");
  }
  return width_one;
}

// ---------------------------------------------------------------------------
// fibers

// All exponent vectors of the given total degree whose weighted column sum
// matches the target. The target is the t-part of the pi-image; the s-part
// is the total degree itself.
inline std::vector<Expo> fiber(const Configuration& C, const IntVec& t_target, int degree,
                               int degree_bound = 6) {
  if (degree > degree_bound) throw DegreeBoundExceeded("fiber: total degree above bound");
  if (static_cast<int>(t_target.size()) != C.d) throw Error("fiber: bad target length");
  int nvars = C.num_vars();
  std::vector<Expo> out;
  Expo e(nvars, 0);
  IntVec acc(C.d, Int(0));
  // when sharp the z variable sits at index num_cols() and adds nothing to
  // the t-part, so it absorbs all remaining degree in one step
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      if (remaining == 0 && acc == t_target) out.push_back(e);
      return;
    }
    if (C.sharp && var == C.num_cols()) {
      e[var] = remaining;
      self(self, var + 1, 0);
      e[var] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      if (k > 0)
        for (int i = 0; i < C.d; ++i) acc[i] += C.cols[var][i];
      self(self, var + 1, remaining - k);
    }
    for (int k = 1; k <= remaining; ++k)
      for (int i = 0; i < C.d; ++i) acc[i] -= C.cols[var][i];
    e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

// Groebner criterion via fibers: up to the degree bound, every fiber must
// contain exactly one monomial outside the initial ideal.
inline bool standard_monomials_biject_fibers(const Configuration& C, const MonomialIdeal& init,
                                             int max_degree) {
  int nvars = C.num_vars();
  std::map<IntVec, std::pair<int, int>> fibers;  // image -> (standard count, size)
  Expo e(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      IntVec img = monomial_image(C, e);
      auto& entry = fibers[img];
      ++entry.second;
      if (!init.divides_some(e)) ++entry.first;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);  // visits every monomial of degree <= max exactly once
  return std::all_of(fibers.begin(), fibers.end(),
                     [](const auto& kv) { return kv.second.first == 1; });
}

// ---------------------------------------------------------------------------
// triangulations from squarefree initial ideals

struct InitialTriangulation {
  std::vector<std::vector<int>> simplices;  // column-index sets of size d+1
  bool unimodular = false;
  bool quadratic = false;            // all generators quadratic (flag triangulation)
  bool all_contain_zero_col = false; // every simplex uses the z column
  Int total_volume;
};

// Maximal column subsets whose support contains no generator of the initial
// ideal, restricted to the full-dimensional ones.
inline InitialTriangulation triangulation_from_initial_ideal(const Configuration& C,
                                                             const MonomialIdeal& init) {
  if (!init.squarefree()) throw NotSquarefree("triangulation: initial ideal is not squarefree");
  int nvars = C.num_vars();
  if (nvars > 62) throw TooLarge("triangulation: too many columns");
  std::vector<uint64_t> gen_masks;
  for (const Expo& g : init.gens) {
    uint64_t m = 0;
    for (int v = 0; v < nvars; ++v)
      if (g[v]) m |= uint64_t{1} << v;
    gen_masks.push_back(m);
  }
  auto independent = [&](uint64_t face) {
    return std::none_of(gen_masks.begin(), gen_masks.end(),
                        [&](uint64_t g) { return (g & ~face) == 0; });
  };

  // enumerate all faces of the complex (grow in index order)
  std::vector<uint64_t> faces;
  auto rec = [&](auto&& self, uint64_t face, int next) -> void {
    faces.push_back(face);
    if (faces.size() > (uint64_t{1} << 22))
      throw TooLarge("triangulation: face enumeration exploded");
    for (int v = next; v < nvars; ++v) {
      uint64_t f2 = face | (uint64_t{1} << v);
      if (independent(f2)) self(self, f2, v + 1);
    }
  };
  rec(rec, 0, 0);

  std::vector<uint64_t> maximal;
  for (uint64_t f : faces) {
    bool mx = true;
    for (int v = 0; v < nvars && mx; ++v) {
      if (f >> v & 1u) continue;
      if (independent(f | (uint64_t{1} << v))) mx = false;
    }
    if (mx) maximal.push_back(f);
  }

  std::vector<IntVec> pts = C.all_points();
  InitialTriangulation tri;
  tri.unimodular = true;
  tri.quadratic = std::all_of(init.gens.begin(), init.gens.end(),
                              [](const Expo& g) { return total_degree(g) == 2; });
  tri.all_contain_zero_col = C.sharp;
  tri.total_volume = 0;
  for (uint64_t f : maximal) {
    std::vector<int> simplex;
    for (int v = 0; v < nvars; ++v)
      if (f >> v & 1u) simplex.push_back(v);
    if (static_cast<int>(simplex.size()) != C.d + 1) continue;
    Int vol = simplex_normalized_volume(pts, simplex);
    if (vol == 0) continue;  // degenerate, not full-dimensional
    if (vol != 1) tri.unimodular = false;
    if (C.sharp && !(f >> C.z_index() & 1u)) tri.all_contain_zero_col = false;
    tri.total_volume += vol;
    tri.simplices.push_back(std::move(simplex));
  }
  std::sort(tri.simplices.begin(), tri.simplices.end());
  if (!C.sharp) tri.all_contain_zero_col = false;
  return tri;
}

// ---------------------------------------------------------------------------
// serialization

inline std::string format_monomial(const Configuration& C, const Expo& e) {
  std::string s;
  for (int v = 0; v < static_cast<int>(e.size()); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += C.var_name(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_binomial(const Configuration& C, const Binomial& b) {
  return format_monomial(C, b.plus) + " - " + format_monomial(C, b.minus);
}

inline std::string format_order_ascending(const Configuration& C, const MonomialOrder& o) {
  std::string s;
  for (int v : o.ascending()) {
    if (!s.empty()) s += ",";
    s += C.var_name(v);
  }
  return s;
}

// Parses a comma-separated chain of variable names, smallest first.
inline MonomialOrder parse_order_ascending(const Configuration& C, const std::string& csv) {
  std::vector<int> asc;
  std::vector<bool> seen(C.num_vars(), false);
  std::string tok;
  std::istringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(c); }),
              tok.end());
    if (tok.empty()) continue;
    int var = -1;
    for (int v = 0; v < C.num_vars(); ++v)
      if (C.var_name(v) == tok) {
        var = v;
        break;
      }
    if (var < 0) throw ParseError("order: unknown variable '" + tok + "'");
    if (seen[var]) throw ParseError("order: variable '" + tok + "' repeated");
    seen[var] = true;
    asc.push_back(var);
  }
  if (static_cast<int>(asc.size()) != C.num_vars())
    throw ParseError("order: not all variables listed");
  return MonomialOrder::from_ascending(asc);
}

}  // namespace rf
