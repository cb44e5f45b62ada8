#pragma once

// Exact integer and rational scalars plus the integer-lattice algorithms
// (Hermite/Smith normal forms, kernels, determinants) used everywhere else.
// No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

inline std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << rat_num(q);
  if (!rat_is_integer(q)) os << "/" << rat_den(q);
  return os.str();
}

// ---------------------------------------------------------------------------
// vectors

inline IntVec int_vec(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vec_sub: length mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IntVec vec_neg(const IntVec& a) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  return g;
}

// Divide by the gcd of the entries; returns the gcd (0 for the zero vector).
inline Int make_primitive(IntVec& v) {
  Int g = vec_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return g;
}

// (a+, a-) with a = a+ - a-, disjoint supports, both componentwise >= 0.
inline std::pair<IntVec, IntVec> positive_negative_parts(const IntVec& a) {
  IntVec plus(a.size()), minus(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0)
      plus[i] = a[i];
    else
      minus[i] = -a[i];
  }
  return {plus, minus};
}

// ---------------------------------------------------------------------------
// matrices (row-major, exact entries)

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_columns(int d, const std::vector<IntVec>& cs) {
    IntMat m(d, static_cast<int>(cs.size()));
    for (int j = 0; j < m.cols; ++j) {
      if (static_cast<int>(cs[j].size()) != d) throw Error("from_columns: length mismatch");
      for (int i = 0; i < d; ++i) m.at(i, j) = cs[j][i];
    }
    return m;
  }

  static IntMat from_rows(const std::vector<IntVec>& rs) {
    if (rs.empty()) return IntMat(0, 0);
    IntMat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (rs[i].size() != rs[0].size()) throw Error("from_rows: ragged rows");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
  }

  IntVec column(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  IntVec mul(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols) throw Error("mul: length mismatch");
    IntVec r(rows);
    for (int i = 0; i < rows; ++i) {
      Int s = 0;
      for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Exact determinant, Bareiss fraction-free elimination.
inline Int determinant(const IntMat& m) {
  if (m.rows != m.cols) throw Error("determinant: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  Int det = w.at(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

namespace detail {

// Column elimination of row r0 across columns [pivcol, cols), gcd-style,
// with the same ops mirrored on U. Pivot chosen by minimal absolute value
// to keep entries small. Leaves a single nonzero at (r0, pivcol) or none.
inline bool eliminate_row(IntMat& h, IntMat& u, int r0, int pivcol) {
  using boost::multiprecision::abs;
  auto col_axpy = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < h.rows; ++i) h.at(i, dst) -= q * h.at(i, src);
    for (int i = 0; i < u.rows; ++i) u.at(i, dst) -= q * u.at(i, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < h.rows; ++i) std::swap(h.at(i, a), h.at(i, b));
    for (int i = 0; i < u.rows; ++i) std::swap(u.at(i, a), u.at(i, b));
  };
  auto col_negate = [&](int c) {
    for (int i = 0; i < h.rows; ++i) h.at(i, c) = -h.at(i, c);
    for (int i = 0; i < u.rows; ++i) u.at(i, c) = -u.at(i, c);
  };

  for (;;) {
    int piv = -1;
    for (int j = pivcol; j < h.cols; ++j)
      if (h.at(r0, j) != 0 && (piv < 0 || abs(h.at(r0, j)) < abs(h.at(r0, piv)))) piv = j;
    if (piv < 0) return false;
    bool clean = true;
    for (int j = pivcol; j < h.cols; ++j) {
      if (j == piv || h.at(r0, j) == 0) continue;
      Int q = h.at(r0, j) / h.at(r0, piv);  // truncated division
      col_axpy(j, piv, q);
      if (h.at(r0, j) != 0) clean = false;
    }
    if (clean) {
      col_swap(piv, pivcol);
      if (h.at(r0, pivcol) < 0) col_negate(pivcol);
      return true;
    }
  }
}

}  // namespace detail

struct ColumnEchelon {
  IntMat h;  // M * u = h, column echelon
  IntMat u;  // unimodular cols x cols
  int rank = 0;
};

inline ColumnEchelon column_echelon(const IntMat& m) {
  ColumnEchelon r;
  r.h = m;
  r.u = IntMat::identity(m.cols);
  int pivcol = 0;
  for (int row = 0; row < m.rows && pivcol < m.cols; ++row)
    if (detail::eliminate_row(r.h, r.u, row, pivcol)) ++pivcol;
  r.rank = pivcol;
  return r;
}

inline int rank_of(const IntMat& m) { return column_echelon(m).rank; }

// Basis of { v integral : M v = 0 } as a free abelian group (possibly empty).
inline std::vector<IntVec> kernel_lattice_basis(const IntMat& m) {
  ColumnEchelon ce = column_echelon(m);
  std::vector<IntVec> basis;
  for (int j = ce.rank; j < m.cols; ++j) basis.push_back(ce.u.column(j));
  return basis;
}

struct SmithResult {
  std::vector<Int> divisors;  // nonnegative, divisibility chain d1 | d2 | ...
  IntMat row_transform;       // unimodular P with P*M*Q diagonal
};

inline SmithResult smith_normal_form(const IntMat& m) {
  using boost::multiprecision::abs;
  IntMat w = m;
  IntMat p = IntMat::identity(m.rows);
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(a, j), w.at(b, j));
    for (int j = 0; j < p.cols; ++j) std::swap(p.at(a, j), p.at(b, j));
  };
  auto row_axpy = [&](int dst, int src, const Int& q) {  // row dst -= q * row src
    if (q == 0) return;
    for (int j = 0; j < w.cols; ++j) w.at(dst, j) -= q * w.at(src, j);
    for (int j = 0; j < p.cols; ++j) p.at(dst, j) -= q * p.at(src, j);
  };
  auto row_add = [&](int dst, int src) {
    for (int j = 0; j < w.cols; ++j) w.at(dst, j) += w.at(src, j);
    for (int j = 0; j < p.cols; ++j) p.at(dst, j) += p.at(src, j);
  };

  int n = std::min(w.rows, w.cols);
  std::vector<Int> div;
  int t = 0;
  for (; t < n; ++t) {
    // find minimal-abs nonzero entry in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < w.cols; ++j)
        if (w.at(i, j) != 0 && (pi < 0 || abs(w.at(i, j)) < abs(w.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, t), w.at(i, pj));
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = w.at(i, t) / w.at(t, t);
        row_axpy(i, t, q);
        if (w.at(i, t) != 0) {
          row_swap(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = w.at(t, j) / w.at(t, t);
        for (int i = t; i < w.rows; ++i) w.at(i, j) -= q * w.at(i, t);
        if (w.at(t, j) != 0) {
          for (int i = t; i < w.rows; ++i) std::swap(w.at(i, t), w.at(i, j));
          again = true;
        }
      }
      if (!again) break;
    }
    // enforce divisibility of the remaining block by the pivot
    bool redo = false;
    for (int i = t + 1; i < w.rows && !redo; ++i)
      for (int j = t + 1; j < w.cols && !redo; ++j)
        if (w.at(i, j) % w.at(t, t) != 0) {
          row_add(t, i);
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    div.push_back(abs(w.at(t, t)));
  }
  return SmithResult{std::move(div), std::move(p)};
}

inline std::vector<Int> smith_divisors(const IntMat& m) {
  return smith_normal_form(m).divisors;
}

// True iff the integer span of the points equals Z^d.
inline bool lattice_span_is_full(const std::vector<IntVec>& points, int d) {
  for (const IntVec& p : points)
    if (static_cast<int>(p.size()) != d) throw Error("lattice_span_is_full: bad point length");
  if (d == 0) return true;
  if (points.empty()) return false;
  std::vector<Int> div = smith_divisors(IntMat::from_columns(d, points));
  if (static_cast<int>(div.size()) != d) return false;
  return std::all_of(div.begin(), div.end(), [](const Int& x) { return x == 1; });
}

// ---------------------------------------------------------------------------
// text format: first line "rows cols", then `rows` lines of integers

inline IntMat read_int_mat(std::istream& in) {
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("matrix: expected \"rows cols\" header");
  if (rows < 0 || cols < 0) throw ParseError("matrix: negative dimensions");
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix: not enough entries");
      try {
        m.at(i, j) = Int(tok);
      } catch (...) {
        throw ParseError("matrix: bad integer '" + tok + "'");
      }
    }
  return m;
}

inline void write_int_mat(std::ostream& out, const IntMat& m) {
  out << m.rows << " " << m.cols << "\n";
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
    out << "\n";
  }
}

}  // namespace rf
