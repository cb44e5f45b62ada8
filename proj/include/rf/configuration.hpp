#pragma once

// Integer point configurations: the column matrices whose toric ideals we
// study. Columns are the nonzero generators; the distinguished zero column
// (variable z) is tracked by the `sharp` flag rather than stored. Merged
// configurations carry a leading block of negated columns (variables y).

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "rf/exactmath.hpp"

namespace rf {

struct Configuration {
  int d = 0;
  std::vector<IntVec> cols;
  bool sharp = false;  // zero column present (variable z, always last)
  int y_block = 0;     // first y_block columns are the negated block

  Configuration() = default;
  Configuration(int d_, std::vector<IntVec> cols_, bool sharp_, int y_block_ = 0)
      : d(d_), cols(std::move(cols_)), sharp(sharp_), y_block(y_block_) {
    validate();
  }

  void validate() const {
    std::set<IntVec> seen;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      const IntVec& c = cols[j];
      if (static_cast<int>(c.size()) != d) throw Error("configuration: column length mismatch");
      if (is_zero(c)) throw Error("configuration: explicit zero column (use sharp flag)");
      for (const Int& x : c) {
        if (j < y_block && x > 0) throw Error("configuration: positive entry in negated block");
        if (j >= y_block && x < 0) throw Error("configuration: negative entry outside negated block");
      }
      if (!seen.insert(c).second) throw Error("configuration: duplicate column");
    }
  }

  int num_cols() const { return static_cast<int>(cols.size()); }
  int num_vars() const { return num_cols() + (sharp ? 1 : 0); }
  int z_index() const { return num_cols(); }  // valid only when sharp

  std::string var_name(int v) const {
    if (sharp && v == z_index()) return "z";
    if (v < y_block) return "y" + std::to_string(v + 1);
    return "x" + std::to_string(v - y_block + 1);
  }

  // columns with the zero column appended when sharp
  std::vector<IntVec> all_points() const {
    std::vector<IntVec> pts = cols;
    if (sharp) pts.emplace_back(d, Int(0));
    return pts;
  }

  // (d+1) x num_vars matrix: each variable's column with a homogenizing 1
  IntMat homogenized_matrix() const {
    IntMat m(d + 1, num_vars());
    for (int j = 0; j < num_cols(); ++j) {
      for (int i = 0; i < d; ++i) m.at(i, j) = cols[j][i];
      m.at(d, j) = 1;
    }
    if (sharp) m.at(d, z_index()) = 1;
    return m;
  }

  Configuration sharped() const {
    Configuration c = *this;
    c.sharp = true;
    return c;
  }

  Configuration unsharped() const {
    Configuration c = *this;
    c.sharp = false;
    return c;
  }

  bool operator==(const Configuration& o) const {
    return d == o.d && cols == o.cols && sharp == o.sharp && y_block == o.y_block;
  }
};

// Text format: the matrix format, then an optional trailing line "sharp".
inline Configuration read_configuration(std::istream& in) {
  IntMat m = read_int_mat(in);
  std::string tail;
  bool sharp = false;
  if (in >> tail) {
    if (tail == "sharp")
      sharp = true;
    else
      throw ParseError("configuration: unexpected trailing token '" + tail + "'");
  }
  std::vector<IntVec> cols;
  for (int j = 0; j < m.cols; ++j) cols.push_back(m.column(j));
  return Configuration(m.rows, std::move(cols), sharp);
}

inline void write_configuration(std::ostream& out, const Configuration& c) {
  write_int_mat(out, IntMat::from_columns(c.d, c.cols));
  if (c.sharp) out << "sharp\n";
}

}  // namespace rf
