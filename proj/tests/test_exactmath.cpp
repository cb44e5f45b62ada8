#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rf/exactmath.hpp"

using namespace rf;

namespace {

// independent oracle: cofactor expansion along the first row
Int det_cofactor(const IntMat& m) {
  int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int s = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(sub);
    s += (j % 2 == 0) ? term : Int(-term);
  }
  return s;
}

IntMat random_mat(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("positive and negative parts") {
  auto [p1, m1] = positive_negative_parts(int_vec({1, -2, 0}));
  CHECK(p1 == int_vec({1, 0, 0}));
  CHECK(m1 == int_vec({0, 2, 0}));

  auto [p2, m2] = positive_negative_parts(int_vec({0, 0}));
  CHECK(p2 == int_vec({0, 0}));
  CHECK(m2 == int_vec({0, 0}));

  auto [p3, m3] = positive_negative_parts(int_vec({3, 5}));
  CHECK(p3 == int_vec({3, 5}));
  CHECK(m3 == int_vec({0, 0}));
}

TEST_CASE("positive/negative parts reconstruct with disjoint support") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 200; ++t) {
    IntVec a(5);
    for (auto& x : a) x = dist(rng);
    auto [p, m] = positive_negative_parts(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(p[i] >= 0);
      CHECK(m[i] >= 0);
      CHECK(p[i] - m[i] == a[i]);
      CHECK((p[i] == 0 || m[i] == 0));
    }
  }
}

TEST_CASE("kernel lattice basis on named inputs") {
  SECTION("identity has trivial kernel") {
    CHECK(kernel_lattice_basis(IntMat::identity(2)).empty());
  }
  SECTION("homogenized simplex configuration") {
    // columns e1, e2, e1+e2, 0 with a row of ones appended
    IntMat m = IntMat::from_rows({int_vec({1, 0, 1, 0}), int_vec({0, 1, 1, 0}),
                                  int_vec({1, 1, 1, 1})});
    auto basis = kernel_lattice_basis(m);
    REQUIRE(basis.size() == 1);
    IntVec v = basis[0];
    // normalize sign: first nonzero positive
    for (auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    CHECK(v == int_vec({1, 1, -1, -1}));
    CHECK(is_zero(m.mul(basis[0])));
  }
  SECTION("equal columns") {
    IntMat m = IntMat::from_rows({int_vec({1, 1})});
    auto basis = kernel_lattice_basis(m);
    REQUIRE(basis.size() == 1);
    IntVec v = basis[0];
    if (v[0] < 0) v = vec_neg(v);
    CHECK(v == int_vec({1, -1}));
  }
}

TEST_CASE("kernel basis vectors annihilate and count matches rank defect") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    IntMat m = random_mat(rng, 3, 5, -3, 3);
    auto basis = kernel_lattice_basis(m);
    CHECK(static_cast<int>(basis.size()) == m.cols - rank_of(m));
    for (const auto& v : basis) CHECK(is_zero(m.mul(v)));
  }
}

TEST_CASE("lattice span detection") {
  CHECK(lattice_span_is_full({int_vec({1, 0}), int_vec({0, 1})}, 2));
  CHECK_FALSE(lattice_span_is_full({int_vec({2, 0}), int_vec({0, 1})}, 2));
  // Smith divisors of [[1,1],[1,-1]] are 1,2
  CHECK_FALSE(lattice_span_is_full({int_vec({1, 1}), int_vec({1, -1})}, 2));
  for (int d = 1; d <= 8; ++d) {
    std::vector<IntVec> basis;
    for (int i = 0; i < d; ++i) {
      IntVec e(d, Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
    CHECK(lattice_span_is_full(basis, d));
  }
}

TEST_CASE("smith divisors chain") {
  IntMat m = IntMat::from_rows({int_vec({1, 1}), int_vec({1, -1})});
  auto div = smith_divisors(m);
  REQUIRE(div.size() == 2);
  CHECK(div[0] == 1);
  CHECK(div[1] == 2);

  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    IntMat r = random_mat(rng, 4, 4, -4, 4);
    auto ds = smith_divisors(r);
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) CHECK(ds[i + 1] % ds[i] == 0);
    Int prod = 1;
    for (const auto& x : ds) prod *= x;
    if (ds.size() == 4) CHECK(prod == boost::multiprecision::abs(determinant(r)));
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(IntMat::identity(3)) == 1);
  CHECK(determinant(IntMat::from_rows({int_vec({1, 1}), int_vec({0, 1})})) == 1);
  CHECK(determinant(IntMat::from_rows({int_vec({2, 0}), int_vec({0, 3})})) == 6);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 80; ++t) {
      IntMat m = random_mat(rng, n, n, -5, 5);
      CHECK(determinant(m) == det_cofactor(m));
    }
}

TEST_CASE("matrix text round trip") {
  IntMat m = IntMat::from_rows({int_vec({1, -2, 3}), int_vec({0, 4, -5})});
  std::ostringstream os;
  write_int_mat(os, m);
  std::istringstream is(os.str());
  CHECK(read_int_mat(is) == m);

  std::istringstream bad("2 2\n1 2\n3");
  CHECK_THROWS_AS(read_int_mat(bad), ParseError);
}

TEST_CASE("rational formatting") {
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(1) / 2) == "1/2");
  CHECK(rat_to_string(Rat(-4) / 6) == "-2/3");
  CHECK(rat_is_integer(Rat(8) / 4));
}
