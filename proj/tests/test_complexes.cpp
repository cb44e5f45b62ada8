#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rf/complexes.hpp"

using namespace rf;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n, 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

SimplicialComplex boundary_of_triangle() {
  return from_facets(3, {{1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("from_facets closure") {
  auto sc = from_facets(3, {{1, 2}, {2, 3}});
  CHECK(sc.faces.size() == 6);  // {}, 1, 2, 3, 12, 23
  CHECK(sc.has_face(0b011));
  CHECK(sc.has_face(0b110));
  CHECK_FALSE(sc.has_face(0b101));
  CHECK_FALSE(sc.has_face(0b111));

  auto full = from_facets(3, {{1, 2, 3}});
  CHECK(full.faces.size() == 8);

  CHECK(boundary_of_triangle().faces.size() == 7);
  CHECK_THROWS_AS(from_facets(2, {{1, 3}}), Error);
}

TEST_CASE("stable set complex") {
  CHECK(stable_set_complex(complete(4)).faces.size() == 5);
  CHECK(stable_set_complex(Graph(3)).faces.size() == 8);
  CHECK(stable_set_complex(cycle(5)).faces.size() == 11);
}

TEST_CASE("flagness") {
  CHECK_FALSE(is_flag(boundary_of_triangle()).has_value());

  auto g = is_flag(stable_set_complex(cycle(5)));
  REQUIRE(g.has_value());
  CHECK(*g == cycle(5));

  auto e = is_flag(from_facets(3, {{1, 2, 3}}));
  REQUIRE(e.has_value());
  CHECK(e->edge_count() == 0);
}

TEST_CASE("flag round trip for all small graphs") {
  for (int d = 1; d <= 5; ++d)
    for (const Graph& g : graph_class_reps(d)) {
      auto back = is_flag(stable_set_complex(g));
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  std::mt19937 rng(41);
  for (int t = 0; t < 25; ++t) {
    Graph g(6);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        if (rng() % 2) g.add_edge(i, j);
    auto back = is_flag(stable_set_complex(g));
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
}

TEST_CASE("incidence matrix columns and order") {
  auto k2 = incidence_matrix(stable_set_complex(complete(2)));
  REQUIRE(k2.num_cols() == 2);
  CHECK(k2.sharp);
  CHECK(k2.cols[0] == int_vec({1, 0}));
  CHECK(k2.cols[1] == int_vec({0, 1}));

  auto full2 = incidence_matrix(from_facets(2, {{1, 2}}));
  REQUIRE(full2.num_cols() == 3);
  CHECK(full2.cols[0] == int_vec({1, 1}));
  CHECK(full2.cols[1] == int_vec({1, 0}));
  CHECK(full2.cols[2] == int_vec({0, 1}));

  CHECK(incidence_matrix(boundary_of_triangle()).num_vars() == 7);
}

TEST_CASE("incidence matrices have distinct columns and identity minor") {
  auto check_incidence = [](const SimplicialComplex& sc) {
    auto conf = incidence_matrix(sc);
    std::set<IntVec> seen(conf.cols.begin(), conf.cols.end());
    CHECK(seen.size() == conf.cols.size());
    for (int v = 0; v < sc.d; ++v) {
      IntVec e(sc.d, Int(0));
      e[v] = 1;
      CHECK(seen.count(e));
    }
  };
  for (int d = 1; d <= 4; ++d)
    for (const auto& sc : all_complexes_on(d)) check_incidence(sc);
  // d = 5 sampled through random facet families
  std::mt19937 rng(97);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::vector<int>> facets;
    int nf = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < nf; ++k) {
      std::vector<int> f;
      for (int v = 1; v <= 5; ++v)
        if (rng() % 2) f.push_back(v);
      if (!f.empty()) facets.push_back(std::move(f));
    }
    check_incidence(from_facets(5, facets));
  }
}

TEST_CASE("induced subcomplexes") {
  auto full = from_facets(3, {{1, 2, 3}});
  CHECK(induced_subcomplex(full, {1, 3}) == from_facets(2, {{1, 2}}));

  Graph p3(3, {{1, 2}, {2, 3}});
  CHECK(induced_subcomplex(stable_set_complex(cycle(5)), {1, 2, 3}) ==
        stable_set_complex(p3));

  auto single = induced_subcomplex(stable_set_complex(cycle(5)), {4});
  CHECK(single.faces.size() == 2);
}

TEST_CASE("induced subcomplex commutes with induced subgraph") {
  for (int d = 2; d <= 5; ++d)
    for (const Graph& g : graph_class_reps(d))
      for (uint32_t mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> vs;
        for (int v = 1; v <= d; ++v)
          if (mask >> (v - 1) & 1u) vs.push_back(v);
        CHECK(induced_subcomplex(stable_set_complex(g), vs) ==
              stable_set_complex(induced_subgraph(g, vs)));
      }
}

TEST_CASE("complex enumeration counts") {
  CHECK(all_complexes_on(1).size() == 1);
  CHECK(all_complexes_on(2).size() == 2);
  CHECK(all_complexes_on(3).size() == 9);
  // every enumerated complex is down-closed with all singletons
  for (const auto& sc : all_complexes_on(4)) {
    CHECK(sc.has_face(0));
    for (int v = 0; v < 4; ++v) CHECK(sc.has_face(uint64_t{1} << v));
    for (uint64_t f : sc.faces)
      for (int v = 0; v < 4; ++v)
        if (f >> v & 1u) CHECK(sc.has_face(f & ~(uint64_t{1} << v)));
  }
}

TEST_CASE("complex text io") {
  std::istringstream in("3\n1 2\n2 3\n");
  auto sc = read_complex_text(in);
  CHECK(sc == from_facets(3, {{1, 2}, {2, 3}}));
  std::ostringstream out;
  write_complex_text(out, sc);
  std::istringstream in2(out.str());
  CHECK(read_complex_text(in2) == sc);
}

TEST_CASE("configuration io with sharp flag") {
  std::istringstream in("2 3\n1 0 1\n0 1 1\nsharp\n");
  auto conf = read_configuration(in);
  CHECK(conf.d == 2);
  CHECK(conf.num_cols() == 3);
  CHECK(conf.sharp);
  CHECK(conf.num_vars() == 4);
  CHECK(conf.var_name(0) == "x1");
  CHECK(conf.var_name(3) == "z");
  std::ostringstream out;
  write_configuration(out, conf);
  std::istringstream in2(out.str());
  CHECK(read_configuration(in2) == conf);

  std::istringstream dup("2 2\n1 1\n0 0\n");
  CHECK_THROWS_AS(read_configuration(dup), Error);
}
