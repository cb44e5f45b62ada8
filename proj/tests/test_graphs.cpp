#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rf/graphs.hpp"

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

Graph path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// oracle: count stable sets by checking every pair inside every subset
int count_stable_oracle(const Graph& g) {
  int cnt = 0;
  for (uint32_t mask = 0; mask < (1u << g.d); ++mask) {
    bool stable = true;
    for (int i = 1; i <= g.d && stable; ++i)
      for (int j = i + 1; j <= g.d && stable; ++j)
        if ((mask >> (i - 1) & 1u) && (mask >> (j - 1) & 1u) && g.has_edge(i, j)) stable = false;
    if (stable) ++cnt;
  }
  return cnt;
}

// definitional perfection: chi(H) == omega(H) for every induced subgraph H
bool perfect_by_definition(const Graph& g) {
  for (uint32_t mask = 1; mask < (1u << g.d); ++mask) {
    std::vector<int> vs;
    for (int v = 1; v <= g.d; ++v)
      if (mask >> (v - 1) & 1u) vs.push_back(v);
    Graph h = induced_subgraph(g, vs);
    if (chromatic_number(h) != clique_number(h)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("stable sets") {
  CHECK(stable_sets(complete(3)).size() == 4);
  CHECK(stable_sets(Graph(2)).size() == 4);
  // C5: frozen from exhaustive enumeration over all 32 subsets
  CHECK(count_stable_oracle(cycle(5)) == 11);
  CHECK(stable_sets(cycle(5)).size() == 11);
}

TEST_CASE("stable sets form a simplicial complex") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    int d = 1 + static_cast<int>(rng() % 6);
    Graph g(d);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (rng() % 2) g.add_edge(i, j);
    auto sets = stable_sets(g);
    std::set<uint32_t> have(sets.begin(), sets.end());
    CHECK(have.count(0));
    for (int v = 0; v < d; ++v) CHECK(have.count(1u << v));
    for (uint32_t s : sets)
      for (int v = 0; v < d; ++v)
        if (s >> v & 1u) CHECK(have.count(s & ~(1u << v)));
  }
}

TEST_CASE("clique and chromatic numbers") {
  CHECK(clique_number(complete(4)) == 4);
  CHECK(clique_number(cycle(5)) == 2);
  CHECK(clique_number(Graph(3)) == 1);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(cycle(4)) == 2);
}

TEST_CASE("odd hole detection") {
  auto h = find_odd_hole(cycle(5));
  REQUIRE(h.has_value());
  std::vector<int> sorted = *h;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5});

  CHECK_FALSE(find_odd_hole(cycle(4)).has_value());
  CHECK_FALSE(find_odd_hole(path(6)).has_value());

  // C6 plus a chord leaving an induced C5: 1-2-3-4-5-6-1 with chord 2-6
  Graph g = cycle(6);
  g.add_edge(2, 6);
  auto h2 = find_odd_hole(g);
  REQUIRE(h2.has_value());
  std::vector<int> s2 = *h2;
  std::sort(s2.begin(), s2.end());
  CHECK(s2 == std::vector<int>{2, 3, 4, 5, 6});
}

TEST_CASE("perfection") {
  CHECK_FALSE(is_perfect(cycle(5)));
  for (int d = 1; d <= 7; ++d) CHECK(is_perfect(complete(d)));
  CHECK_FALSE(is_perfect(complement(cycle(7))));
  CHECK(is_perfect(cycle(6)));
  CHECK(is_perfect(path(5)));
}

TEST_CASE("perfection matches the chi = omega definition") {
  for (int d = 1; d <= 5; ++d)
    for (const Graph& g : graph_class_reps(d))
      CHECK(is_perfect(g) == perfect_by_definition(g));
  // d = 6: spot-check a sample of classes plus every graph with <= 7 edges
  auto reps = graph_class_reps(6);
  int step = 3;
  for (std::size_t i = 0; i < reps.size(); i += step)
    CHECK(is_perfect(reps[i]) == perfect_by_definition(reps[i]));
}

TEST_CASE("perfection is self-complementary") {
  for (int d = 1; d <= 6; ++d)
    for (const Graph& g : graph_class_reps(d)) CHECK(is_perfect(g) == is_perfect(complement(g)));
}

TEST_CASE("canonical form") {
  Graph a(3, {{1, 3}, {3, 2}});
  Graph b(3, {{1, 2}, {2, 3}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(cycle(5)) != canonical_form(path(5)));
  CHECK(canonical_form(complete(3)) ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937 rng(77);
  for (int t = 0; t < 30; ++t) {
    int d = 2 + static_cast<int>(rng() % 5);
    Graph g(d);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(d);
    for (auto [i, j] : g.edges()) h.add_edge(perm[i - 1], perm[j - 1]);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("perfect graph counts for small n") {
  CHECK(count_perfect(2) == 2);
  CHECK(count_perfect_pairs(2) == 3);
  CHECK(count_perfect(3) == 4);
  CHECK(count_perfect(4) == 11);
  CHECK(count_perfect_pairs(4) == 66);
  CHECK(count_perfect(5) == 33);
  CHECK(count_perfect_pairs(5) == 561);
}

TEST_CASE("graph text io") {
  std::istringstream in("5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  Graph g = read_graph_text(in);
  CHECK(g == cycle(5));
  std::ostringstream out;
  write_graph_text(out, g);
  std::istringstream in2(out.str());
  CHECK(read_graph_text(in2) == g);
}
