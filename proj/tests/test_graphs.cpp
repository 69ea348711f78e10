#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "chordweight/graph.hpp"

using namespace chordweight;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

// Isomorphism by trying every bijection.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permuted(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Longest simple cycle by DFS from each start vertex, visiting only larger
// vertices so every cycle is rooted at its minimum.
int brute_circumference(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<bool> used(n, false);
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    for (int w = 0; w < n; ++w) {
      if (!g.has_edge(v, w)) continue;
      if (w == start && len >= 3) best = std::max(best, len);
      if (w > start && !used[w]) {
        used[w] = true;
        dfs(start, w, len + 1);
        used[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    dfs(s, s, 1);
    used[s] = false;
  }
  return best;
}

}  // namespace

TEST_CASE("basic graph operations") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.with_edge_toggled(0, 3).edge_count() == 4);
  CHECK(g.with_edge_toggled(0, 1).edge_count() == 2);
  CHECK_THROWS(Graph(3, {{0, 0}}));
  CHECK_THROWS(Graph(3, {{0, 5}}));
  CHECK(is_connected(g));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(component_masks(Graph(3, {{0, 2}})) == std::vector<std::uint32_t>{0b101, 0b010});
  CHECK(components(disjoint_union(g, g)).size() == 2);
  CHECK(induced(g, 0b0110) == Graph(2, {{0, 1}}));
  CHECK(induced(g, std::vector<int>{0, 2, 3}) == Graph(3, {{1, 2}}));
}

TEST_CASE("edge-list round trip") {
  CHECK(to_edge_list(Graph(3)) == "3;");
  const Graph g(4, {{0, 1}, {1, 3}});
  CHECK(to_edge_list(g) == "4; 0-1,1-3");
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("3;") == Graph(3));
  CHECK_THROWS(parse_edge_list("3; 0-7"));
  CHECK_THROWS(parse_edge_list("x"));
}

TEST_CASE("certificates decide isomorphism") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph a = random_graph(n, 0.5, rng);
    const Graph b = random_graph(n, 0.5, rng);
    CHECK((certificate(a) == certificate(b)) == brute_isomorphic(a, b));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(certificate(permuted(a, perm)) == certificate(a));
    const Graph rep = graph_from_certificate(certificate(a));
    CHECK(brute_isomorphic(rep, a));
    CHECK(certificate(rep) == certificate(a));
  }
  CHECK(certificate_hex(certificate(Graph())).size() > 0);
}

TEST_CASE("graph classes") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == expected[n]);
    std::set<Certificate> certs;
    for (const auto& g : graphs) certs.insert(certificate(g));
    CHECK(certs.size() == graphs.size());
  }
  CHECK_THROWS(enumerate_graphs(kEnumerateGraphsMaxVertices + 1));
}

TEST_CASE("circumference") {
  CHECK(circumference(Graph(5)) == 0);
  CHECK(circumference(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
  CHECK(circumference(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
  CHECK(circumference(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 5);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
    CHECK(circumference(g) == brute_circumference(g));
  }
  for (int l = 1; l <= 4; ++l)
    for (int n = 1; n <= 4; ++n) CHECK(circumference(complete_bipartite(l, n)) == brute_circumference(complete_bipartite(l, n)));
}

TEST_CASE("complete bipartite graphs") {
  for (int l = 0; l <= 4; ++l) {
    for (int n = 0; n <= 4; ++n) {
      const Graph k = complete_bipartite(l, n);
      CHECK(k.vertex_count() == l + n);
      CHECK(k.edge_count() == l * n);
      CHECK(certificate(k) == certificate(complete_bipartite(n, l)));
      CHECK(circumference(k) == (std::min(l, n) >= 2 ? 2 * std::min(l, n) : 0));
      // Every induced subgraph is again complete bipartite.
      for (std::uint32_t s = 0; s < (1u << (l + n)); ++s) {
        const int left = std::popcount(s & ((1u << l) - 1));
        const int right = std::popcount(s) - left;
        CHECK(certificate(induced(k, s)) == certificate(complete_bipartite(left, right)));
      }
    }
  }
}

TEST_CASE("four-term graph moves") {
  // Path a - b - x: toggling ab removes it, the tilde move joins a to x.
  const Graph g(3, {{0, 1}, {1, 2}});
  auto [g0, g1, g2, g3] = four_term_graphs(g, 0, 1);
  CHECK(g0 == g);
  CHECK(g1 == Graph(3, {{1, 2}}));
  CHECK(g2 == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(g3 == Graph(3, {{1, 2}, {0, 2}}));
  CHECK_THROWS(four_term_graphs(g, 0, 0));
}
