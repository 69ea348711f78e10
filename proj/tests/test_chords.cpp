#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "chordweight/chord_diagram.hpp"

using namespace chordweight;

namespace {

// Smallest relabelled rotation, written out from scratch.
std::vector<int> brute_canonical(const std::vector<int>& word) {
  std::vector<int> best;
  for (std::size_t r = 0; r < word.size(); ++r) {
    std::map<int, int> relabel;
    std::vector<int> w;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const int label = word[(r + i) % word.size()];
      if (!relabel.count(label)) relabel[label] = static_cast<int>(relabel.size()) + 1;
      w.push_back(relabel[label]);
    }
    if (best.empty() || w < best) best = w;
  }
  return best;
}

// Classes of perfect matchings of 2n points on a circle: every word over
// 1..n with each label twice, modulo rotation and relabelling.
std::size_t brute_class_count(int n) {
  std::vector<int> word;
  for (int i = 1; i <= n; ++i) word.insert(word.end(), {i, i});
  std::set<std::vector<int>> classes;
  do {
    classes.insert(brute_canonical(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return classes.size();
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_dow("1 2 1 2").order() == 2);
  CHECK(parse_dow("1 2 1 2").crosses(1, 2));
  CHECK_FALSE(parse_dow("1 1 2 2").crosses(1, 2));
  CHECK(parse_dow("7,3,7,3") == parse_dow("1 2 1 2"));
  CHECK(parse_dow("abab") == parse_dow("1 2 1 2"));
  CHECK_THROWS_AS(parse_dow("1 2 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dow("1 1 1 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dow("1 x 1 x"), std::invalid_argument);
  CHECK(parse_dow("").order() == 0);
}

TEST_CASE("canonical form") {
  CHECK(serialize(parse_dow("2 1 2 1")) == "1 2 1 2");
  const std::vector<int> base{1, 1, 2, 2, 3, 3};
  std::set<std::string> seen;
  for (int r = 0; r < 6; ++r) {
    std::vector<int> w = base;
    std::rotate(w.begin(), w.begin() + r, w.end());
    seen.insert(serialize(ChordDiagram(w)));
  }
  CHECK(seen.size() == 1);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      CHECK(canonicalize(d) == d);
      CHECK(d.word() == brute_canonical(d.word()));
    }
  }
  // Rotations only, so mirror pairs stay distinct. The first one appears at
  // order 4 (18 rotation classes, 17 dihedral ones).
  for (int n = 0; n <= 4; ++n) {
    int chiral = 0;
    for (const auto& d : enumerate_diagrams(n)) chiral += canonicalize(reversed(d)) != d ? 1 : 0;
    CHECK(chiral == (n == 4 ? 2 : 0));
  }
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 18, 105};
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_diagrams(n).size() == expected[n]);
    if (n <= 4) CHECK(enumerate_diagrams(n).size() == brute_class_count(n));
  }
  CHECK(brute_class_count(5) == 105);
  CHECK_THROWS_AS(enumerate_diagrams(8), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_diagrams(3, 2), std::invalid_argument);
}

TEST_CASE("product and restriction") {
  CHECK(serialize(product(parse_dow("1 1"), parse_dow("1 1"))) == "1 1 2 2");
  const ChordDiagram d = parse_dow("1 2 3 1 3 2");
  CHECK(product(ChordDiagram(), d) == canonicalize(d));
  CHECK(product(d, parse_dow("1 2 1 2")).order() == 5);
  CHECK(serialize(restrict_to(parse_dow("1 2 1 2"), {1})) == "1 1");
  CHECK(restrict_to(d, {1, 2, 3}) == canonicalize(d));
  CHECK(serialize(restrict_to(bipartite_diagram(2, 3), {1, 2})) == serialize(parse_dow("1 2 2 1")));
  CHECK_THROWS_AS(restrict_to(d, {4}), std::out_of_range);
}

TEST_CASE("intersection graphs") {
  CHECK(intersection_graph(parse_dow("1 2 1 2")) == complete_bipartite(1, 1));
  CHECK(intersection_graph(parse_dow("1 1 2 2")).edge_count() == 0);
  CHECK(certificate(intersection_graph(bipartite_diagram(3, 4))) == certificate(complete_bipartite(3, 4)));
  const Graph c4 = intersection_graph(bipartite_diagram(2, 2));
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(bipartite_diagram(0, 3) == parse_dow("1 2 3 3 2 1"));
  CHECK(canonicalize(bipartite_diagram(1, 1)) == parse_dow("1 2 1 2"));
  for (int l = 0; l <= 4; ++l) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(certificate(intersection_graph(bipartite_diagram(l, n))) == certificate(complete_bipartite(l, n)));
    }
  }
  for (int n = 0; n <= 5; ++n) {
    // K_{1,1,n}: two adjacent vertices both joined to n independent ones.
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int i = 0; i < n; ++i) edges.insert(edges.end(), {{0, 2 + i}, {1, 2 + i}});
    CHECK(certificate(intersection_graph(tripartite_11n_diagram(n))) == certificate(Graph(n + 2, edges)));
  }
}

TEST_CASE("products are disjoint unions of intersection graphs") {
  for (const auto& a : enumerate_diagrams(3)) {
    for (const auto& b : enumerate_diagrams(2)) {
      CHECK(certificate(intersection_graph(product(a, b))) ==
            certificate(disjoint_union(intersection_graph(a), intersection_graph(b))));
    }
  }
}

TEST_CASE("four-term quadruples match the graph moves") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      const auto quads = four_term_quadruples(d);
      CHECK_FALSE(quads.empty());
      for (const auto& q : quads) {
        CHECK(q.d1 == d);
        CHECK(q.d2.order() == n);
        CHECK(q.d3.order() == n);
        CHECK(q.d4.order() == n);
        auto [g, g_prime, g_tilde, g_tilde_prime] = four_term_graphs(intersection_graph(d), q.a - 1, q.b - 1);
        CHECK(certificate(intersection_graph(q.d2)) == certificate(g_prime));
        CHECK(certificate(intersection_graph(q.d3)) == certificate(g_tilde));
        CHECK(certificate(intersection_graph(q.d4)) == certificate(g_tilde_prime));
      }
    }
  }
  // One quadruple per adjacent site and moving chord.
  CHECK(four_term_quadruples(parse_dow("1 2 1 2")).size() == 8);
}

TEST_CASE("random diagrams are reproducible") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    const ChordDiagram x = random_diagram(6, a);
    CHECK(x == random_diagram(6, b));
    CHECK(x.order() == 6);
    CHECK(canonicalize(x) == x);
  }
}
