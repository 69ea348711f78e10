#include <doctest.h>

#include <thread>

#include "chordweight/chord_diagram.hpp"
#include "chordweight/combinatorics.hpp"
#include "chordweight/oracle.hpp"
#include "chordweight/sl2.hpp"

using namespace chordweight;

namespace {

const CasimirPoly c = CasimirPoly::c();
const CasimirPoly one{1};

CasimirPoly signed_sum(const sl2::SixTermInstance& inst) {
  CasimirPoly s;
  for (int i = 0; i < 5; ++i) s = s + oracle::eval_oracle(inst.terms[i]) * Rational(sl2::kSixTermSigns[i]);
  return s;
}

}  // namespace

TEST_CASE("small values") {
  CHECK(sl2::eval(ChordDiagram()) == one);
  CHECK(sl2::eval(parse_dow("1 1")) == c);
  CHECK(sl2::eval(parse_dow("1 2 1 2")) == c * c - c);
  CHECK(sl2::eval(parse_dow("1 2 3 1 2 3")) == CasimirPoly{0, 2, -3, 1});
  CHECK(sl2::eval(bipartite_diagram(2, 2)) == CasimirPoly{0, -4, 8, -4, 1});
  // Chains of chords form trees: c (c-1)^(n-1).
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> w{1};
    for (int i = 2; i <= n; ++i) w.insert(w.end(), {i, i - 1});
    w.push_back(n);
    CHECK(sl2::eval(ChordDiagram(w)) == c * (c - one).pow(n - 1));
  }
}

TEST_CASE("evaluator agrees with the representation oracle") {
  sl2::Evaluator ev;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n)) CHECK(ev.eval(d) == oracle::eval_oracle(d));
  }
  CHECK(ev.stats().fallbacks == 0);
  CHECK(ev.cache_size() > 0);
  const auto before = ev.stats().hits;
  ev.eval(parse_dow("1 2 1 2"));
  CHECK(ev.stats().hits == before + 1);
  ev.clear();
  CHECK(ev.cache_size() == 0);
}

TEST_CASE("six-term instances hold under the oracle") {
  int instances = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      if (!is_connected(intersection_graph(d))) continue;
      for (const auto& inst : sl2::six_term_instances(d)) {
        ++instances;
        CHECK((inst.relation == 1 || inst.relation == 2));
        CHECK(signed_sum(inst) == oracle::eval_oracle(d));
      }
    }
  }
  CHECK(instances > 100);
  CHECK(sl2::six_term_instances(parse_dow("1 1")).empty());
}

TEST_CASE("termination measure") {
  CHECK(sl2::measure_less(parse_dow("1 1"), parse_dow("1 2 1 2")));
  CHECK(sl2::measure_less(parse_dow("1 1 2 2"), parse_dow("1 2 1 2")));
  CHECK_FALSE(sl2::measure_less(parse_dow("1 2 1 2"), parse_dow("2 1 2 1")));
}

TEST_CASE("bipartite closed forms") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(sl2::k_closed(0, n) == c.pow(n));
    CHECK(sl2::k_closed(1, n) == c * (c - one).pow(n));
  }
  for (int l = 0; l <= 3; ++l) {
    for (int n = 0; l + n <= 6; ++n) CHECK(sl2::k_closed(l, n) == oracle::eval_oracle(bipartite_diagram(l, n)));
  }
  for (int l : {2, 3})
    for (int n = 0; n <= 12; ++n) CHECK(sl2::k_rec(l, n) == sl2::k_closed(l, n));
  for (int n = 0; n <= 4; ++n) CHECK(sl2::k_triangle(n) == oracle::eval_oracle(tripartite_11n_diagram(n)));
  CHECK_THROWS(sl2::k_closed(4, 1));
  CHECK_THROWS(sl2::k_rec(1, 1));
}

TEST_CASE("generating functions") {
  for (int l = 0; l <= 3; ++l) CHECK(sl2::egf_K(l, 9) == sl2::egf_K_exponential(l, 9));
  const auto k = sl2::closed_form_invariant();
  for (int l = 1; l <= 3; ++l) {
    CHECK(projection_egf(l, k, 9) == sl2::egf_P_exponential(l, 9));
    for (int n = 0; n + l <= 9; ++n) {
      CHECK(sl2::egf_P_exponential(l, 9).coeff(n + l) * Rational(factorial(n)) == project_bipartite_eval(l, n, k));
    }
  }
  CHECK(sl2::ogf_P(2, 4) == std::vector<CasimirPoly>{CasimirPoly(), c, CasimirPoly{0, -4, 2}, CasimirPoly{0, 13, -10}});
  const auto m1 = sl2::match_ogf(1, 8, k);
  CHECK(m1.shifted);
  CHECK_FALSE(m1.unshifted);
  for (int l : {2, 3}) {
    const auto m = sl2::match_ogf(l, 8, k);
    CHECK(m.unshifted);
    CHECK_FALSE(m.shifted);
  }
  CHECK(sl2::to_string(sl2::OgfConvention::shifted) == "sum_n w(pi(K_{l,n})) s^(n+l)");
}

TEST_CASE("projection degrees") {
  const auto k = sl2::closed_form_invariant();
  for (int n = 0; n <= 10; ++n) CHECK(project_bipartite_eval(1, n, k) == c * Rational(n % 2 == 0 ? 1 : -1));
  for (int l = 1; l <= 3; ++l) {
    for (int n = 0; n <= 8; ++n) {
      const auto r = sl2::lando_degree_check(l, n, k);
      CHECK(r.ok);
      CHECK(r.degree <= r.bound);
      if (n >= l) CHECK(r.degree == l);
    }
  }
}

TEST_CASE("bipartite table") {
  sl2::Evaluator ev;
  sl2::BipartiteTable table(ev);
  for (int n = 0; n <= 5; ++n) {
    CHECK(table.k(2, n) == sl2::k_closed(2, n));
    CHECK(table.k11(n) == sl2::k_triangle(n));
  }
}

TEST_CASE("concurrent evaluation") {
  sl2::Evaluator ev;
  const auto diagrams = enumerate_diagrams(5);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < diagrams.size() + t; ++i) {
        const auto& d = diagrams[(i * 7) % diagrams.size()];
        if (ev.eval(d) != sl2::eval(d)) ++mismatches[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) CHECK(m == 0);
  CHECK(ev.stats().fallbacks == 0);
}
