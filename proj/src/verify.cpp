#include "chordweight/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chordweight/combinatorics.hpp"
#include "chordweight/hopf.hpp"
#include "chordweight/oracle.hpp"

namespace chordweight::verify {

bool Report::passed() const {
  return !budget_exceeded && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fourterm", "isograph", "oracle", "recurrences", "hopf", "lando"};
  return names;
}

namespace {

struct BudgetExceeded {};

class Context {
 public:
  Context(const Config& config, sl2::Evaluator& ev)
      : config_(config),
        ev_(ev),
        deadline_(std::chrono::steady_clock::now() + std::chrono::seconds(config.budget_seconds)) {}

  const Config& config() const { return config_; }
  sl2::Evaluator& ev() { return ev_; }

  void tick() const {
    if (std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded{};
  }
  bool expired() const { return std::chrono::steady_clock::now() > deadline_; }

  void progress(const std::string& line) const {
    if (config_.progress) *config_.progress << line << '\n' << std::flush;
  }

  Report* report = nullptr;

  // Runs body, which fills in the check; records it even when the budget
  // runs out halfway.
  void check(const std::string& name, const std::function<void(Check&)>& body) {
    progress("  " + report->suite + ": " + name);
    Check c;
    c.name = name;
    try {
      body(c);
    } catch (const BudgetExceeded&) {
      c.passed = false;
      c.detail = "budget exhausted after " + std::to_string(c.count) + " items";
      report->checks.push_back(std::move(c));
      throw;
    }
    report->checks.push_back(std::move(c));
  }

 private:
  const Config& config_;
  sl2::Evaluator& ev_;
  std::chrono::steady_clock::time_point deadline_;
};

void fail(Check& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

std::string range_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

void suite_fourterm(Context& ctx) {
  const int top = std::min(ctx.config().max_order, 5);
  ctx.check("four-term sums vanish, orders " + range_text(2, top), [&](Check& c) {
    for (int n = 2; n <= top; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        for (const auto& q : four_term_quadruples(d)) {
          ctx.tick();
          ++c.count;
          const CasimirPoly sum = ctx.ev().eval(q.d1) - ctx.ev().eval(q.d2) - ctx.ev().eval(q.d3) + ctx.ev().eval(q.d4);
          if (!sum.is_zero()) fail(c, "nonzero sum " + sum.to_string() + " at " + d.to_string());
        }
      }
    }
  });
  ctx.check("four-term diagrams realise the graph moves, orders " + range_text(2, top), [&](Check& c) {
    for (int n = 2; n <= top; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        const Graph g = intersection_graph(d);
        for (const auto& q : four_term_quadruples(d)) {
          ctx.tick();
          ++c.count;
          auto [g1, g2, g3, g4] = four_term_graphs(g, q.a - 1, q.b - 1);
          // d2..d4 keep the labels of d1 up to renumbering by first
          // occurrence, so compare isomorphism classes.
          const bool same = certificate(intersection_graph(q.d1)) == certificate(g1) &&
                            certificate(intersection_graph(q.d2)) == certificate(g2) &&
                            certificate(intersection_graph(q.d3)) == certificate(g3) &&
                            certificate(intersection_graph(q.d4)) == certificate(g4);
          if (!same) fail(c, "graph mismatch at " + d.to_string());
        }
      }
    }
  });
}

void suite_isograph(Context& ctx) {
  const int top = std::min(ctx.config().max_order, kEnumerateMaxOrder);
  ctx.check("eval constant on intersection-graph classes, orders " + range_text(1, top), [&](Check& c) {
    std::size_t classes = 0;
    for (int n = 1; n <= top; ++n) {
      std::map<Certificate, CasimirPoly> seen;
      for (const auto& d : enumerate_diagrams(n)) {
        ctx.tick();
        ++c.count;
        const CasimirPoly value = ctx.ev().eval(d);
        auto [it, fresh] = seen.emplace(certificate(intersection_graph(d)), value);
        if (!fresh && it->second != value) fail(c, "two values on one graph class, e.g. " + d.to_string());
      }
      classes += seen.size();
    }
    c.detail = c.passed ? std::to_string(classes) + " graph classes" : c.detail;
  });
  ctx.check("eval monic of degree n, orders " + range_text(1, top), [&](Check& c) {
    for (int n = 1; n <= top; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        ctx.tick();
        ++c.count;
        const CasimirPoly value = ctx.ev().eval(d);
        if (value.degree() != n || !value.is_monic()) fail(c, d.to_string() + " -> " + value.to_string());
      }
    }
  });
  ctx.check("leaf rule, orders " + range_text(2, top), [&](Check& c) {
    for (int n = 2; n <= top; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        const Graph g = intersection_graph(d);
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (g.degree(v) != 1) continue;
          ctx.tick();
          ++c.count;
          std::vector<int> keep;
          for (int u = 0; u < g.vertex_count(); ++u) {
            if (u != v) keep.push_back(u + 1);
          }
          if (ctx.ev().eval(d) != CasimirPoly{-1, 1} * ctx.ev().eval(restrict_to(d, keep))) {
            fail(c, "leaf rule fails at " + d.to_string());
          }
        }
      }
    }
  });
  const int product_top = std::min(top, 6);
  ctx.check("multiplicativity, total order <= " + std::to_string(product_top), [&](Check& c) {
    for (int a = 1; a < product_top; ++a) {
      for (int b = a; a + b <= product_top; ++b) {
        const auto left = enumerate_diagrams(a);
        const auto right = enumerate_diagrams(b);
        for (const auto& x : left) {
          for (const auto& y : right) {
            ctx.tick();
            ++c.count;
            if (ctx.ev().eval(product(x, y)) != ctx.ev().eval(x) * ctx.ev().eval(y)) {
              fail(c, "product " + x.to_string() + " | " + y.to_string());
            }
          }
        }
      }
    }
  });
}

void suite_oracle(Context& ctx) {
  const int top = std::min(ctx.config().max_order, 5);
  ctx.check("eval equals oracle on all diagrams, orders " + range_text(0, top), [&](Check& c) {
    std::ostringstream counts;
    for (int n = 0; n <= top; ++n) {
      const auto diagrams = enumerate_diagrams(n);
      counts << (n ? "," : "") << diagrams.size();
      for (const auto& d : diagrams) {
        ctx.tick();
        ++c.count;
        if (ctx.ev().eval(d) != oracle::eval_oracle(d)) fail(c, "disagreement at " + d.to_string());
      }
    }
    if (c.passed) c.detail = "class counts " + counts.str();
  });
  if (ctx.config().max_order >= 6) {
    ctx.check("eval equals oracle on 50 random diagrams of order 6", [&](Check& c) {
      std::mt19937_64 rng(ctx.config().seed);
      for (int i = 0; i < 50; ++i) {
        ctx.tick();
        ++c.count;
        const ChordDiagram d = random_diagram(6, rng);
        if (ctx.ev().eval(d) != oracle::eval_oracle(d)) fail(c, "disagreement at " + d.to_string());
      }
      if (c.passed) c.detail = "seed " + std::to_string(ctx.config().seed);
    });
  }
  const int rot_top = std::min(top, 4);
  ctx.check("oracle rotation invariant, orders " + range_text(1, rot_top), [&](Check& c) {
    for (int n = 1; n <= rot_top; ++n) {
      for (const auto& d : enumerate_diagrams(n)) {
        const CasimirPoly base = oracle::eval_oracle(d);
        std::vector<int> w = d.word();
        for (std::size_t r = 1; r < w.size(); ++r) {
          ctx.tick();
          ++c.count;
          std::rotate(w.begin(), w.begin() + 1, w.end());
          if (oracle::eval_oracle(ChordDiagram(w)) != base) fail(c, "rotation changes " + d.to_string());
        }
      }
    }
  });
  ctx.check("evaluator never fell back to the oracle", [&](Check& c) {
    c.count = ctx.ev().stats().fallbacks;
    c.detail = "fallbacks " + std::to_string(c.count);
    if (c.count != 0) c.passed = false;
  });
}

void suite_recurrences(Context& ctx) {
  sl2::BipartiteTable table(ctx.ev());
  const CasimirPoly c = CasimirPoly::c();
  ctx.check("k_rec(2,n) and k_rec(3,n) equal the closed forms, n <= 12", [&](Check& chk) {
    for (int l : {2, 3}) {
      for (int n = 0; n <= 12; ++n) {
        ++chk.count;
        if (sl2::k_rec(l, n) != sl2::k_closed(l, n)) fail(chk, "l=" + std::to_string(l) + " n=" + std::to_string(n));
      }
    }
  });
  const int bip_top = std::min(9, ctx.config().max_order + 3);
  ctx.check("eval(K_{l,n}) equals the closed forms, l <= 3, l+n <= " + std::to_string(bip_top), [&](Check& chk) {
    for (int l = 1; l <= 3; ++l) {
      for (int n = 0; l + n <= bip_top; ++n) {
        ctx.tick();
        ++chk.count;
        if (table.k(l, n) != sl2::k_closed(l, n)) fail(chk, "l=" + std::to_string(l) + " n=" + std::to_string(n));
      }
    }
  });
  ctx.check("k_{1,1,n} = k_{2,n} - c(c-1)^n and the K_{2,n} identity, n <= 10", [&](Check& chk) {
    for (int n = 0; n <= 10; ++n) {
      ctx.tick();
      ++chk.count;
      if (table.k11(n) != sl2::k_triangle(n)) fail(chk, "triangle identity at n=" + std::to_string(n));
      if (table.k11(n) != sl2::k_closed(2, n) - c * CasimirPoly{-1, 1}.pow(n)) {
        fail(chk, "k_{1,1,n} at n=" + std::to_string(n));
      }
      if (n >= 1) {
        const CasimirPoly rhs = c.pow(n + 1) - table.k11(n - 1) + CasimirPoly{-2, 1} * sl2::k_closed(2, n - 1);
        if (sl2::k_closed(2, n) != rhs) fail(chk, "K_{2,n} identity at n=" + std::to_string(n));
      }
    }
  });
  constexpr int kOrder = 11;
  ctx.check("egf_K agrees with the exponential forms up to x^11", [&](Check& chk) {
    for (int l = 0; l <= 3; ++l) {
      ++chk.count;
      if (sl2::egf_K(l, kOrder) != sl2::egf_K_exponential(l, kOrder)) fail(chk, "l=" + std::to_string(l));
    }
  });
  const auto k = sl2::evaluated_invariant(ctx.ev());
  ctx.check("projection EGFs agree with the exponential forms up to x^11", [&](Check& chk) {
    for (int l = 1; l <= 3; ++l) {
      ctx.tick();
      ++chk.count;
      if (projection_egf(l, k, kOrder) != sl2::egf_P_exponential(l, kOrder)) {
        fail(chk, "l=" + std::to_string(l));
      }
    }
  });
  ctx.check("OGF coefficients match the projections, n <= 8", [&](Check& chk) {
    std::ostringstream detail;
    for (int l = 1; l <= 3; ++l) {
      ctx.tick();
      ++chk.count;
      const auto m = sl2::match_ogf(l, 8, k);
      detail << (l > 1 ? "; " : "") << "l=" << l << ": ";
      if (m.unshifted && m.shifted) {
        detail << "both conventions";
      } else if (m.unshifted) {
        detail << to_string(sl2::OgfConvention::unshifted);
      } else if (m.shifted) {
        detail << to_string(sl2::OgfConvention::shifted);
      } else {
        detail << "no convention matches";
        chk.passed = false;
      }
    }
    chk.detail = detail.str();
  });
}

void suite_hopf(Context& ctx) {
  const int top = std::min(ctx.config().max_order, 6);
  std::vector<Graph> graphs;
  for (int n = 0; n <= top; ++n) {
    for (auto& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
  }
  ctx.check("coassociativity, graphs on <= " + std::to_string(top) + " vertices", [&](Check& c) {
    for (const auto& g : graphs) {
      ctx.tick();
      ++c.count;
      if (!is_coassociative_on(g)) fail(c, "fails on " + to_edge_list(g));
    }
  });
  ctx.check("projections are primitive, graphs on 1.." + std::to_string(top) + " vertices", [&](Check& c) {
    for (const auto& g : graphs) {
      if (g.vertex_count() == 0) continue;
      ctx.tick();
      ++c.count;
      if (!is_primitive(project_primitive(g))) fail(c, "not primitive for " + to_edge_list(g));
    }
  });
  ctx.check("projection kills disjoint unions, <= " + std::to_string(top) + " vertices", [&](Check& c) {
    for (const auto& g : graphs) {
      if (g.vertex_count() == 0 || is_connected(g)) continue;
      ctx.tick();
      ++c.count;
      if (!project_primitive(g).is_zero()) fail(c, "nonzero for " + to_edge_list(g));
    }
  });
  const int bip_top = std::min(9, ctx.config().max_order + 3);
  ctx.check("collapsed bipartite sums equal the partition sum, l <= 3, l+n <= " + std::to_string(bip_top),
            [&](Check& c) {
              const auto k = sl2::evaluated_invariant(ctx.ev());
              for (int l = 1; l <= 3; ++l) {
                for (int n = 0; l + n <= bip_top; ++n) {
                  ctx.tick();
                  ++c.count;
                  const ChordDiagram d = bipartite_diagram(l, n);
                  const CasimirPoly generic = project_eval(d.order(), sl2::subdiagram_invariant(ctx.ev(), d));
                  if (generic != project_bipartite_eval(l, n, k)) {
                    fail(c, "l=" + std::to_string(l) + " n=" + std::to_string(n));
                  }
                }
              }
            });
  ctx.check("projection EGF coefficients equal the collapsed sums, n+l <= 11", [&](Check& c) {
    const auto k = sl2::evaluated_invariant(ctx.ev());
    for (int l = 1; l <= 3; ++l) {
      const SeriesX egf = projection_egf(l, k, 11);
      for (int n = 0; n + l <= 11; ++n) {
        ctx.tick();
        ++c.count;
        if (egf.coeff(n + l) * Rational(factorial(n)) != project_bipartite_eval(l, n, k)) {
          fail(c, "l=" + std::to_string(l) + " n=" + std::to_string(n));
        }
      }
    }
  });
}

void suite_lando(Context& ctx) {
  const auto k = sl2::evaluated_invariant(ctx.ev());
  ctx.check("w(pi(K_{1,n})) = (-1)^n c, n <= 10", [&](Check& c) {
    for (int n = 0; n <= 10; ++n) {
      ctx.tick();
      ++c.count;
      const CasimirPoly expected = CasimirPoly::c() * Rational(n % 2 ? -1 : 1);
      if (project_bipartite_eval(1, n, k) != expected) fail(c, "n=" + std::to_string(n));
    }
  });
  ctx.check("deg w(pi(K_{l,n})) within min(l,n), exact once n >= l; l <= 3, n <= 8", [&](Check& c) {
    for (int l = 1; l <= 3; ++l) {
      for (int n = 0; n <= 8; ++n) {
        ctx.tick();
        ++c.count;
        const auto r = sl2::lando_degree_check(l, n, k);
        if (!r.ok) {
          fail(c, "l=" + std::to_string(l) + " n=" + std::to_string(n) + " degree " + std::to_string(r.degree));
        }
      }
    }
  });
  ctx.check("circumference(K_{l,n}) = 2 min(l,n) and degree <= half of it, 2 <= l,n <= 4", [&](Check& c) {
    for (int l = 2; l <= 4; ++l) {
      for (int n = 2; n <= 4; ++n) {
        ctx.tick();
        ++c.count;
        const int circ = circumference(complete_bipartite(l, n));
        if (circ != 2 * std::min(l, n)) fail(c, "circumference of K_{" + std::to_string(l) + "," + std::to_string(n) + "}");
        const ChordDiagram d = bipartite_diagram(l, n);
        const CasimirPoly projected = project_eval(d.order(), sl2::subdiagram_invariant(ctx.ev(), d));
        if (2 * projected.degree() > circ) {
          fail(c, "degree above half the circumference for K_{" + std::to_string(l) + "," + std::to_string(n) + "}");
        }
      }
    }
  });
}

const std::map<std::string, void (*)(Context&)>& suites() {
  static const std::map<std::string, void (*)(Context&)> table{
      {"fourterm", suite_fourterm}, {"isograph", suite_isograph}, {"oracle", suite_oracle},
      {"recurrences", suite_recurrences}, {"hopf", suite_hopf}, {"lando", suite_lando}};
  return table;
}

}  // namespace

std::vector<Report> run(const std::string& suite, const Config& config, sl2::Evaluator& ev) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else if (suites().count(suite)) {
    todo = {suite};
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  Context ctx(config, ev);
  std::vector<Report> out;
  for (const auto& name : todo) {
    Report report;
    report.suite = name;
    if (ctx.expired()) {
      report.budget_exceeded = true;
      out.push_back(std::move(report));
      continue;
    }
    ctx.report = &report;
    ctx.progress("suite " + name);
    try {
      suites().at(name)(ctx);
    } catch (const BudgetExceeded&) {
      report.budget_exceeded = true;
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace chordweight::verify
