#include "chordweight/cli.hpp"

#include <algorithm>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordweight/chord_diagram.hpp"
#include "chordweight/hopf.hpp"
#include "chordweight/sl2.hpp"
#include "chordweight/verify.hpp"

namespace chordweight::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  int max_order = 6;
  int budget_seconds = 300;
  std::string format = "human";
  std::uint64_t seed = 0;
  bool json() const { return format == "json"; }
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int cmd_eval(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  ChordDiagram d;
  try {
    d = parse_dow(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const CasimirPoly value = sl2::eval(d);
  if (cfg.json()) {
    out << json{{"diagram", serialize(d)}, {"value", to_json(value)}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kOk;
}

CasimirPoly projection_value(int l, int n) {
  if (l >= 1) return project_bipartite_eval(l, n, sl2::evaluated_invariant(sl2::shared_evaluator()));
  const ChordDiagram d = bipartite_diagram(l, n);
  return project_eval(d.order(), sl2::subdiagram_invariant(sl2::shared_evaluator(), d));
}

int cmd_table(const RunConfig& cfg, int l, int n_max, const std::string& kind, std::ostream& out) {
  if (l < 0 || l > 3) throw UsageError("table needs l in 0..3");
  if (n_max < 0) throw UsageError("table needs n_max >= 0");
  if (l + n_max > Graph::kMaxVertices) throw UsageError("table supports l + n_max <= 32");
  if (l == 0 && kind != "values" && n_max > kProjectMaxVertices) {
    throw UsageError("projections of K_{0,n} are tabulated for n <= " + std::to_string(kProjectMaxVertices));
  }
  const bool values = kind != "projections";
  const bool projections = kind != "values";
  json rows = json::array();
  for (int n = 0; n <= n_max; ++n) {
    json row{{"n", n}};
    std::string line = "n=" + std::to_string(n);
    if (values) {
      const CasimirPoly v = sl2::eval(bipartite_diagram(l, n));
      row["value"] = to_json(v);
      line += "  k=" + v.to_string();
    }
    if (projections) {
      const CasimirPoly p = projection_value(l, n);
      row["projection"] = to_json(p);
      line += "  pi=" + p.to_string();
    }
    if (!cfg.json()) out << line << '\n';
    rows.push_back(std::move(row));
  }
  if (cfg.json()) out << json{{"l", l}, {"kind", kind}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

int cmd_series(const RunConfig& cfg, int l, const std::string& which, int order, std::ostream& out) {
  if (order < 0) throw UsageError("series order must be non-negative");
  std::vector<CasimirPoly> coeffs;
  std::string variable = "x";
  std::string convention;
  if (which == "egf_K") {
    if (l < 0 || l > 3) throw UsageError("egf_K needs l in 0..3");
    if (order < l) throw UsageError("egf_K needs order >= l");
    coeffs = sl2::egf_K(l, order).coeffs();
    convention = "sum_n k_{l,n} x^(n+l)/n!";
  } else if (which == "egf_P") {
    if (l < 1 || l > 3) throw UsageError("egf_P needs l in 1..3");
    if (order < l) throw UsageError("egf_P needs order >= l");
    coeffs = projection_egf(l, sl2::evaluated_invariant(sl2::shared_evaluator()), order).coeffs();
    convention = "sum_n w(pi(K_{l,n})) x^(n+l)/n!";
  } else if (which == "ogf_P") {
    if (l < 1 || l > 3) throw UsageError("ogf_P needs l in 1..3");
    variable = "s";
    coeffs = sl2::ogf_P(l, order + 1);
    const auto m = sl2::match_ogf(l, order, sl2::evaluated_invariant(sl2::shared_evaluator()));
    if (m.unshifted && m.shifted) {
      convention = "matches both " + to_string(sl2::OgfConvention::unshifted) + " and " +
                   to_string(sl2::OgfConvention::shifted);
    } else if (m.unshifted) {
      convention = "matches " + to_string(sl2::OgfConvention::unshifted);
    } else if (m.shifted) {
      convention = "matches " + to_string(sl2::OgfConvention::shifted);
    } else {
      convention = "matches neither exponent convention";
    }
  } else {
    throw UsageError("series kind must be egf_K, egf_P or ogf_P");
  }
  if (cfg.json()) {
    json list = json::array();
    for (const auto& p : coeffs) list.push_back(to_json(p));
    out << json{{"l", l}, {"kind", which}, {"variable", variable}, {"convention", convention}, {"coeffs", list}}
               .dump()
        << '\n';
  } else {
    out << "# " << which << " l=" << l << ": " << convention << '\n';
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << variable << '^' << k << ": " << coeffs[k] << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err) {
  verify::Config vc;
  vc.max_order = cfg.max_order;
  vc.budget_seconds = cfg.budget_seconds;
  vc.seed = cfg.seed;
  vc.progress = &err;
  std::vector<verify::Report> reports;
  try {
    reports = verify::run(suite, vc, sl2::shared_evaluator());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool budget = false;
  bool failed = false;
  json list = json::array();
  for (const auto& r : reports) {
    budget = budget || r.budget_exceeded;
    failed = failed || !r.passed();
    json checks = json::array();
    if (!cfg.json()) out << "suite " << r.suite << (r.budget_exceeded ? " (budget exceeded)" : "") << '\n';
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"count", c.count}, {"detail", c.detail}});
      if (!cfg.json()) {
        out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.count << "]";
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
    }
    list.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"budget_exceeded", r.budget_exceeded},
                    {"checks", checks}});
  }
  const auto stats = sl2::shared_evaluator().stats();
  if (cfg.json()) {
    out << json{{"suites", list}, {"fallbacks", stats.fallbacks}}.dump() << '\n';
  } else {
    out << "evaluator fallbacks: " << stats.fallbacks << '\n';
  }
  if (budget) return kBudget;
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sl2 weight system on chord diagrams", "chordweight"};
  RunConfig cfg;
  app.add_option("--max-order", cfg.max_order, "Largest diagram order used by verification suites")
      ->check(CLI::Range(0, kEnumerateMaxOrder));
  app.add_option("--budget", cfg.budget_seconds, "Time budget for verify, in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled suites");
  app.require_subcommand(1);

  std::string dow;
  auto* eval = app.add_subcommand("eval", "Evaluate the weight system on a double-occurrence word");
  eval->add_option("dow", dow, "Diagram, e.g. \"1 2 1 2\"")->required();

  int table_l = 0, table_n = 0;
  std::string table_kind = "both";
  auto* table = app.add_subcommand("table", "Values k_{l,n} and projections w(pi(K_{l,n}))");
  table->add_option("l", table_l)->required();
  table->add_option("n_max", table_n)->required();
  table->add_option("kind", table_kind)->check(CLI::IsMember({"values", "projections", "both"}));

  int series_l = 0, series_order = 0;
  std::string series_kind;
  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  series->add_option("l", series_l)->required();
  series->add_option("which", series_kind)->required()->check(CLI::IsMember({"egf_K", "egf_P", "ogf_P"}));
  series->add_option("order", series_order)->required();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", suite)->check(CLI::IsMember(suites));

  // CLI11 positional options accept arbitrary tokens such as "-c"; keep the
  // fallthrough so global flags may follow the subcommand.
  for (auto* sub : {eval, table, series, verify_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, dow, out);
    if (table->parsed()) return cmd_table(cfg, table_l, table_n, table_kind, out);
    if (series->parsed()) return cmd_series(cfg, series_l, series_kind, series_order, out);
    return cmd_verify(cfg, suite, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace chordweight::cli
