#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "chordweight/cli.hpp"

using chordweight::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto r = call({"eval", "1 2 1 2"});
  CHECK(r.code == 0);
  CHECK(r.out == "c^2 - c\n");
  r = call({"--format", "json", "eval", "2 1 2 1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["diagram"] == "1 2 1 2");
  CHECK(j["value"]["coeffs"].size() == 3);
  CHECK(call({"eval", "1 2 1"}).code == 2);
  CHECK(call({"eval"}).code == 2);
}

TEST_CASE("table") {
  auto r = call({"table", "1", "3", "projections"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=0  pi=c\nn=1  pi=-c\nn=2  pi=c\nn=3  pi=-c\n");
  r = call({"--format", "json", "table", "2", "2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["kind"] == "both");
  CHECK(j["rows"][2].contains("projection"));
  r = call({"table", "0", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=2  k=c^2  pi=0") != std::string::npos);
  CHECK(call({"table", "5", "2"}).code == 2);
  CHECK(call({"table", "1", "2", "bogus"}).code == 2);
}

TEST_CASE("series") {
  auto r = call({"series", "2", "ogf_P", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s^1: c\n") != std::string::npos);
  CHECK(r.out.find("s^3: -10c^2 + 13c\n") != std::string::npos);
  CHECK(r.out.rfind("# ogf_P l=2: matches", 0) == 0);
  r = call({"--format", "json", "series", "1", "egf_K", "4"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"].size() == 5);
  CHECK(j["variable"] == "x");
  CHECK(call({"series", "0", "egf_P", "3"}).code == 2);
  CHECK(call({"series", "1", "egf_Q", "3"}).code == 2);
}

TEST_CASE("verify") {
  auto r = call({"--max-order", "4", "verify", "fourterm"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite fourterm\n", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = call({"--format", "json", "--max-order", "3", "verify", "lando"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["fallbacks"] == 0);
  CHECK(call({"--budget", "0", "verify", "oracle"}).code == 3);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"--max-order", "9", "verify"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
