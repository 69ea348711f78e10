#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chordweight/sl2.hpp"

namespace chordweight::verify {

struct Config {
  int max_order = 6;
  int budget_seconds = 300;
  std::uint64_t seed = 0;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
};

struct Check {
  std::string name;
  bool passed = true;
  std::uint64_t count = 0;  // items examined
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool budget_exceeded = false;
  bool passed() const;
};

/// fourterm, isograph, oracle, recurrences, hopf, lando.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name. Once the budget is spent the current suite stops and is
/// marked budget_exceeded; later suites are skipped.
std::vector<Report> run(const std::string& suite, const Config& config, sl2::Evaluator& ev);

}  // namespace chordweight::verify
