#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace qhc {

// One expected value from the versioned fixture file.
struct FixtureRow {
  std::string id, suite, family;
  int n = 0, d = 0;
  std::string ring, u, quantity, expected, citation;
  bool opt_in = false;
};

struct FixtureTable {
  int version = 0;
  long cap = 8;
  std::map<std::string, std::string> citations;
  std::vector<FixtureRow> rows;
};

// QHC_FIXTURE_DIR from the environment, else the build-time default.
std::string default_fixture_path();
// Rejects unknown suites, quantities, families and unresolvable citations.
FixtureTable load_fixture_table(const nlohmann::json& j);
FixtureTable load_fixture_table(const std::string& path);

enum class RowStatus { pass, fail, skipped, error };
std::string to_string(RowStatus s);

struct RowResult {
  FixtureRow row;
  RowStatus status = RowStatus::skipped;
  std::string actual;  // empty when skipped
  std::string detail;  // error message, if any
  double seconds = 0;
};

struct SuiteOptions {
  std::string suite = "all";
  long cap = 8;
  bool include_opt_in = false;
  unsigned workers = 0;  // 0: QHC_WORKERS or the hardware count
};

// QHC_WORKERS if set and positive, else hardware concurrency (at least 1).
unsigned worker_count();

// Rows of one (family, n, d, ring, u) instance share the constructed algebra.
// Instances run concurrently; results keep the table order.
std::vector<RowResult> run_suite(const FixtureTable& table, const SuiteOptions& opts);

// Computes one quantity directly; used by the suite and the CLI.
std::string evaluate_quantity(const std::string& family, int n, int d, const std::string& ring,
                              const std::string& u, const std::string& quantity, long cap);

bool suite_passed(const std::vector<RowResult>& results);
nlohmann::json results_to_json(const std::vector<RowResult>& results, const FixtureTable& table);
std::string results_table(const std::vector<RowResult>& results);

}  // namespace qhc
