#include <cstdlib>

#include "doctest.h"
#include "qhc/domain.hpp"
#include "qhc/suite.hpp"

using namespace qhc;
using nlohmann::json;

namespace {

json small_table() {
  auto row = [](std::string id, std::string ring, std::string q, std::string expected) {
    return json{{"id", id},   {"suite", "schur"}, {"family", "schur"}, {"n", 2},
                {"d", 2},     {"ring", ring},     {"u", "1"},          {"quantity", q},
                {"expected", expected},           {"citation", "k"}};
  };
  return {{"version", 1},
          {"citations", {{"k", "a statement"}}},
          {"rows",
           {row("a", "f2", "domdim-algebra", "2"), row("b", "f3", "domdim-algebra", "infinite"),
            row("c", "f2", "hn-standard", "-1"), row("d", "f2", "hn-proj", "5")}}};
}

}  // namespace

TEST_CASE("fixture table validation") {
  auto t = load_fixture_table(small_table());
  CHECK(t.rows.size() == 4);
  CHECK(t.cap == 8);
  SUBCASE("unresolved citation") {
    auto j = small_table();
    j["rows"][0]["citation"] = "missing";
    CHECK_THROWS_AS(load_fixture_table(j), DomainError);
  }
  SUBCASE("unknown quantity") {
    auto j = small_table();
    j["rows"][1]["quantity"] = "gldim";
    CHECK_THROWS_AS(load_fixture_table(j), DomainError);
  }
  SUBCASE("duplicate id") {
    auto j = small_table();
    j["rows"][1]["id"] = "a";
    CHECK_THROWS_AS(load_fixture_table(j), DomainError);
  }
  SUBCASE("bad expected value") {
    auto j = small_table();
    j["rows"][1]["expected"] = "lots";
    CHECK_THROWS_AS(load_fixture_table(j), DomainError);
  }
  SUBCASE("version") {
    auto j = small_table();
    j["version"] = 2;
    CHECK_THROWS_AS(load_fixture_table(j), DomainError);
  }
}

TEST_CASE("the shipped fixture table loads") {
  auto t = load_fixture_table(default_fixture_path());
  CHECK(t.version == 1);
  std::size_t opt_in = 0;
  for (const auto& r : t.rows) {
    CHECK(t.citations.count(r.citation) == 1);
    opt_in += r.opt_in;
    if (r.opt_in) CHECK(r.d == 4);
  }
  CHECK(opt_in == 2);
}

TEST_CASE("suite results are order-stable and report failures") {
  auto t = load_fixture_table(small_table());
  SuiteOptions one, many;
  one.workers = 1;
  many.workers = 4;
  auto a = run_suite(t, one), b = run_suite(t, many);
  REQUIRE(a.size() == 4);
  CHECK(results_to_json(a, t).dump() == results_to_json(b, t).dump());
  CHECK(a[0].status == RowStatus::pass);
  CHECK(a[1].status == RowStatus::pass);
  CHECK(a[2].status == RowStatus::pass);
  // row d carries a wrong expectation on purpose
  CHECK(a[3].status == RowStatus::fail);
  CHECK(a[3].actual == "0");
  CHECK_FALSE(suite_passed(a));
  CHECK(results_to_json(a, t)["summary"]["failed"] == 1);
}

TEST_CASE("opt-in rows are skipped unless requested") {
  auto j = small_table();
  j["rows"] = json::array({json{{"id", "g"}, {"suite", "schur"}, {"family", "schur"}, {"n", 3}, {"d", 3},
                                {"ring", "f3"}, {"u", "1"}, {"quantity", "domdim-gendo"}, {"expected", "4"},
                                {"citation", "k"}, {"opt_in", true}}});
  auto t = load_fixture_table(j);
  auto skipped = run_suite(t, SuiteOptions{});
  CHECK(skipped[0].status == RowStatus::skipped);
  CHECK(suite_passed(skipped));
  SuiteOptions with;
  with.include_opt_in = true;
  CHECK(run_suite(t, with)[0].status == RowStatus::pass);
}

TEST_CASE("construction errors become row errors") {
  auto j = small_table();
  j["rows"][0]["n"] = 1;
  auto t = load_fixture_table(j);
  auto r = run_suite(t, SuiteOptions{});
  CHECK(r[0].status == RowStatus::error);
  CHECK_FALSE(r[0].detail.empty());
  CHECK(r[1].status == RowStatus::pass);
  CHECK_THROWS_AS(run_suite(t, SuiteOptions{"bogus"}), DomainError);
}

TEST_CASE("worker count from the environment") {
  setenv("QHC_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("QHC_WORKERS", "zero", 1);
  CHECK(worker_count() >= 1);
  unsetenv("QHC_WORKERS");
}

TEST_CASE("direct evaluation") {
  CHECK(evaluate_quantity("qschur", 2, 2, "f5", "2", "domdim-algebra", 8) == "2");
  CHECK(evaluate_quantity("schur", 2, 2, "f2", "1", "split-qh", 8) == "pass");
  CHECK_THROWS_AS(evaluate_quantity("schur", 2, 2, "f2", "2", "hn-proj", 8), DomainError);
  CHECK_THROWS_AS(evaluate_quantity("schur", 2, 2, "f2", "1", "volume", 8), DomainError);
}
