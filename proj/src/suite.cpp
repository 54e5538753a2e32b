#include "qhc/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "qhc/cover.hpp"
#include "qhc/io.hpp"
#include "qhc/qh.hpp"
#include "qhc/schur.hpp"

namespace qhc {

using nlohmann::json;

namespace {

const std::set<std::string> kSuites{"schur", "qschur", "integral"};
const std::set<std::string> kFamilies{"schur", "qschur"};
const std::set<std::string> kQuantities{"domdim-algebra", "inf-standards", "hn-proj",
                                        "hn-standard",    "split-qh",      "domdim-gendo"};

template <class D>
struct Instance {
  SchurAlgebra<D> s;
  HeredityChain<D> chain;
  long cap;
  std::optional<CoverAnalysis<D>> an;

  Instance(int n, int d, const D& dom, const typename D::Elem& u, long c)
      : s(schur_algebra(n, d, dom, u)), chain(schur_heredity_chain(s)), cap(c) {}

  CoverAnalysis<D>& analysis() {
    if (!an) an.emplace(Cover<D>::from_idempotent(s.algebra, s.e), cap);
    return *an;
  }

  std::string eval(const std::string& q) {
    if (q == "domdim-algebra") return analysis().domdim_algebra().value.str();
    if (q == "inf-standards") return analysis().inf_domdim_standards(chain).value.str();
    if (q == "hn-proj") return analysis().hn_proj().value.str();
    if (q == "hn-standard") return analysis().hn_standard(chain).value.str();
    if (q == "split-qh") return verify_split_qh(chain).ok() ? "pass" : "fail";
    throw DomainError("unknown quantity " + q);
  }
};

void check_family(const std::string& family, int n, int d, const std::string& u) {
  if (!kFamilies.count(family)) throw DomainError("unknown family " + family);
  if (d < 1 || n < d) throw DomainError("Schur algebra constructions need n >= d >= 1");
  if (family == "schur" && u != "1") throw DomainError("the classical family has u = 1");
}

// All rows belong to one instance; every row gets a status.
void evaluate_group(const std::vector<const FixtureRow*>& rows, long cap, std::vector<RowResult>& out) {
  const auto& r0 = *rows.front();
  using clock = std::chrono::steady_clock;
  auto finish = [&](std::size_t i, const std::function<std::string()>& f) {
    auto t0 = clock::now();
    try {
      out[i].actual = f();
      out[i].status = out[i].actual == out[i].row.expected ? RowStatus::pass : RowStatus::fail;
    } catch (const std::exception& e) {
      out[i].status = RowStatus::error;
      out[i].detail = e.what();
    }
    out[i].seconds = std::chrono::duration<double>(clock::now() - t0).count();
  };
  std::vector<std::size_t> generic;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i]->quantity == "domdim-gendo") {
      finish(i, [&] {
        auto dom = parse_ring_spec(r0.ring);
        if (!std::holds_alternative<PrimeField>(dom)) throw DomainError("domdim-gendo needs a prime field");
        return gendo_domdim(std::get<PrimeField>(dom).p, r0.d, cap).value.str();
      });
    } else {
      generic.push_back(i);
    }
  }
  if (generic.empty()) return;
  std::visit(
      [&](const auto& dom) {
        using D = std::decay_t<decltype(dom)>;
        std::optional<Instance<D>> inst;
        std::string build_error;
        auto t0 = clock::now();
        try {
          check_family(r0.family, r0.n, r0.d, r0.u);
          inst.emplace(r0.n, r0.d, dom, dom.parse(r0.u), cap);
        } catch (const std::exception& e) {
          build_error = e.what();
        }
        double build = std::chrono::duration<double>(clock::now() - t0).count();
        for (auto i : generic) {
          if (!inst) {
            out[i].status = RowStatus::error;
            out[i].detail = build_error;
            continue;
          }
          finish(i, [&] { return inst->eval(rows[i]->quantity); });
        }
        // construction time is charged to the first row
        out[generic.front()].seconds += build;
      },
      parse_ring_spec(r0.ring));
}

std::string instance_key(const FixtureRow& r) {
  return r.family + "|" + std::to_string(r.n) + "|" + std::to_string(r.d) + "|" + r.ring + "|" + r.u;
}

}  // namespace

std::string default_fixture_path() {
  const char* env = std::getenv("QHC_FIXTURE_DIR");
  std::string dir = env && *env ? env : QHC_FIXTURE_DIR;
  return dir + "/expectations.json";
}

FixtureTable load_fixture_table(const json& j) {
  FixtureTable t;
  try {
    t.version = j.at("version").get<int>();
    if (t.version != 1) throw DomainError("unsupported fixture version " + std::to_string(t.version));
    t.cap = j.value("cap", 8L);
    t.citations = j.at("citations").get<std::map<std::string, std::string>>();
    std::set<std::string> ids;
    for (const auto& r : j.at("rows")) {
      FixtureRow row;
      row.id = r.at("id").get<std::string>();
      row.suite = r.at("suite").get<std::string>();
      row.family = r.at("family").get<std::string>();
      row.n = r.at("n").get<int>();
      row.d = r.at("d").get<int>();
      row.ring = r.at("ring").get<std::string>();
      row.u = r.at("u").get<std::string>();
      row.quantity = r.at("quantity").get<std::string>();
      row.expected = r.at("expected").get<std::string>();
      row.citation = r.at("citation").get<std::string>();
      row.opt_in = r.value("opt_in", false);
      if (!ids.insert(row.id).second) throw DomainError("duplicate row id " + row.id);
      if (!kSuites.count(row.suite)) throw DomainError(row.id + ": unknown suite " + row.suite);
      if (!kFamilies.count(row.family)) throw DomainError(row.id + ": unknown family " + row.family);
      if (!kQuantities.count(row.quantity)) throw DomainError(row.id + ": unknown quantity " + row.quantity);
      if (!t.citations.count(row.citation)) throw DomainError(row.id + ": unresolved citation " + row.citation);
      if (row.quantity != "split-qh") DimValue::parse(row.expected);
      t.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed fixture table: ") + e.what());
  }
  return t;
}

FixtureTable load_fixture_table(const std::string& path) { return load_fixture_table(io::read_json_file(path)); }

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "FAIL";
    case RowStatus::skipped: return "skipped";
    case RowStatus::error: return "ERROR";
  }
  return "?";
}

unsigned worker_count() {
  if (const char* env = std::getenv("QHC_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RowResult> run_suite(const FixtureTable& table, const SuiteOptions& opts) {
  if (opts.suite != "all" && !kSuites.count(opts.suite)) throw DomainError("unknown suite " + opts.suite);
  std::vector<RowResult> results;
  std::vector<std::string> keys;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (const auto& row : table.rows) {
    if (opts.suite != "all" && row.suite != opts.suite) continue;
    RowResult r;
    r.row = row;
    if (!row.opt_in || opts.include_opt_in) {
      auto k = instance_key(row);
      if (!groups.count(k)) keys.push_back(k);
      groups[k].push_back(results.size());
    }
    results.push_back(std::move(r));
  }

  unsigned workers = opts.workers ? opts.workers : worker_count();
  workers = std::max(1u, std::min<unsigned>(workers, keys.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t g; (g = next.fetch_add(1)) < keys.size();) {
      const auto& idx = groups.at(keys[g]);
      std::vector<const FixtureRow*> rows;
      for (auto i : idx) rows.push_back(&results[i].row);
      std::vector<RowResult> local(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) local[i].row = results[idx[i]].row;
      evaluate_group(rows, opts.cap, local);
      // each group owns disjoint slots
      for (std::size_t i = 0; i < idx.size(); ++i) results[idx[i]] = std::move(local[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

std::string evaluate_quantity(const std::string& family, int n, int d, const std::string& ring,
                              const std::string& u, const std::string& quantity, long cap) {
  if (!kQuantities.count(quantity)) throw DomainError("unknown quantity " + quantity);
  FixtureRow row{"", "", family, n, d, ring, u, quantity, "", "", false};
  std::vector<RowResult> out(1);
  out[0].row = row;
  evaluate_group({&row}, cap, out);
  if (out[0].status == RowStatus::error) throw DomainError(out[0].detail);
  return out[0].actual;
}

bool suite_passed(const std::vector<RowResult>& results) {
  for (const auto& r : results)
    if (r.status == RowStatus::fail || r.status == RowStatus::error) return false;
  return true;
}

json results_to_json(const std::vector<RowResult>& results, const FixtureTable& table) {
  json rows = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    json j{{"id", r.row.id},           {"suite", r.row.suite}, {"quantity", r.row.quantity},
           {"expected", r.row.expected}, {"status", to_string(r.status)},
           {"citation", r.row.citation}};
    j["actual"] = r.status == RowStatus::skipped ? json(nullptr) : json(r.actual);
    if (!r.detail.empty()) j["detail"] = r.detail;
    rows.push_back(j);
    if (r.status == RowStatus::pass) ++passed;
    else if (r.status == RowStatus::skipped) ++skipped;
    else ++failed;
  }
  return {{"version", table.version},
          {"rows", rows},
          {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
          {"ok", suite_passed(results)}};
}

std::string results_table(const std::vector<RowResult>& results) {
  std::size_t w = 4;
  for (const auto& r : results) w = std::max(w, r.row.id.size());
  std::ostringstream os;
  os << std::left << std::setw(w + 2) << "row" << std::setw(12) << "expected" << std::setw(12) << "actual"
     << std::setw(9) << "status" << "seconds\n";
  for (const auto& r : results) {
    os << std::setw(w + 2) << r.row.id << std::setw(12) << r.row.expected << std::setw(12)
       << (r.status == RowStatus::skipped ? "-" : r.actual) << std::setw(9) << to_string(r.status);
    if (r.status != RowStatus::skipped) os << std::fixed << std::setprecision(2) << r.seconds;
    os << "\n";
    if (!r.detail.empty()) os << "  " << r.detail << "\n";
  }
  return os.str();
}

}  // namespace qhc
