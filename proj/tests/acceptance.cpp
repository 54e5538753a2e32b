// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "qhc/cover.hpp"
#include "qhc/fixtures.hpp"
#include "qhc/primitive.hpp"
#include "qhc/qh.hpp"
#include "qhc/schur.hpp"
#include "qhc/suite.hpp"

using namespace qhc;

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

DimValue fin(long v) { return DimValue::finite(v); }

// Collects failures for one criterion.
struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> facts;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { facts.push_back(s); }
};

template <class D>
struct Fixture {
  std::string name;
  SchurAlgebra<D> s;
  HeredityChain<D> chain;
  std::unique_ptr<CoverAnalysis<D>> analysis;
  double setup_seconds = 0;
  std::map<std::string, DimensionReport> reports;
  std::map<std::string, double> seconds;

  Fixture(std::string label, int n, int d, const D& dom, const typename D::Elem& u)
      : name(std::move(label)), s(schur_algebra(n, d, dom, u)), chain(schur_heredity_chain(s)) {}

  static std::unique_ptr<Fixture> make(std::string label, int n, int d, const D& dom, const typename D::Elem& u) {
    auto t0 = clock_type::now();
    auto f = std::make_unique<Fixture>(std::move(label), n, d, dom, u);
    f->analysis = std::make_unique<CoverAnalysis<D>>(Cover<D>::from_idempotent(f->s.algebra, f->s.e), 8);
    f->setup_seconds = since(t0);
    return f;
  }

  const DimensionReport& get(const std::string& q) {
    auto it = reports.find(q);
    if (it != reports.end()) return it->second;
    auto t0 = clock_type::now();
    DimensionReport r;
    if (q == "domdim") r = analysis->domdim_algebra();
    else if (q == "inf") r = analysis->inf_domdim_standards(chain);
    else if (q == "hn-proj") r = analysis->hn_proj();
    else r = analysis->hn_standard(chain);
    seconds[q] = since(t0);
    return reports.emplace(q, std::move(r)).first->second;
  }
  DimValue value(const std::string& q) { return get(q).value; }
  double cost(const std::string& q) {
    get(q);
    return setup_seconds + seconds[q];
  }
};

using FieldFx = Fixture<PrimeField>;
using LocalFx = Fixture<LocalIntegers>;

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << "s";
  return os.str();
}

bool halves(const DimValue& dd, const DimValue& inf) {
  if (dd.is_finite() && inf.is_finite()) return dd.value == 2 * inf.value;
  return dd == inf;
}

bool same_ext(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].inv == b[i].inv)) return false;
  return true;
}

}  // namespace

int main() {
  PrimeField f2(2), f3(3), f5(5);
  LocalIntegers z2(2), z3(3);
  std::vector<Criterion> results;
  auto t_all = clock_type::now();

  std::map<std::string, std::unique_ptr<FieldFx>> F;
  std::map<std::string, std::unique_ptr<LocalFx>> Z;
  F["F2 d2"] = FieldFx::make("S_F2(2,2)", 2, 2, f2, 1u);
  F["F2 d3"] = FieldFx::make("S_F2(3,3)", 3, 3, f2, 1u);
  F["F3 d3"] = FieldFx::make("S_F3(3,3)", 3, 3, f3, 1u);
  F["F3 d2"] = FieldFx::make("S_F3(2,2)", 2, 2, f3, 1u);
  F["F5 u2"] = FieldFx::make("S_F5,q=-1(2,2)", 2, 2, f5, 2u);
  F["F5 u1"] = FieldFx::make("S_F5,q=1(2,2)", 2, 2, f5, 1u);
  Z["Z2 d2"] = LocalFx::make("S_Z(2)(2,2)", 2, 2, z2, z2.one());
  Z["Z3 d3"] = LocalFx::make("S_Z(3)(3,3)", 3, 3, z3, z3.one());

  auto check_value = [](Criterion& c, const std::string& name, const std::string& q, const DimValue& got,
                        const DimValue& want) {
    c.expect(got == want, name + " " + q + " = " + got.str() + ", expected " + want.str());
    c.note(name + " " + q + "=" + got.str());
  };

  {
    Criterion c{1, "classical dominant dimension", {}, {}};
    std::vector<std::pair<std::string, DimValue>> fw{
        {"F2 d2", fin(2)}, {"F2 d3", fin(2)}, {"F3 d3", fin(4)}, {"F3 d2", DimValue::infinite()}};
    for (auto& [k, v] : fw) {
      check_value(c, F[k]->name, "domdim", F[k]->value("domdim"), v);
      c.expect(F[k]->cost("domdim") < 30, F[k]->name + " took " + fmt(F[k]->cost("domdim")));
    }
    c.expect(F["F3 d2"]->get("domdim").semisimple_certified, "S_F3(2,2) infinite without a semisimplicity certificate");
    std::vector<std::pair<std::string, DimValue>> zw{{"Z2 d2", fin(2)}, {"Z3 d3", fin(4)}};
    for (auto& [k, v] : zw) {
      check_value(c, Z[k]->name, "domdim", Z[k]->value("domdim"), v);
      c.expect(Z[k]->cost("domdim") < 30, Z[k]->name + " took " + fmt(Z[k]->cost("domdim")));
    }
    c.note("slowest " + fmt(Z["Z3 d3"]->cost("domdim")));
    results.push_back(c);
  }

  {
    Criterion c{2, "tilting surrogate and halving", {}, {}};
    check_value(c, F["F2 d2"]->name, "inf", F["F2 d2"]->value("inf"), fin(1));
    check_value(c, F["F3 d3"]->name, "inf", F["F3 d3"]->value("inf"), fin(2));
    std::size_t n = 0;
    for (auto& [k, fx] : F) {
      c.expect(halves(fx->value("domdim"), fx->value("inf")), fx->name + ": domdim is not twice the infimum");
      ++n;
    }
    for (auto& [k, fx] : Z) {
      c.expect(halves(fx->value("domdim"), fx->value("inf")), fx->name + ": domdim is not twice the infimum");
      ++n;
    }
    c.note("halving on " + std::to_string(n) + " fixtures");
    results.push_back(c);
  }

  {
    Criterion c{3, "Hemmer-Nakano dimensions over fields", {}, {}};
    check_value(c, F["F2 d2"]->name, "hn-proj", F["F2 d2"]->value("hn-proj"), fin(0));
    check_value(c, F["F2 d2"]->name, "hn-standard", F["F2 d2"]->value("hn-standard"), fin(-1));
    check_value(c, F["F3 d3"]->name, "hn-proj", F["F3 d3"]->value("hn-proj"), fin(2));
    check_value(c, F["F3 d3"]->name, "hn-standard", F["F3 d3"]->value("hn-standard"), fin(0));
    for (const char* k : {"F2 d2", "F3 d3"})
      for (const char* q : {"hn-proj", "hn-standard"})
        c.expect(F[k]->cost(q) < 60, F[k]->name + " " + q + " took " + fmt(F[k]->cost(q)));
    results.push_back(c);
  }

  {
    Criterion c{4, "integral improvement and truncation consistency", {}, {}};
    check_value(c, Z["Z2 d2"]->name, "hn-proj", Z["Z2 d2"]->value("hn-proj"), fin(1));
    check_value(c, Z["Z2 d2"]->name, "hn-standard", Z["Z2 d2"]->value("hn-standard"), fin(0));
    check_value(c, Z["Z3 d3"]->name, "hn-proj", Z["Z3 d3"]->value("hn-proj"), fin(3));
    check_value(c, Z["Z3 d3"]->name, "hn-standard", Z["Z3 d3"]->value("hn-standard"), fin(1));
    for (auto [zk, fk] : {std::pair{"Z2 d2", "F2 d2"}, std::pair{"Z3 d3", "F3 d3"}})
      for (const char* q : {"hn-proj", "hn-standard"}) {
        auto zv = Z[zk]->value(q), fv = F[fk]->value(q);
        bool ok = zv.is_finite() && fv.is_finite() && fv.value >= zv.value - 1;
        c.expect(ok, std::string(q) + ": " + fv.str() + " over the residue field vs " + zv.str());
      }
    c.note("F_p value >= Z_(p) value - 1 for p = 2, 3");
    results.push_back(c);
  }

  {
    Criterion c{5, "q-Schur algebras", {}, {}};
    check_value(c, F["F5 u2"]->name, "domdim", F["F5 u2"]->value("domdim"), fin(2));
    check_value(c, F["F5 u1"]->name, "domdim", F["F5 u1"]->value("domdim"), DimValue::infinite());
    c.expect(F["F5 u1"]->get("domdim").semisimple_certified, "u = 1 infinite without a certificate");
    for (auto [n, d] : {std::pair{2, 2}, std::pair{3, 3}}) {
      auto classical = schur_algebra(n, d, f5, 1u);
      auto quantum = schur_algebra(n, d, f5, 1u, SchurMethod::commutant);
      c.expect(*classical.algebra == *quantum.algebra,
               "u = 1 structure constants differ at d = " + std::to_string(d));
    }
    auto zc = schur_algebra(3, 3, z3, z3.one());
    auto zq = schur_algebra(3, 3, z3, z3.one(), SchurMethod::commutant);
    c.expect(*zc.algebra == *zq.algebra, "u = 1 structure constants differ over Z(3)");
    c.note("u = 1 tables identical (F5 d=2,3; Z(3) d=3)");
    results.push_back(c);
  }

  {
    Criterion c{6, "split quasi-hereditary axioms", {}, {}};
    auto report = [&](const std::string& name, const QhVerdict& v) {
      for (std::size_t k = 0; k < 5; ++k)
        c.expect(v.axioms[k].pass, name + " axiom " + std::to_string(k + 1) + ": " + v.axioms[k].detail);
    };
    report(F["F2 d2"]->name, verify_split_qh(F["F2 d2"]->chain));
    report(F["F3 d3"]->name, verify_split_qh(F["F3 d3"]->chain));
    report(Z["Z2 d2"]->name, verify_split_qh(Z["Z2 d2"]->chain));
    auto q = quiver_algebra(f2);
    report("quiver", verify_split_qh(quiver_chain(q)));
    auto neg = verify_split_qh(unit_chain(symmetric_group_algebra(2, f2)));
    c.expect(!neg.axioms[2].pass, "F2 S2 with the unit chain passes axiom (iii)");
    c.note("4 chains pass; F2 S2 unit chain fails (iii)");
    results.push_back(c);
  }

  {
    Criterion c{7, "oracle equivalence and resolution invariance", {}, {}};
    std::size_t modules = 0;
    for (auto& [k, fx] : F) {
      auto prim = primitive_idempotents(fx->s.algebra, &fx->s.tensor_module);
      const auto& m = fx->get("domdim");
      auto brute = domdim_brute(prim, Representation<PrimeField>::regular(fx->s.algebra), 8, "A");
      c.expect(brute.value.agrees(m.value, 8), fx->name + " A: oracle " + brute.value.str() + " vs " + m.value.str());
      c.expect(m.diagnostic && m.diagnostic->agrees(m.value, 8), fx->name + " A: Tor route disagrees");
      ++modules;
      for (const auto& st : standard_modules(fx->chain)) {
        auto r = fx->analysis->domdim_module(st.delta, st.weight);
        auto b = domdim_brute(prim, st.delta, 8, st.weight);
        c.expect(b.value.agrees(r.value, 8), fx->name + " " + st.weight + ": oracle " + b.value.str() + " vs " +
                                                  r.value.str());
        c.expect(r.routes_agree && *r.routes_agree, fx->name + " " + st.weight + ": Ext and Tor routes differ");
        ++modules;
      }
    }
    std::size_t groups = 0;
    for (const char* k : {"F2 d2", "F3 d3"}) {
      const auto& cover = F[k]->analysis->cover();
      auto base = ext(cover.fa(), cover.fa(), 6, 0);
      for (std::uint64_t seed : {1ull, 17ull, 4242ull})
        c.expect(same_ext(base, ext(cover.fa(), cover.fa(), 6, seed)),
                 F[k]->name + ": Ext(FA, FA) depends on seed " + std::to_string(seed));
      groups += base.size();
    }
    {
      auto stds = standard_modules(F["F2 d2"]->chain);
      for (const auto& x : stds)
        for (const auto& y : stds) {
          auto g0 = ext(x.delta, y.delta, 4, 0);
          c.expect(same_ext(g0, ext(x.delta, y.delta, 4, 99)),
                   "S_F2(2,2): Ext(" + x.weight + ", " + y.weight + ") depends on the seed");
          groups += g0.size();
        }
    }
    // Over S_F3(3,3) dense free resolutions are too large; minimal resolutions
    // built from differently seeded primitive idempotents are compared instead.
    {
      auto& fx = F["F3 d3"];
      auto p1 = primitive_idempotents(fx->s.algebra, &fx->s.tensor_module, 1);
      auto p2 = primitive_idempotents(fx->s.algebra, &fx->s.tensor_module, 77);
      auto stds = standard_modules(fx->chain);
      for (const auto& x : stds) {
        auto r1 = minimal_resolution(p1, x.delta, 5), r2 = minimal_resolution(p2, x.delta, 5);
        for (const auto& y : stds) {
          auto d1 = ext_dims(p1, r1, y.delta, 4);
          c.expect(d1 == ext_dims(p2, r2, y.delta, 4),
                   fx->name + ": Ext(" + x.weight + ", " + y.weight + ") depends on the idempotent choice");
          groups += d1.size();
        }
      }
    }
    {
      const auto& cover = Z["Z2 d2"]->analysis->cover();
      auto base = ext(cover.fa(), cover.fa(), 4, 0);
      c.expect(same_ext(base, ext(cover.fa(), cover.fa(), 4, 5)), "Z(2): Ext(FA, FA) depends on the seed");
      groups += base.size();
    }
    c.note(std::to_string(modules) + " modules, 3 methods; " + std::to_string(groups) + " Ext groups seed-invariant");
    results.push_back(c);
  }

  {
    Criterion c{8, "rigidity and the characteristic-2 obstruction", {}, {}};
    for (auto& [k, fx] : F) {
      auto v = rigidity_check(fx->analysis->cover(), fx->chain, fx->value("hn-standard"));
      c.expect(v.consistent, fx->name + ": rigidity bound violated");
    }
    for (int d : {2, 3}) c.expect(specht_uniqueness_probe(2, d).nonzero(), "F2 d=" + std::to_string(d) + ": Hom is zero");
    c.expect(!specht_uniqueness_probe(3, 2).nonzero(), "F3 d=2: Hom is nonzero");
    c.note("rigidity on " + std::to_string(F.size()) + " field fixtures; Specht probes 2/2/0");
    results.push_back(c);
  }

  {
    Criterion c{9, "fixture suite runtime", {}, {}};
    auto table = load_fixture_table(default_fixture_path());
    auto t0 = clock_type::now();
    auto main_rows = run_suite(table, SuiteOptions{});
    double main_s = since(t0);
    c.expect(suite_passed(main_rows), "suite rows failed");
    for (const auto& r : main_rows)
      if (r.status != RowStatus::pass && r.status != RowStatus::skipped)
        c.expect(false, r.row.id + ": " + r.actual + r.detail);
    c.expect(main_s < 600, "d <= 3 suite took " + fmt(main_s));
    SuiteOptions d4;
    d4.include_opt_in = true;
    auto t1 = clock_type::now();
    auto all_rows = run_suite(table, d4);
    double d4_s = since(t1);
    std::size_t d4_pass = 0, d4_rows = 0;
    for (const auto& r : all_rows)
      if (r.row.opt_in) {
        ++d4_rows;
        d4_pass += r.status == RowStatus::pass;
        c.expect(r.status == RowStatus::pass, r.row.id + " = " + r.actual + r.detail);
      }
    c.expect(d4_s < 7200, "run including d = 4 took " + fmt(d4_s));
    c.note(std::to_string(main_rows.size() - d4_rows) + " rows in " + fmt(main_s) + "; d=4 rows " +
           std::to_string(d4_pass) + "/" + std::to_string(d4_rows) + " (run with them " + fmt(d4_s) + ")");
    results.push_back(c);
  }

  bool ok = true;
  for (const auto& c : results) {
    ok = ok && c.failures.empty();
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    if (!c.facts.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < c.facts.size(); ++i) std::cout << (i ? "; " : "") << c.facts[i];
      std::cout << "]";
    }
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  std::cout << "total " << fmt(since(t_all)) << "\n";
  return ok ? 0 : 1;
}
