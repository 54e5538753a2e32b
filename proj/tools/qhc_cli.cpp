#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qhc/cover.hpp"
#include "qhc/fixtures.hpp"
#include "qhc/io.hpp"
#include "qhc/qh.hpp"
#include "qhc/schur.hpp"
#include "qhc/suite.hpp"

using namespace qhc;
using qhc::io::json;

namespace {

constexpr int kOk = 0, kExpectationFailed = 1, kInputError = 2;

struct Options {
  std::string family = "schur", ring = "f2", u = "1", output, file, category = "proj", suite = "all", fixtures;
  int n = 0, d = 2;
  long cap = 8;
  bool as_json = false, include_d4 = false;
};

std::string sidecar_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.extension() == ".json") p.replace_extension();
  return p.string() + ".sidecar.json";
}

template <class D>
io::Sidecar build_into(const Options& o, const D& dom, json& algebra) {
  io::Sidecar side{o.family, o.n, o.d, o.u, json(nullptr), json(nullptr)};
  auto u = dom.parse(o.u);
  if (o.family == "schur" || o.family == "qschur") {
    if (o.family == "schur" && !dom.is_one(u)) throw DomainError("the classical family has u = 1");
    auto s = schur_algebra(o.n, o.d, dom, u);
    algebra = io::algebra_to_json(*s.algebra);
    side.idempotent_e = io::vec_to_json(dom, s.e);
    side.chain = io::chain_to_json(schur_heredity_chain(s));
  } else if (o.family == "symgroup") {
    algebra = io::algebra_to_json(*symmetric_group_algebra(o.d, dom));
  } else if (o.family == "hecke") {
    algebra = io::algebra_to_json(*hecke_algebra(o.d, dom, u));
  } else if (o.family == "quiver") {
    auto a = quiver_algebra(dom);
    algebra = io::algebra_to_json(*a);
    side.idempotent_e = io::vec_to_json(dom, a->basis_vector(0));
    side.chain = io::chain_to_json(quiver_chain(a));
  } else {
    throw DomainError("unknown family " + o.family);
  }
  return side;
}

int cmd_build(const Options& o) {
  if (o.output.empty()) throw DomainError("--output is required");
  Options opts = o;
  if (opts.n == 0) opts.n = opts.d;
  json algebra;
  auto side = std::visit([&](const auto& dom) { return build_into(opts, dom, algebra); }, parse_ring_spec(o.ring));
  io::write_json_file(opts.output, algebra);
  io::write_json_file(sidecar_path(opts.output), io::sidecar_to_json(side));
  return kOk;
}

struct Loaded {
  io::AnyAlgebra algebra;
  std::optional<io::Sidecar> sidecar;
};

Loaded load(const std::string& path) {
  Loaded l{io::load_algebra(io::read_json_file(path)), std::nullopt};
  auto sp = sidecar_path(path);
  if (std::filesystem::exists(sp)) l.sidecar = io::sidecar_from_json(io::read_json_file(sp));
  return l;
}

template <class D>
Cover<D> cover_of(const AlgebraPtr<D>& a, const std::optional<io::Sidecar>& side) {
  if (!side || side->idempotent_e.is_null()) throw DomainError("the sidecar names no idempotent for the cover");
  return Cover<D>::from_idempotent(a, io::vec_from_json(a->domain(), side->idempotent_e, a->rank()));
}

template <class D>
HeredityChain<D> chain_of(const AlgebraPtr<D>& a, const std::optional<io::Sidecar>& side) {
  if (!side || side->chain.is_null()) throw DomainError("the sidecar carries no heredity chain");
  return io::chain_from_json(side->chain, a);
}

void check_category(const std::string& c) {
  if (c != "proj" && c != "standard") throw DomainError("category must be proj or standard");
}

int cmd_dimension(const Options& o, bool hn) {
  check_category(o.category);
  auto l = load(o.file);
  auto report = std::visit(
      [&](const auto& a) {
        using D = std::decay_t<decltype(a->domain())>;
        CoverAnalysis<D> an(cover_of(a, l.sidecar), o.cap);
        if (o.category == "proj") return hn ? an.hn_proj() : an.domdim_algebra();
        auto chain = chain_of(a, l.sidecar);
        return hn ? an.hn_standard(chain) : an.inf_domdim_standards(chain);
      },
      l.algebra);
  std::cout << io::report_to_json(report).dump(2) << "\n";
  return kOk;
}

// proj: Ext^i_B(FA, FA). standard: Ext^i_A(Delta(x), Delta(y)) for all pairs.
int cmd_ext(const Options& o) {
  check_category(o.category);
  auto l = load(o.file);
  json rows = json::array();
  std::visit(
      [&](const auto& a) {
        auto emit = [&](const std::string& from, const std::string& to, const auto& groups) {
          for (const auto& g : groups)
            rows.push_back({{"from", from}, {"to", to}, {"degree", g.degree}, {"rank", g.inv.free_rank},
                            {"torsion", g.inv.torsion_strings()}});
        };
        if (o.category == "proj") {
          auto c = cover_of(a, l.sidecar);
          emit("FA", "FA", ext(c.fa(), c.fa(), o.cap));
        } else {
          auto std_mods = standard_modules(chain_of(a, l.sidecar));
          for (const auto& x : std_mods)
            for (const auto& y : std_mods) emit(x.weight, y.weight, ext(x.delta, y.delta, o.cap));
        }
      },
      l.algebra);
  if (o.as_json) {
    std::cout << json{{"category", o.category}, {"cap", o.cap}, {"ext", rows}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << "Ext^" << r["degree"].get<std::size_t>() << "(" << r["from"].get<std::string>() << ", "
                << r["to"].get<std::string>() << ") rank " << r["rank"].get<std::size_t>();
      for (const auto& t : r["torsion"]) std::cout << " + " << t.get<std::string>();
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_verify_qh(const Options& o) {
  auto l = load(o.file);
  auto verdict = std::visit([&](const auto& a) { return verify_split_qh(chain_of(a, l.sidecar)); }, l.algebra);
  static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
  if (o.as_json) {
    json axioms = json::array();
    for (std::size_t k = 0; k < 5; ++k)
      axioms.push_back({{"axiom", names[k]}, {"pass", verdict.axioms[k].pass}, {"detail", verdict.axioms[k].detail}});
    std::cout << json{{"axioms", axioms}, {"ok", verdict.ok()}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < 5; ++k) {
      std::cout << "axiom (" << names[k] << "): " << (verdict.axioms[k].pass ? "pass" : "FAIL");
      if (!verdict.axioms[k].detail.empty()) std::cout << "  " << verdict.axioms[k].detail;
      std::cout << "\n";
    }
  }
  return verdict.ok() ? kOk : kExpectationFailed;
}

int cmd_paper_check(const Options& o) {
  auto table = load_fixture_table(o.fixtures.empty() ? default_fixture_path() : o.fixtures);
  SuiteOptions so;
  so.suite = o.suite;
  so.cap = o.cap;
  so.include_opt_in = o.include_d4;
  auto results = run_suite(table, so);
  if (o.as_json) {
    std::cout << results_to_json(results, table).dump(2) << "\n";
  } else {
    std::cout << results_table(results);
    std::cout << (suite_passed(results) ? "all rows pass" : "some rows failed") << "\n";
  }
  return suite_passed(results) ? kOk : kExpectationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominant and Hemmer-Nakano dimensions of Schur-type covers"};
  app.require_subcommand(1);
  Options o;
  auto cap_opt = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Degree cap")->check(CLI::Range(2L, 64L));
  };

  auto* build = app.add_subcommand("build", "Write an algebra file and its sidecar");
  build->add_option("family", o.family, "schur, qschur, symgroup, hecke or quiver")->required();
  build->add_option("--ring", o.ring, "f<p>, q or zloc<p>");
  build->add_option("--n", o.n, "Tensor dimension (defaults to d)");
  build->add_option("--d", o.d, "Degree");
  build->add_option("--u", o.u, "Hecke parameter u; q = u^-2");
  build->add_option("-o,--output", o.output, "Algebra file")->required();

  CLI::App* dims[2];
  const char* dim_names[2] = {"domdim", "hn"};
  const char* dim_help[2] = {"Dominant dimension report (standard: inf over the standard modules)",
                             "Hemmer-Nakano dimension report"};
  for (int k = 0; k < 2; ++k) {
    dims[k] = app.add_subcommand(dim_names[k], dim_help[k]);
    dims[k]->add_option("file", o.file, "Algebra file")->required();
    dims[k]->add_option("--category", o.category, "proj or standard");
    cap_opt(dims[k]);
  }

  auto* ext_cmd = app.add_subcommand("ext", "Ext groups over the cover or between standard modules");
  ext_cmd->add_option("file", o.file, "Algebra file")->required();
  ext_cmd->add_option("--category", o.category, "proj or standard");
  ext_cmd->add_flag("--json", o.as_json);
  cap_opt(ext_cmd);

  auto* vqh = app.add_subcommand("verify-qh", "Check the split quasi-hereditary axioms of the stored chain");
  vqh->add_option("file", o.file, "Algebra file")->required();
  vqh->add_flag("--json", o.as_json);

  auto* pc = app.add_subcommand("paper-check", "Run the fixture table of expected values");
  pc->add_option("suite", o.suite, "schur, qschur, integral or all");
  pc->add_option("--fixtures", o.fixtures, "Fixture file (default: $QHC_FIXTURE_DIR/expectations.json)");
  pc->add_flag("--include-d4", o.include_d4, "Also run the d = 4 rows");
  pc->add_flag("--json", o.as_json);
  cap_opt(pc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (dims[0]->parsed()) return cmd_dimension(o, false);
    if (dims[1]->parsed()) return cmd_dimension(o, true);
    if (ext_cmd->parsed()) return cmd_ext(o);
    if (vqh->parsed()) return cmd_verify_qh(o);
    if (pc->parsed()) return cmd_paper_check(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
