#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "doctest.h"
#include "qhc/fixtures.hpp"
#include "qhc/io.hpp"
#include "qhc/schur.hpp"

using namespace qhc;
using namespace qhc::io;

TEST_CASE("algebra round trip") {
  PrimeField f2(2), f3(3);
  LocalIntegers z2(2);
  Rationals q;
  SUBCASE("Schur over F3") {
    auto s = schur_algebra(3, 3, f3, 1u);
    auto j = algebra_to_json(*s.algebra);
    auto back = algebra_from_json(j, f3);
    CHECK(*back == *s.algebra);
    CHECK(algebra_to_json(*back).dump() == j.dump());
  }
  SUBCASE("Schur over Z(2)") {
    auto s = schur_algebra(2, 2, z2, z2.one());
    auto j = algebra_to_json(*s.algebra);
    CHECK(j["ring"] == "zloc2");
    auto any = load_algebra(j);
    REQUIRE(std::holds_alternative<AlgebraPtr<LocalIntegers>>(any));
    CHECK(*std::get<AlgebraPtr<LocalIntegers>>(any) == *s.algebra);
  }
  SUBCASE("q-Schur over Q") {
    auto s = schur_algebra(2, 2, q, q.parse("3/2"));
    auto back = algebra_from_json(algebra_to_json(*s.algebra), q);
    CHECK(*back == *s.algebra);
  }
  SUBCASE("quiver") {
    auto a = quiver_algebra(f2);
    CHECK(*algebra_from_json(algebra_to_json(*a), f2) == *a);
  }
}

TEST_CASE("malformed algebra input") {
  PrimeField f2(2);
  auto j = algebra_to_json(*quiver_algebra(f2));
  SUBCASE("ring mismatch") { CHECK_THROWS_AS(algebra_from_json(j, PrimeField(3)), DomainError); }
  SUBCASE("index out of range") {
    j["mult"][0][2] = 99;
    CHECK_THROWS_AS(algebra_from_json(j, f2), DomainError);
  }
  SUBCASE("bad coefficient") {
    j["mult"][0][3] = "x";
    CHECK_THROWS_AS(algebra_from_json(j, f2), DomainError);
  }
  SUBCASE("missing unit") {
    j.erase("unit");
    CHECK_THROWS_AS(algebra_from_json(j, f2), DomainError);
  }
  SUBCASE("non-associative table") {
    j["mult"].push_back({1, 2, 0, "1"});
    CHECK_THROWS_AS(algebra_from_json(j, f2), DomainError);
  }
  SUBCASE("unknown ring") {
    j["ring"] = "zz";
    CHECK_THROWS_AS(load_algebra(j), DomainError);
  }
}

TEST_CASE("modules and chains round trip") {
  PrimeField f2(2);
  auto s = schur_algebra(2, 2, f2, 1u);
  auto jm = representation_to_json(s.tensor_module, "A");
  auto m = representation_from_json(jm, s.algebra);
  CHECK(m.rank() == s.tensor_module.rank());
  for (std::size_t b = 0; b < s.algebra->rank(); ++b) CHECK(m.action(b) == s.tensor_module.action(b));
  jm["action"][0][0][0] = "1";
  jm["action"][0][0][1] = "1";
  CHECK_THROWS_AS(representation_from_json(jm, s.algebra), DomainError);

  auto chain = schur_heredity_chain(s);
  auto back = chain_from_json(chain_to_json(chain), s.algebra);
  CHECK(back.weights == chain.weights);
  CHECK(back.idempotents == chain.idempotents);
  CHECK(back.above == chain.above);
}

TEST_CASE("sidecar round trip") {
  Sidecar s{"schur", 2, 3, "1", json::array({"1", "0"}), json(nullptr)};
  auto back = sidecar_from_json(sidecar_to_json(s));
  CHECK(back.family == "schur");
  CHECK(back.n == 2);
  CHECK(back.d == 3);
  CHECK(back.idempotent_e == s.idempotent_e);
  CHECK(back.chain.is_null());
  CHECK_THROWS_AS(sidecar_from_json(json{{"family", "schur"}}), DomainError);
}

TEST_CASE("report round trip preserves the recomputed value") {
  PrimeField f3(3);
  LocalIntegers z2(2);
  SUBCASE("field") {
    auto s = schur_algebra(3, 3, f3, 1u);
    CoverAnalysis<PrimeField> an(Cover<PrimeField>::from_idempotent(s.algebra, s.e), 8);
    auto r = an.domdim_algebra();
    auto j = report_to_json(r);
    auto back = report_from_json(j);
    CHECK(back.value == r.value);
    CHECK(recompute(back) == r.value);
    CHECK(report_to_json(back).dump() == j.dump());
    auto h = an.hn_standard(schur_heredity_chain(s));
    CHECK(recompute(report_from_json(report_to_json(h))) == h.value);
  }
  SUBCASE("local ring with both routes") {
    auto s = schur_algebra(2, 2, z2, z2.one());
    CoverAnalysis<LocalIntegers> an(Cover<LocalIntegers>::from_idempotent(s.algebra, s.e), 8);
    auto r = an.domdim_algebra();
    auto back = report_from_json(report_to_json(r));
    CHECK(recompute(back) == r.value);
    CHECK(back.routes_agree == r.routes_agree);
    CHECK(back.diagnostic == r.diagnostic);
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(report_from_json(json{{"kind", "domdim"}}), DomainError);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"kind":"nope","value":"2","cap":8,"evidence":{}})")),
                    DomainError);
  }
}

TEST_CASE("files are written deterministically") {
  PrimeField f2(2);
  auto j = algebra_to_json(*schur_algebra(2, 2, f2, 1u).algebra);
  auto dir = std::filesystem::temp_directory_path();
  auto p1 = (dir / "qhc_io_a.json").string(), p2 = (dir / "qhc_io_b.json").string();
  write_json_file(p1, j);
  write_json_file(p2, read_json_file(p1));
  CHECK(read_json_file(p2) == j);
  std::ifstream a(p1), b(p2);
  std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  CHECK(sa.back() == '\n');
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  CHECK_THROWS_AS(read_json_file(p1), DomainError);
}
