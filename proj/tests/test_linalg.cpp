#include "doctest.h"
#include "qhc/linalg.hpp"

using namespace qhc;

namespace {

Matrix<LocalIntegers> zmat(const LocalIntegers& z, std::vector<std::vector<long>> rows) {
  std::vector<Vec<LocalIntegers>> rs;
  for (auto& r : rows) {
    Vec<LocalIntegers> v;
    for (long x : r) v.push_back(z.from_int(x));
    rs.push_back(v);
  }
  return Matrix<LocalIntegers>::from_rows(z, rs, rows.front().size());
}

}  // namespace

TEST_CASE("smith valuations over Z_(2)") {
  LocalIntegers z(2);
  CHECK(smith_valuations(zmat(z, {{2, 0}, {0, 3}})) == std::vector<int>{0, 1});
  CHECK(smith_valuations(zmat(z, {{2, 4}, {6, 8}})) == std::vector<int>{1, 2});
}

TEST_CASE("cokernel of diag(1,4) inside rank 3") {
  LocalIntegers z(2);
  auto inv = cokernel_invariants(zmat(z, {{1, 0}, {0, 4}, {0, 0}}));
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion_exponents == std::vector<int>{2});
  CHECK(inv.torsion_strings() == std::vector<std::string>{"4"});
}

TEST_CASE("rref over F_2") {
  PrimeField f(2);
  auto m = Matrix<PrimeField>::from_rows(f, {{1, 1}, {1, 1}}, 2);
  auto r = rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.cols() == 1);
  CHECK(r.kernel.column(0) == Vec<PrimeField>{1, 1});
}

TEST_CASE("kernel over Z_(p) is saturated") {
  LocalIntegers z(3);
  auto k = kernel_basis(zmat(z, {{3, 6, 9}}));
  CHECK(k.dim() == 2);
  auto again = unit_echelon(k.rows);
  CHECK(again.has_value());
}

TEST_CASE("map verdicts") {
  LocalIntegers z(2);
  auto v = map_verdict(zmat(z, {{2}}));
  CHECK(v.injective);
  CHECK(!v.split_injective);
  CHECK(!v.surjective);
  auto w = map_verdict(zmat(z, {{1, 0}, {0, 3}}));
  CHECK(w.bijective);
}

TEST_CASE("lattice membership") {
  LocalIntegers z(2);
  Lattice<LocalIntegers> lat(z, 2);
  CHECK(lat.insert({mpq_class(2), mpq_class(0)}));
  CHECK(!lat.contains({mpq_class(1), mpq_class(0)}));
  CHECK(lat.contains({mpq_class(6), mpq_class(0)}));
  CHECK(lat.contains({mpq_class(2, 3), mpq_class(0)}));
}

TEST_CASE("solve requires integral solutions") {
  LocalIntegers z(2);
  auto m = zmat(z, {{2}});
  CHECK(!solve(m, Vec<LocalIntegers>{mpq_class(1)}).has_value());
  auto s = solve(m, Vec<LocalIntegers>{mpq_class(6)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == 3);
}
