#include "doctest.h"
#include "helpers.hpp"
#include "qhc/fixtures.hpp"
#include "qhc/homology.hpp"
#include "qhc/primitive.hpp"
#include "qhc/schur.hpp"

using namespace qhc;
using namespace qhc::testing;

namespace {

void check_complete_set(const PrimitiveData& prim) {
  const auto& a = *prim.algebra;
  const auto& f = a.domain();
  Vec<PrimeField> sum(a.rank(), 0);
  for (std::size_t i = 0; i < prim.idempotents.size(); ++i) {
    const auto& e = prim.idempotents[i];
    CHECK(a.mul(e, e) == e);
    CHECK_FALSE(vec_is_zero(f, e));
    for (std::size_t j = 0; j < prim.idempotents.size(); ++j)
      if (i != j) CHECK(vec_is_zero(f, a.mul(e, prim.idempotents[j])));
    axpy(f, 1u, e, sum);
  }
  CHECK(sum == a.unit());
  // Wedderburn: dim A/rad = sum over classes of (dim S_c)^2 when every End(S_c) = k
  std::size_t semisimple = 0;
  for (const auto& s : prim.simples) semisimple += s.rank() * s.rank();
  CHECK(semisimple == a.rank() - prim.radical.dim());
}

std::optional<std::size_t> gldim(const PrimitiveData& prim, std::size_t cap) {
  std::size_t best = 0;
  for (const auto& s : prim.simples) {
    auto pd = projective_dimension(prim, s, cap);
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

}  // namespace

TEST_CASE("primitive idempotents") {
  PrimeField f2(2), f3(3), f5(5);
  SUBCASE("semisimple group algebra F_5 S_2") {
    auto prim = primitive_idempotents(symmetric_group_algebra(2, f5));
    check_complete_set(prim);
    CHECK(prim.classes() == 2);
    CHECK(gldim(prim, 4) == std::optional<std::size_t>(0));
  }
  SUBCASE("local algebra F_2 S_2") {
    auto prim = primitive_idempotents(symmetric_group_algebra(2, f2));
    check_complete_set(prim);
    CHECK(prim.classes() == 1);
    CHECK(prim.idempotents.size() == 1);
    CHECK(gldim(prim, 5) == std::nullopt);
    CHECK(projective_injective_classes(prim) == std::vector<bool>{true});
  }
  SUBCASE("matrix-type block in F_3 S_3 splits non-commutatively") {
    auto a = symmetric_group_algebra(3, f3);
    auto prim = primitive_idempotents(a);
    check_complete_set(prim);
    CHECK(prim.classes() == 2);
  }
  SUBCASE("F_5 S_3 has a 2-dimensional simple") {
    auto prim = primitive_idempotents(symmetric_group_algebra(3, f5));
    check_complete_set(prim);
    CHECK(prim.classes() == 3);
    CHECK(prim.idempotents.size() == 4);
  }
  SUBCASE("quiver algebra") {
    auto prim = primitive_idempotents(quiver_algebra(f2));
    check_complete_set(prim);
    CHECK(prim.classes() == 2);
    CHECK(gldim(prim, 6) == std::optional<std::size_t>(2));
    auto pi = projective_injective_classes(prim);
    CHECK(std::count(pi.begin(), pi.end(), true) == 1);
  }
  SUBCASE("upper triangular matrices") {
    auto prim = primitive_idempotents(upper_triangular(f3));
    check_complete_set(prim);
    CHECK(gldim(prim, 4) == std::optional<std::size_t>(1));
  }
  SUBCASE("S_F2(2,2) and S_F3(3,3)") {
    auto s = schur_algebra(2, 2, f2, 1u);
    auto prim = primitive_idempotents(s.algebra, &s.tensor_module);
    check_complete_set(prim);
    CHECK(prim.classes() == 2);
    CHECK(gldim(prim, 6) == std::optional<std::size_t>(2));
    auto s3 = schur_algebra(3, 3, f3, 1u);
    auto prim3 = primitive_idempotents(s3.algebra, &s3.tensor_module);
    check_complete_set(prim3);
    CHECK(prim3.classes() == 3);
  }
  SUBCASE("seed does not change the class count") {
    auto a = symmetric_group_algebra(3, f5);
    for (std::uint64_t seed : {2u, 7u, 99u}) CHECK(primitive_idempotents(a, nullptr, seed).classes() == 3);
  }
}

TEST_CASE("minimal resolutions agree with the bar-type resolution") {
  PrimeField f2(2), f3(3);
  auto compare = [](const AlgebraPtr<PrimeField>& a) {
    auto prim = primitive_idempotents(a);
    for (const auto& s : prim.simples)
      for (const auto& t : prim.simples) {
        auto res = minimal_resolution(prim, s, 4);
        auto fast = ext_dims(prim, res, t, 3);
        auto slow = ext(s, t, 3);
        for (std::size_t i = 0; i <= 3; ++i) CHECK(fast[i] == slow[i].rank());
      }
  };
  compare(quiver_algebra(f2));
  compare(symmetric_group_algebra(2, f2));
  compare(symmetric_group_algebra(3, f3));
  compare(upper_triangular(f3));
}

TEST_CASE("minimal resolution terms are minimal") {
  PrimeField f2(2);
  auto prim = primitive_idempotents(symmetric_group_algebra(2, f2));
  auto res = minimal_resolution(prim, prim.simples[0], 5);
  CHECK_FALSE(res.terminated);
  for (const auto& cls : res.classes) CHECK(cls.size() == 1);
  // Ext^i(k, k) = k in every degree for the cyclic group of order 2
  auto dims = ext_dims(prim, res, prim.simples[0], 4);
  CHECK(dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
}
