#include "doctest.h"
#include "helpers.hpp"
#include "qhc/fixtures.hpp"
#include "qhc/homology.hpp"
#include "qhc/schur.hpp"

using namespace qhc;
using namespace qhc::testing;

namespace {

// Dimension of the centre by stacking the commutator maps x -> bx - xb.
template <class D>
std::size_t centre_dim(const Algebra<D>& a) {
  const std::size_t n = a.rank();
  Matrix<D> big(a.domain(), n * n, n);
  for (std::size_t b = 0; b < n; ++b) {
    auto diff = a.left_mult(a.basis_vector(b)) - a.right_mult(a.basis_vector(b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) big(b * n + r, c) = diff(r, c);
  }
  return n - rref(big).rank;
}

template <class D>
Vec<D> hecke_mul(const Algebra<D>& h, std::initializer_list<std::size_t> idx) {
  Vec<D> acc = h.unit();
  for (auto i : idx) acc = h.mul(acc, h.basis_vector(i));
  return acc;
}

std::size_t perm_index(const Permutation& w) {
  auto all = permutations(static_cast<int>(w.size()));
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), w) - all.begin());
}

Permutation simple_reflection(int d, int t) {
  Permutation p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  std::swap(p[t], p[t + 1]);
  return p;
}

}  // namespace

TEST_CASE("permutations and partitions") {
  CHECK(permutations(3).size() == 6);
  CHECK(permutations(3).front() == Permutation{0, 1, 2});
  for (const auto& w : permutations(4)) {
    auto word = reduced_word(w);
    Permutation p{0, 1, 2, 3};
    for (int t : word) p = compose(p, simple_reflection(4, t));
    CHECK(p == w);
    std::size_t inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += w[i] > w[j];
    CHECK(word.size() == inversions);
  }
  auto parts = partitions(3, 3);
  REQUIRE(parts.size() == 3);
  CHECK(partition_label(parts[0]) == "(3)");
  CHECK(partition_label(parts[2]) == "(1,1,1)");
  CHECK(partitions(4, 2).size() == 3);
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK(permutation_label(Permutation{1, 0, 2}) == "[2,1,3]");
}

TEST_CASE("symmetric group algebras") {
  PrimeField f2(2), f3(3);
  CHECK(symmetric_group_algebra(1, f2)->rank() == 1);
  auto s2 = symmetric_group_algebra(2, f2);
  CHECK(s2->basis_product(1, 1) == ints(f2, {1, 0}));
  auto s3 = symmetric_group_algebra(3, f3);
  CHECK(s3->rank() == 6);
  CHECK(centre_dim(*s3) == 3);
}

TEST_CASE("Hecke algebras") {
  SUBCASE("quadratic relation in F_5 at u = 2") {
    PrimeField f5(5);
    auto h = hecke_algebra(2, f5, 2u);
    CHECK(h->labels()[1] == "T[2,1]");
    CHECK(h->basis_product(1, 1) == ints(f5, {1, 4}));
  }
  SUBCASE("quadratic and braid relations over Q at u = 2") {
    Rationals q;
    const auto u = q.from_int(2);
    const auto c = q.sub(u, q.inv(u));
    for (int d : {3, 4}) {
      auto h = hecke_algebra(d, q, u);
      CHECK(check_algebra(*h).ok());
      for (int t = 0; t + 1 < d; ++t) {
        auto s = perm_index(simple_reflection(d, t));
        auto lhs = hecke_mul(*h, {s, s});
        Vec<Rationals> rhs = h->unit();
        axpy(q, c, h->basis_vector(s), rhs);
        CHECK(lhs == rhs);
      }
      for (int t = 0; t + 2 < d; ++t) {
        auto a = perm_index(simple_reflection(d, t));
        auto b = perm_index(simple_reflection(d, t + 1));
        CHECK(hecke_mul(*h, {a, b, a}) == hecke_mul(*h, {b, a, b}));
      }
      if (d == 4) {
        auto a = perm_index(simple_reflection(4, 0));
        auto b = perm_index(simple_reflection(4, 2));
        CHECK(hecke_mul(*h, {a, b}) == hecke_mul(*h, {b, a}));
      }
    }
  }
  SUBCASE("u = 1 gives the group algebra") {
    PrimeField f3(3);
    auto h = hecke_algebra(3, f3, 1u);
    auto g = symmetric_group_algebra(3, f3);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK(h->basis_product(i, j) == g->basis_product(i, j));
  }
  SUBCASE("u must be a unit") {
    CHECK_THROWS_AS(hecke_algebra(2, PrimeField(5), 0u), DomainError);
    LocalIntegers z2(2);
    CHECK_THROWS_AS(hecke_algebra(2, z2, z2.from_int(2)), DomainError);
  }
}

TEST_CASE("tensor space") {
  PrimeField f5(5);
  auto ts = tensor_space(2, 2, f5, 2u);
  CHECK(ts.rank() == 4);
  CHECK(check_representation(ts.module));
  const auto& g = ts.generators[0];
  auto e11 = ts.index_of({0, 0}), e12 = ts.index_of({0, 1}), e21 = ts.index_of({1, 0});
  CHECK(g(e11, e11) == 2u);
  CHECK(g(e21, e12) == 1u);
  CHECK(g(e12, e12) == 0u);
  // e_21 T_s = (u - u^-1) e_21 + e_12 = 4 e_21 + e_12
  CHECK(g(e21, e21) == 4u);
  CHECK(g(e12, e21) == 1u);
  // generators satisfy the quadratic relation
  auto id = Matrix<PrimeField>::identity(f5, 4);
  CHECK(g * g == g.scaled(4u) + id);

  auto t3 = tensor_space(3, 3, PrimeField(3), 1u);
  CHECK(t3.rank() == 27);
  CHECK(check_representation(t3.module));
}

TEST_CASE("Schur algebras") {
  PrimeField f2(2), f5(5);
  SUBCASE("rank 10 for n = d = 2") {
    CHECK(schur_algebra(2, 2, f2, 1u).algebra->rank() == 10);
    CHECK(schur_algebra(2, 2, f5, 2u).algebra->rank() == 10);
    CHECK(schur_algebra(3, 3, PrimeField(3), 1u).algebra->rank() == 165);
  }
  SUBCASE("n < d is rejected") {
    CHECK_THROWS_AS(schur_algebra(2, 3, f2, 1u), DomainError);
  }
  SUBCASE("u = 1 commutant solve reproduces the orbit construction") {
    auto orbit = schur_algebra(2, 2, f5, 1u);
    auto solved = schur_algebra(2, 2, f5, 1u, SchurMethod::commutant);
    CHECK(*orbit.algebra == *solved.algebra);
    CHECK(orbit.pivots == solved.pivots);
    LocalIntegers z3(3);
    auto zo = schur_algebra(3, 3, z3, z3.one());
    auto zs = schur_algebra(3, 3, z3, z3.one(), SchurMethod::commutant);
    CHECK(*zo.algebra == *zs.algebra);
  }
  SUBCASE("integral Schur algebras reduce to the modular ones") {
    LocalIntegers z2(2);
    CHECK(*reduce_mod_p(*schur_algebra(2, 2, z2, z2.one()).algebra) == *schur_algebra(2, 2, f2, 1u).algebra);
  }
  SUBCASE("basis maps commute with the Hecke action") {
    auto s = schur_algebra(2, 2, f5, 2u);
    CHECK(check_algebra(*s.algebra).ok());
    CHECK(check_representation(s.tensor_module));
    for (std::size_t b = 0; b < s.algebra->rank(); ++b)
      for (std::size_t h = 0; h < s.tensor.hecke->rank(); ++h)
        CHECK(s.basis_map(b) * s.tensor.module.action(h) == s.tensor.module.action(h) * s.basis_map(b));
    CHECK(s.algebra->labels()[0].rfind("xi(", 0) == 0);
  }
  SUBCASE("weight idempotents") {
    auto s = schur_algebra(3, 3, PrimeField(3), 1u);
    const auto& a = *s.algebra;
    Vec<PrimeField> sum(a.rank(), 0);
    for (const auto& e : s.weight_idempotents) {
      CHECK(a.mul(e, e) == e);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.domain().add(sum[i], e[i]);
    }
    CHECK(a.mul(s.e, s.e) == s.e);
    // (1,1,1) is the last weight and its idempotent is e
    CHECK(s.weight_idempotents.back() == s.e);
    CHECK(sum != a.unit());  // weights (2,1,0) permutations are missing
  }
}

TEST_CASE("the idempotent e") {
  PrimeField f2(2);
  for (auto s : {schur_algebra(2, 2, f2, 1u), schur_algebra(2, 2, PrimeField(5), 2u)}) {
    const auto& a = s.algebra;
    SUBCASE("A e is isomorphic to the tensor space") {
      auto ae = left_ideal_module(a, s.e);
      const auto om = omega_index(s);
      Matrix<PrimeField> phi(a->domain(), s.tensor.rank(), ae.basis.dim());
      for (std::size_t c = 0; c < ae.basis.dim(); ++c)
        phi.set_column(c, s.tensor_module.act(ae.basis.vector(c)).column(om));
      CHECK(is_intertwiner(ae.module, s.tensor_module, phi));
      CHECK(map_verdict(phi).bijective);
    }
    SUBCASE("eAe is the Hecke algebra") {
      auto trunc = idempotent_truncation(a, s.e);
      CHECK(trunc.algebra->rank() == s.tensor.hecke->rank());
      const auto& h = *s.tensor.hecke;
      for (std::size_t w = 0; w < h.rank(); ++w)
        for (std::size_t v = 0; v < h.rank(); ++v) {
          auto prod = h.basis_product(w, v);
          Vec<PrimeField> expect(a->rank(), 0);
          for (std::size_t r = 0; r < h.rank(); ++r) axpy(a->domain(), prod[r], s.hecke_images[r], expect);
          CHECK(a->mul(s.hecke_images[w], s.hecke_images[v]) == expect);
        }
      CHECK(s.hecke_images[0] == s.e);
    }
  }
}

TEST_CASE("Schur functor images") {
  PrimeField f2(2);
  auto s = schur_algebra(2, 2, f2, 1u);
  auto chain = schur_heredity_chain(s);
  auto stds = standard_modules(chain);
  auto ft = schur_functor_image(s, s.tensor_module);
  CHECK(ft.rank() == 2);
  CHECK(check_representation(ft));
  for (const auto& st : stds) {
    auto f = schur_functor_image(s, st.delta);
    CHECK(f.rank() == 1);
    CHECK(check_representation(f));
  }
  // simple heads: only L((1,1)) = Delta((1,1)) survives
  const auto& alg = *s.algebra;
  auto gens = left_ideal_generators(alg, radical(alg));
  std::size_t nonzero = 0;
  for (const auto& st : stds) {
    auto rad = radical_submodule(st.delta, gens);
    auto l = split_submodule(st.delta, rad.rows())->quotient;
    nonzero += schur_functor_image(s, l).rank() > 0;
  }
  CHECK(nonzero == 1);
}
