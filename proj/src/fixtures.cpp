#include "qhc/fixtures.hpp"

namespace qhc {

template <class D>
AlgebraPtr<D> quiver_algebra(const D& dom) {
  enum : std::uint32_t { e1, e2, a, b, c };
  const auto one = dom.one();
  std::vector<StructureConstant<D>> q = {
      {e1, e1, e1, one}, {e2, e2, e2, one}, {e1, a, a, one},  {a, e2, a, one},
      {e2, b, b, one},   {b, e1, b, one},   {a, b, c, one},   {e1, c, c, one},
      {c, e1, c, one},
  };
  Vec<D> unit = {one, one, dom.zero(), dom.zero(), dom.zero()};
  return make_algebra(dom, {"e1", "e2", "a", "b", "c"}, unit, q);
}

template <class D>
HeredityChain<D> quiver_chain(const AlgebraPtr<D>& a) {
  HeredityChain<D> chain;
  chain.algebra = a;
  chain.weights = {"2", "1"};
  chain.idempotents = {a->basis_vector(1), a->basis_vector(0)};
  return chain;
}

template <class D>
AlgebraPtr<D> dual_numbers(const D& dom) {
  const auto one = dom.one();
  std::vector<StructureConstant<D>> q = {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
  return make_algebra(dom, {"1", "x"}, Vec<D>{one, dom.zero()}, q);
}

template <class D>
AlgebraPtr<D> upper_triangular(const D& dom) {
  const auto one = dom.one();
  std::vector<StructureConstant<D>> q = {
      {0, 0, 0, one}, {0, 1, 1, one}, {1, 2, 1, one}, {2, 2, 2, one}};
  return make_algebra(dom, {"E11", "E12", "E22"}, Vec<D>{one, dom.zero(), one}, q);
}

template <class D>
HeredityChain<D> unit_chain(const AlgebraPtr<D>& a) {
  HeredityChain<D> chain;
  chain.algebra = a;
  chain.weights = {"1"};
  chain.idempotents = {a->unit()};
  return chain;
}

template <class D>
Representation<D> scalar_module(const AlgebraPtr<D>& a, const Vec<D>& values) {
  std::vector<Matrix<D>> acts;
  for (const auto& v : values) {
    Matrix<D> m(a->domain(), 1, 1);
    m(0, 0) = v;
    acts.push_back(std::move(m));
  }
  return Representation<D>(a, 1, std::move(acts));
}

#define QHC_INSTANTIATE(D)                                                     \
  template AlgebraPtr<D> quiver_algebra(const D&);                             \
  template HeredityChain<D> quiver_chain(const AlgebraPtr<D>&);                \
  template AlgebraPtr<D> dual_numbers(const D&);                               \
  template AlgebraPtr<D> upper_triangular(const D&);                           \
  template HeredityChain<D> unit_chain(const AlgebraPtr<D>&);                  \
  template Representation<D> scalar_module(const AlgebraPtr<D>&, const Vec<D>&);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
