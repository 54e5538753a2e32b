#pragma once

#include <vector>

#include "qhc/algebra.hpp"

namespace qhc::testing {

// Every element of a finite-field algebra (rank small).
inline std::vector<Vec<PrimeField>> all_elements(const PrimeField& f, std::size_t n) {
  std::vector<Vec<PrimeField>> out;
  Vec<PrimeField> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == f.p - 1) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

inline bool is_nilpotent(const Algebra<PrimeField>& a, const Vec<PrimeField>& x) {
  auto y = x;
  for (std::size_t k = 0; k < a.rank() + 1; ++k) {
    if (vec_is_zero(a.domain(), y)) return true;
    y = a.mul(y, x);
  }
  return vec_is_zero(a.domain(), y);
}

// Jacobson radical by enumeration: x with A x consisting of nilpotent elements.
inline std::size_t brute_radical_size(const Algebra<PrimeField>& a) {
  auto elems = all_elements(a.domain(), a.rank());
  std::size_t count = 0;
  for (const auto& x : elems) {
    bool ok = true;
    for (const auto& y : elems)
      if (!is_nilpotent(a, a.mul(y, x))) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

template <class D>
Vec<D> ints(const D& dom, std::initializer_list<long> xs) {
  Vec<D> v;
  for (long x : xs) v.push_back(dom.from_int(x));
  return v;
}

}  // namespace qhc::testing
