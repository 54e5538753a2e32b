#pragma once

#include "qhc/algebra.hpp"
#include "qhc/qh.hpp"

namespace qhc {

// Path algebra of 2 <-> 1 modulo the path 2 -> 1 -> 2.
// Basis e1, e2, a (2 -> 1), b (1 -> 2), c = ab (1 -> 2 -> 1).
template <class D>
AlgebraPtr<D> quiver_algebra(const D& dom);

// Weights 2 > 1 with idempotents e2, e1.
template <class D>
HeredityChain<D> quiver_chain(const AlgebraPtr<D>& a);

// k[x]/(x^2) with basis 1, x.
template <class D>
AlgebraPtr<D> dual_numbers(const D& dom);

// Upper triangular 2x2 matrices, basis E11, E12, E22.
template <class D>
AlgebraPtr<D> upper_triangular(const D& dom);

// Single weight with the unit as idempotent.
template <class D>
HeredityChain<D> unit_chain(const AlgebraPtr<D>& a);

// One-dimensional module on which basis element i acts by values[i].
template <class D>
Representation<D> scalar_module(const AlgebraPtr<D>& a, const Vec<D>& values);

}  // namespace qhc
