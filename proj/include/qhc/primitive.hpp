#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhc/algebra.hpp"

namespace qhc {

// Complete set of primitive orthogonal idempotents of an algebra over F_p,
// lifted from A/rad(A), with one representative per isomorphism class of
// indecomposable projective.
struct PrimitiveData {
  AlgebraPtr<PrimeField> algebra;
  SubBasis<PrimeField> radical;
  std::vector<Vec<PrimeField>> radical_generators;  // as a left ideal
  std::vector<Vec<PrimeField>> idempotents;         // complete orthogonal set, sums to 1
  std::vector<std::size_t> class_of;                // idempotent -> class
  std::vector<Vec<PrimeField>> representatives;     // one idempotent per class
  std::vector<LeftIdealModule<PrimeField>> projectives;  // A f_c
  std::vector<Representation<PrimeField>> simples;       // A f_c / rad(A) f_c

  std::size_t classes() const { return representatives.size(); }
};

// The faithful module, when given, is used for the radical. The seed drives
// the random elements used to split non-commutative corners.
PrimitiveData primitive_idempotents(const AlgebraPtr<PrimeField>& a,
                                    const Representation<PrimeField>* faithful = nullptr,
                                    std::uint64_t seed = 1);

// Minimal projective resolution P_i = sum_j A f_{c_j}. Elements of P_i are
// vectors of length m_i * rank(A), block j lying in A f_{c_j}. gens[0][j] is
// the image in M of the generator f_{c_j} of P_0; for i >= 1, gens[i][j] is its
// image in P_{i-1}.
struct MinimalResolution {
  Representation<PrimeField> target;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<Vec<PrimeField>>> gens;
  bool terminated = false;

  std::size_t length() const { return classes.empty() ? 0 : classes.size() - 1; }
};

MinimalResolution minimal_resolution(const PrimitiveData& prim, const Representation<PrimeField>& m,
                                     std::size_t length);

// dim Ext^i_A(M, X) for i = 0..max_degree from a minimal resolution of M
// (of length >= max_degree + 1 unless terminated).
std::vector<std::size_t> ext_dims(const PrimitiveData& prim, const MinimalResolution& res,
                                  const Representation<PrimeField>& x, std::size_t max_degree);

// Projective dimension, or nullopt when it exceeds cap.
std::optional<std::size_t> projective_dimension(const PrimitiveData& prim,
                                                const Representation<PrimeField>& m, std::size_t cap);

// Top and socle multiplicities of S_c in m, over End(S_c).
std::vector<std::size_t> top_multiplicities(const PrimitiveData& prim, const Representation<PrimeField>& m);
std::vector<std::size_t> socle_multiplicities(const PrimitiveData& prim, const Representation<PrimeField>& m);

// m is projective iff its projective cover, the sum of top-multiplicity copies
// of A f_c, has the same dimension; dually for injectivity with dim f_c A.
bool is_projective_module(const PrimitiveData& prim, const Representation<PrimeField>& m);
bool is_injective_module(const PrimitiveData& prim, const Representation<PrimeField>& m);

// For each class c: whether the injective hull D(f_c A) of the simple S_c is
// also projective.
std::vector<bool> projective_injective_classes(const PrimitiveData& prim);

}  // namespace qhc
