#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhc/algebra.hpp"

namespace qhc {

// Weights listed largest first, one idempotent per weight. The standard module
// of weight k is A e_k modulo the part generated by the idempotents of the
// larger weights 0..k-1.
template <class D>
struct HeredityChain {
  AlgebraPtr<D> algebra;
  std::vector<std::string> weights;
  std::vector<Vec<D>> idempotents;
  // above[i][j]: weight i is larger than weight j in the underlying partial
  // order. Empty means the chain order itself.
  std::vector<std::vector<bool>> above;

  std::size_t size() const { return weights.size(); }
  bool is_above(std::size_t i, std::size_t j) const {
    return above.empty() ? i < j : above[i][j];
  }
};

HeredityChain<PrimeField> reduce_mod_p(const HeredityChain<LocalIntegers>& chain,
                                       AlgebraPtr<PrimeField> reduced = nullptr);

template <class D>
HeredityChain<D> opposite_chain(const HeredityChain<D>& chain, AlgebraPtr<D> op = nullptr);

template <class D>
struct StandardModule {
  std::string weight;
  std::size_t index = 0;
  LeftIdealModule<D> projective;   // A e_k with its basis inside A
  SubBasis<D> kernel;              // C_k inside A e_k
  Representation<D> kernel_module; // C_k
  Representation<D> delta;
  Matrix<D> surjection;            // A e_k -> delta
};

// Throws DomainError when C_k is not a direct summand over the coefficient ring.
template <class D>
StandardModule<D> standard_module(const HeredityChain<D>& chain, std::size_t k);

template <class D>
std::vector<StandardModule<D>> standard_modules(const HeredityChain<D>& chain);

// nabla(k) = D(standard module of the opposite chain), over the original algebra.
template <class D>
std::vector<Representation<D>> costandard_modules(const HeredityChain<D>& chain);

struct AxiomCheck {
  bool pass = true;
  std::string detail;
};

struct QhVerdict {
  std::array<AxiomCheck, 5> axioms;
  bool ok() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

template <class D>
QhVerdict verify_split_qh(const HeredityChain<D>& chain);

struct FiltrationVerdict {
  bool member = false;
  // (weight, multiplicity) from the top quotient down to the bottom submodule
  std::vector<std::pair<std::string, std::size_t>> layers;
  bool free_over_ring = true;
  std::string certificate;
};

// Membership in F(Delta) restricted to weights with index < limit (all weights
// when limit is empty). Needs End(Delta(k)) to be the ground field, throws
// DomainError otherwise. Over Z_(p) decided on the reduction mod p.
template <class D>
FiltrationVerdict has_delta_filtration(const Representation<D>& m, const HeredityChain<D>& chain,
                                       std::optional<std::size_t> limit = std::nullopt);

}  // namespace qhc
