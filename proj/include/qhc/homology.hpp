#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhc/algebra.hpp"

namespace qhc {

// Free resolution P_i = A^{ranks[i]} -> ... -> P_0 -> M. Generators of P_i are e_l;
// d_i(e_l) = sum_j beta[i-1][l][j] e_j with beta in A. Elements of A^r are
// coordinate vectors of length r*rank(A), block l holding the coefficient of e_l.
template <class D>
struct FreeResolution {
  Representation<D> target;
  std::vector<std::size_t> ranks;
  std::vector<Vec<D>> augmentation;  // images of the generators of P_0
  std::vector<std::vector<std::vector<Vec<D>>>> differentials;
  bool terminated = false;  // some kernel vanished: the resolution is finite

  std::size_t length() const { return differentials.size(); }
  std::size_t rank(std::size_t i) const { return i < ranks.size() ? ranks[i] : 0; }
};

// Non-minimal resolution by greedy generator covers. A nonzero seed shuffles
// the candidate generator order.
template <class D>
FreeResolution<D> free_resolution(const Representation<D>& m, std::size_t length,
                                  std::uint64_t seed = 0);

// Matrix over the coefficient ring of d_i: P_i -> P_{i-1} (i >= 1) or of
// the augmentation P_0 -> M (i == 0).
template <class D>
Matrix<D> differential_matrix(const FreeResolution<D>& res, std::size_t i);

// d o d = 0 and exactness at every computed degree.
template <class D>
bool verify_resolution(const FreeResolution<D>& res, std::string* failure = nullptr);

struct HomologyGroup {
  std::size_t degree = 0;
  CokernelInvariants inv;

  bool is_zero() const { return inv.is_zero(); }
  std::size_t rank() const { return inv.free_rank; }
};

// Ext^i_A(M, N) for i = 0..max_degree from a resolution of M of length >= max_degree+1.
template <class D>
std::vector<HomologyGroup> ext_from_resolution(const FreeResolution<D>& res,
                                               const Representation<D>& n,
                                               std::size_t max_degree);
template <class D>
std::vector<HomologyGroup> ext(const Representation<D>& m, const Representation<D>& n,
                               std::size_t max_degree, std::uint64_t seed = 0);

// Tor_i^A(V, M) for V a module over opposite(A) (a right A-module).
template <class D>
std::vector<HomologyGroup> tor_from_resolution(const Representation<D>& v,
                                               const FreeResolution<D>& res,
                                               std::size_t max_degree);
template <class D>
std::vector<HomologyGroup> tor(const Representation<D>& v, const Representation<D>& m,
                               std::size_t max_degree, std::uint64_t seed = 0);

// Image of a module under F = Hom_A(P, -), together with the action of the
// basis f_t of FA on it: pairing[t] is the map X -> FX, x -> f_t . x.
template <class D>
struct FunctorImage {
  Representation<D> module;
  std::vector<Matrix<D>> pairing;
};

// A projective A-module P with B = End_A(P)^op and F = Hom_A(P, -).
// Realized either by an idempotent (P = Ae, B = eAe, F = e.-) or by an
// explicit projective module.
template <class D>
class Cover {
 public:
  static Cover from_idempotent(const AlgebraPtr<D>& a, const Vec<D>& e);
  // Throws DomainError if p is not projective.
  static Cover from_projective(const Representation<D>& p);

  const AlgebraPtr<D>& algebra() const { return a_; }
  const AlgebraPtr<D>& b() const { return b_; }
  const Representation<D>& fa() const { return fa_.module; }
  const FunctorImage<D>& fa_image() const { return fa_; }
  const std::optional<Truncation<D>>& truncation() const { return trunc_; }
  // P itself: A e, or the module given to from_projective.
  Representation<D> projective() const;

  FunctorImage<D> apply(const Representation<D>& x) const;

 private:
  AlgebraPtr<D> a_, b_;
  FunctorImage<D> fa_;
  std::optional<Truncation<D>> trunc_;
  std::optional<Representation<D>> p_;
  std::vector<Matrix<D>> endo_;     // phi_s in End_A(P)
  std::vector<Matrix<D>> fa_maps_;  // f_t : P -> A
};

// Projectivity by splitting a free cover.
template <class D>
bool is_projective(const Representation<D>& p);

template <class D>
struct UnitMap {
  SubBasis<D> hom_basis;  // Hom_B(FA, FM), maps flattened row-major
  Matrix<D> matrix;       // rank(hom_basis) x rank(M)
  MapVerdict verdict;

  bool is_mono() const { return verdict.injective; }
  bool is_split_mono() const { return verdict.split_injective; }
  bool is_epi() const { return verdict.surjective; }
  bool is_iso() const { return verdict.bijective; }
  Matrix<D> map_of(std::size_t m_index) const;  // eta(b_m) as an FM x FA matrix
  std::size_t fa_rank = 0, fm_rank = 0;
};

// eta_M : M -> Hom_B(FA, FM), eta(m)(f) = f . m.
template <class D>
UnitMap<D> adjunction_unit(const Cover<D>& cover, const Representation<D>& m);
template <class D>
UnitMap<D> adjunction_unit(const Cover<D>& cover, const Representation<D>& m,
                           const FunctorImage<D>& fm);

}  // namespace qhc
