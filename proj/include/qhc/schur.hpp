#pragma once

#include <string>
#include <vector>

#include "qhc/algebra.hpp"
#include "qhc/qh.hpp"

namespace qhc {

// One-line notation with 0-based images; (a o b)(x) = a(b(x)).
using Permutation = std::vector<int>;

std::vector<Permutation> permutations(int d);  // lexicographic
Permutation compose(const Permutation& a, const Permutation& b);
// w = s_{t_1} o ... o s_{t_r} with s_t swapping t and t+1 (0-based), r minimal
std::vector<int> reduced_word(const Permutation& w);
std::string permutation_label(const Permutation& w);

using Partition = std::vector<int>;

// Partitions of d with at most max_parts parts, lexicographically decreasing.
std::vector<Partition> partitions(int d, int max_parts);
bool dominates(const Partition& a, const Partition& b);
std::string partition_label(const Partition& p);

template <class D>
AlgebraPtr<D> symmetric_group_algebra(int d, const D& dom);

// Basis T_w in the order of permutations(d); T_w T_s = T_{ws} if w(t) < w(t+1),
// else (u - u^-1) T_w + T_{ws}.
template <class D>
AlgebraPtr<D> hecke_algebra(int d, const D& dom, const typename D::Elem& u);

template <class D>
struct TensorSpace {
  int n = 0, d = 0;
  typename D::Elem u;
  std::vector<std::vector<int>> indices;  // I(n, d) lexicographic, letters 0-based
  std::vector<Matrix<D>> generators;      // column i holds e_i T_{s_t}
  AlgebraPtr<D> hecke;
  Representation<D> module;               // over opposite(hecke): b_w acts as v -> v T_w

  std::size_t rank() const { return indices.size(); }
  std::size_t index_of(const std::vector<int>& i) const;
};

template <class D>
TensorSpace<D> tensor_space(int n, int d, const D& dom, const typename D::Elem& u);

template <class D>
struct SchurAlgebra {
  int n = 0, d = 0;
  typename D::Elem u;
  TensorSpace<D> tensor;
  AlgebraPtr<D> algebra;               // End of the tensor space, product = composition
  std::vector<std::size_t> pivots;     // flattened (row, col) position identifying each basis map
  Representation<D> tensor_module;     // V^{(x)d} as a left module
  std::vector<Partition> weights;      // chain order
  std::vector<Vec<D>> weight_idempotents;
  Vec<D> e;                            // projection onto the weight (1^d) space
  std::vector<Vec<D>> hecke_images;    // x_w in eAe with x_w(e_omega) = e_omega T_w

  Matrix<D> basis_map(std::size_t s) const { return tensor_module.action(s); }
  // coordinates of an endomorphism of the tensor space that commutes with the Hecke action
  Vec<D> coords_of(const Matrix<D>& endo) const;
};

enum class SchurMethod {
  automatic,  // orbit tables at u = 1, commutant solve otherwise
  commutant,  // always solve the commutant equations
};

template <class D>
SchurAlgebra<D> schur_algebra(int n, int d, const D& dom, const typename D::Elem& u,
                              SchurMethod method = SchurMethod::automatic);

template <class D>
HeredityChain<D> schur_heredity_chain(const SchurAlgebra<D>& s);

// F(m) = e m regarded as a module over the Hecke (group) algebra.
template <class D>
Representation<D> schur_functor_image(const SchurAlgebra<D>& s, const Representation<D>& m);

// Weight-omega vector index (1, 2, ..., d) in the tensor basis.
template <class D>
std::size_t omega_index(const SchurAlgebra<D>& s);

}  // namespace qhc
