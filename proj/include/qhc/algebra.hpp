#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qhc/linalg.hpp"

namespace qhc {

// Finite-rank associative algebra given by structure constants
// b_i * b_j = sum_k c_{ij}^k b_k.
template <class D>
class Algebra {
 public:
  using Elem = typename D::Elem;
  struct Entry {
    std::uint32_t j, k;
    Elem c;
  };

  Algebra(const D& dom, std::vector<std::string> labels, Vec<D> unit,
          std::vector<std::vector<Entry>> table);
  Algebra(const Algebra& o)
      : dom_(o.dom_), labels_(o.labels_), unit_(o.unit_), table_(o.table_) {}

  const D& domain() const { return dom_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<D>& unit() const { return unit_; }
  // entries of b_i * (-), sorted by (j, k)
  const std::vector<Entry>& row(std::size_t i) const { return table_[i]; }
  std::size_t nnz() const;

  Vec<D> basis_vector(std::size_t i) const;
  Vec<D> basis_product(std::size_t i, std::size_t j) const;
  Vec<D> mul(const Vec<D>& x, const Vec<D>& y) const;
  Matrix<D> left_mult(const Vec<D>& a) const;   // x -> a x
  Matrix<D> right_mult(const Vec<D>& a) const;  // x -> x a

  bool operator==(const Algebra& o) const;

  // Basis indices generating the algebra over its coefficient ring; cached.
  const std::vector<std::size_t>& generators() const;

 private:
  D dom_;
  std::vector<std::string> labels_;
  Vec<D> unit_;
  std::vector<std::vector<Entry>> table_;
  mutable std::once_flag gens_once_;
  mutable std::vector<std::size_t> gens_;
};

template <class D>
using AlgebraPtr = std::shared_ptr<const Algebra<D>>;

// Quadruple (i, j, k, c) input; duplicates are summed, zeros dropped.
template <class D>
struct StructureConstant {
  std::uint32_t i, j, k;
  typename D::Elem c;
};

template <class D>
AlgebraPtr<D> make_algebra(const D& dom, std::vector<std::string> labels, Vec<D> unit,
                           const std::vector<StructureConstant<D>>& quads);

template <class D>
AlgebraPtr<D> opposite(const Algebra<D>& a);

struct AlgebraCheck {
  bool associative = true;
  bool unital = true;
  std::string failure;
  bool ok() const { return associative && unital; }
};

template <class D>
AlgebraCheck check_algebra(const Algebra<D>& a);

AlgebraPtr<PrimeField> reduce_mod_p(const Algebra<LocalIntegers>& a);

template <class D>
bool same_algebra(const AlgebraPtr<D>& a, const AlgebraPtr<D>& b) {
  return a == b || (a && b && *a == *b);
}

// Finitely generated module given by one action matrix per basis element of
// the algebra. The regular module is stored implicitly and its matrices are
// produced from the structure constants on demand.
template <class D>
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr<D> alg, std::size_t rank, std::vector<Matrix<D>> action);
  static Representation regular(AlgebraPtr<D> alg);

  const AlgebraPtr<D>& algebra() const { return alg_; }
  const D& domain() const { return alg_->domain(); }
  std::size_t rank() const { return rank_; }
  bool is_regular() const { return regular_; }

  Matrix<D> action(std::size_t i) const;
  Matrix<D> act(const Vec<D>& a) const;                     // rho(a)
  Vec<D> apply(const Vec<D>& a, const Vec<D>& x) const;     // a . x
  Vec<D> apply_basis(std::size_t i, const Vec<D>& x) const;  // b_i . x

  // Same module regarded over an algebra with an identical table.
  Representation rebind(AlgebraPtr<D> alg) const;

 private:
  AlgebraPtr<D> alg_;
  std::size_t rank_ = 0;
  std::vector<Matrix<D>> action_;
  bool regular_ = false;
};

template <class D>
bool check_representation(const Representation<D>& m, std::string* failure = nullptr);

// Intertwiner; source/target are tracked by the caller.
template <class D>
struct ModuleMap {
  Matrix<D> matrix;  // target rank x source rank
  MapVerdict verdict() const { return map_verdict(matrix); }
};

template <class D>
bool is_intertwiner(const Representation<D>& m, const Representation<D>& n, const Matrix<D>& f);

// Hom_A(m, n) as a saturated submodule of R^{rank(n)*rank(m)}, maps flattened row-major.
template <class D>
SubBasis<D> hom_lattice(const Representation<D>& m, const Representation<D>& n);

// Basis of Hom_A(m, n); over Z_(p) a basis of the (free, saturated) Hom lattice.
template <class D>
std::vector<Matrix<D>> hom_space(const Representation<D>& m, const Representation<D>& n);

template <class D>
std::size_t hom_rank(const Representation<D>& m, const Representation<D>& n) {
  return hom_space(m, n).size();
}

template <class D>
struct EndomorphismAlgebra {
  AlgebraPtr<D> algebra;          // product is composition: b_s b_t = phi_s o phi_t
  std::vector<Matrix<D>> maps;    // phi_s
};

template <class D>
EndomorphismAlgebra<D> endomorphism_algebra(const Representation<D>& m);

// Left A-module structure on a saturated submodule of a module, in the given basis.
template <class D>
Representation<D> submodule_representation(const Representation<D>& m, const SubBasis<D>& s);

template <class D>
struct SplitSubmodule {
  Representation<D> sub;
  Representation<D> quotient;
  Matrix<D> inclusion;   // rank(m) x rank(sub)
  Matrix<D> projection;  // rank(quotient) x rank(m)
  SubBasis<D> basis;     // of the submodule inside m
};

// Sub and quotient of m by the submodule spanned by the given vectors
// (assumed A-stable). nullopt when the span is not saturated, i.e. the
// quotient is not free.
template <class D>
std::optional<SplitSubmodule<D>> split_submodule(const Representation<D>& m,
                                                 const std::vector<Vec<D>>& span);

// R-submodule generated as an A-module by the given vectors.
template <class D>
Lattice<D> generated_submodule(const Representation<D>& m, const std::vector<Vec<D>>& gens);

// Left ideal A*S (S a set of algebra elements) as a lattice in A.
template <class D>
Lattice<D> left_ideal(const Algebra<D>& a, const std::vector<Vec<D>>& gens);
template <class D>
Lattice<D> two_sided_ideal(const Algebra<D>& a, const std::vector<Vec<D>>& gens);

// The left module A*e for an element e with saturated span (e.g. an idempotent).
template <class D>
struct LeftIdealModule {
  SubBasis<D> basis;  // vectors in A
  Representation<D> module;
};
template <class D>
LeftIdealModule<D> left_ideal_module(const AlgebraPtr<D>& a, const Vec<D>& e);

template <class D>
struct Truncation {
  AlgebraPtr<D> algebra;  // eAe with unit e
  Vec<D> e;
  SubBasis<D> basis;      // basis of eAe inside A
  Representation<D> eA;   // eA as a left eAe-module
  SubBasis<D> eA_basis;   // basis of eA inside A

  // e*M as an eAe-module, with its basis inside M.
  Representation<D> apply(const Representation<D>& m, SubBasis<D>* image = nullptr) const;
};

template <class D>
Truncation<D> idempotent_truncation(const AlgebraPtr<D>& a, const Vec<D>& e);

template <class D>
Representation<D> dual_module(const Representation<D>& m, AlgebraPtr<D> opposite_alg = nullptr);

template <class D>
struct TensorProduct {
  CokernelInvariants structure;
  Matrix<D> relations;             // columns span the relation lattice in R^{rv*rm}
  std::optional<SubBasis<D>> relation_basis;  // when the quotient is free
  std::vector<std::size_t> quotient_coords;   // free quotient basis positions
  std::optional<Representation<D>> module;    // induced module over the acting algebra
  std::size_t rv = 0, rm = 0;

  bool is_free() const { return structure.torsion_exponents.empty(); }
  std::size_t rank() const { return structure.free_rank; }
  // class of v_t (x) x in the free quotient
  Vec<D> class_of(std::size_t t, const Vec<D>& x) const;
};

// V (x)_A M for V a right A-module (a module over opposite(A)) and M a left
// A-module. If `acting` is given together with the left action of its basis
// on V (commuting with A), the induced module over `acting` is returned.
template <class D>
TensorProduct<D> tensor_over_algebra(const Representation<D>& v, const Representation<D>& m,
                                     const AlgebraPtr<D>& acting = nullptr,
                                     const std::vector<Matrix<D>>* acting_on_v = nullptr);

// Jacobson radical over a field, computed in a faithful representation
// (default: the regular one).
template <class D>
SubBasis<D> radical(const Algebra<D>& a, const Representation<D>* faithful = nullptr);

template <class D>
bool is_nilpotent_ideal(const Algebra<D>& a, const SubBasis<D>& ideal);

// Quotient algebra by a two-sided ideal given as a saturated basis.
template <class D>
AlgebraPtr<D> quotient_algebra(const Algebra<D>& a, const SubBasis<D>& ideal);

// Generators of an ideal as a left ideal.
template <class D>
std::vector<Vec<D>> left_ideal_generators(const Algebra<D>& a, const SubBasis<D>& ideal);

// Annihilator of the radical in m, given left-ideal generators of the radical.
template <class D>
SubBasis<D> socle(const Representation<D>& m, const std::vector<Vec<D>>& radical_gens);

// rad(A) * M as a subspace of m.
template <class D>
Lattice<D> radical_submodule(const Representation<D>& m, const std::vector<Vec<D>>& radical_gens);

Representation<PrimeField> reduce_mod_p(const Representation<LocalIntegers>& m,
                                        AlgebraPtr<PrimeField> reduced);

}  // namespace qhc
