#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhc/matrix.hpp"

namespace qhc {

template <class D>
struct RrefResult {
  Matrix<D> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix<D> kernel;  // columns span the null space
  Matrix<D> image;   // columns span the column space
};

// Reduced row echelon form. Fields only.
template <class D>
RrefResult<D> rref(const Matrix<D>& m);

template <class D>
struct SmithForm {
  std::vector<typename D::Elem> invariant_factors;  // nonzero diagonal entries, normalized
  Matrix<D> U, V;                                   // U * m * V == diagonal
  Matrix<D> diagonal;
};

template <class D>
SmithForm<D> smith_normal_form(const Matrix<D>& m);

// Valuations of the nonzero invariant factors, ascending.
template <class D>
std::vector<int> smith_valuations(const Matrix<D>& m);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<int> torsion_exponents;  // Z/(p^e) summands, e >= 1, ascending
  std::uint32_t p = 0;

  bool is_zero() const { return free_rank == 0 && torsion_exponents.empty(); }
  std::vector<std::string> torsion_strings() const;
  bool operator==(const CokernelInvariants& o) const {
    return free_rank == o.free_rank && torsion_exponents == o.torsion_exponents;
  }
};

// Cokernel of m viewed as a map R^cols -> R^rows.
template <class D>
CokernelInvariants cokernel_invariants(const Matrix<D>& m);

template <class D>
std::size_t rank(const Matrix<D>& m);

// Basis of a saturated submodule of R^n, stored in unit-pivot reduced echelon form:
// rows(i, pivots[i]) == 1 and rows(j, pivots[i]) == 0 for j != i.
template <class D>
struct SubBasis {
  Matrix<D> rows;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return rows.rows(); }
  std::size_t ambient() const { return rows.cols(); }
  // coordinates of a vector known to lie in the span
  Vec<D> coords(const Vec<D>& v) const;
  Vec<D> reduce(const Vec<D>& v) const;  // v minus its pivot combination
  bool contains(const Vec<D>& v) const;
  Vec<D> vector(std::size_t i) const { return rows.row(i); }
  Vec<D> combine(const Vec<D>& c) const;  // sum c_i rows_i
  std::vector<std::size_t> complement() const;
};

// Unit-pivot echelon form of the row span; nullopt if the span is not saturated.
template <class D>
std::optional<SubBasis<D>> unit_echelon(const Matrix<D>& rows);

// Basis of (fraction-field span of rows) ∩ R^n.
template <class D>
SubBasis<D> saturation(const Matrix<D>& rows, std::size_t ambient);

// Null space of m as a saturated submodule (vectors in R^cols).
template <class D>
SubBasis<D> kernel_basis(const Matrix<D>& m);

// x with m x = b, if one exists with entries in R. When m has full column rank
// the solution is unique.
template <class D>
std::optional<Vec<D>> solve(const Matrix<D>& m, const Vec<D>& b);

struct MapVerdict {
  bool injective = false;
  bool split_injective = false;
  bool surjective = false;
  bool bijective = false;
};

// m viewed as a map of free modules R^cols -> R^rows.
template <class D>
MapVerdict map_verdict(const Matrix<D>& m);

// Incrementally built R-submodule of R^n (not necessarily saturated).
template <class D>
class Lattice {
 public:
  Lattice() = default;
  Lattice(const D& dom, std::size_t n) : dom_(dom), n_(n), pivot_row_(n, -1) {}

  bool insert(Vec<D> v);
  bool contains(Vec<D> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec<D>>& rows() const { return rows_; }
  Matrix<D> basis() const { return Matrix<D>::from_rows(dom_, rows_, n_); }
  bool is_full() const;  // equals R^n

 private:
  D dom_{};
  std::size_t n_ = 0;
  std::vector<Vec<D>> rows_;
  std::vector<long> pivot_row_;
};

Matrix<Rationals> to_rationals(const Matrix<LocalIntegers>& m);
Matrix<PrimeField> reduce_mod_p(const Matrix<LocalIntegers>& m);
Vec<PrimeField> reduce_mod_p(const LocalIntegers& dom, const Vec<LocalIntegers>& v);

// Scale a nonzero vector over Z_(p) by a power of p so that its minimum valuation is 0.
Vec<LocalIntegers> make_primitive(const LocalIntegers& dom, Vec<LocalIntegers> v);

}  // namespace qhc
