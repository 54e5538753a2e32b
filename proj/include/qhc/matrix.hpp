#pragma once

#include <cstddef>
#include <vector>

#include "qhc/domain.hpp"

namespace qhc {

template <class D>
using Vec = std::vector<typename D::Elem>;

// Dense row-major matrix over one coefficient domain.
template <class D>
class Matrix {
 public:
  using Elem = typename D::Elem;

  Matrix() = default;
  Matrix(const D& dom, std::size_t rows, std::size_t cols)
      : dom_(dom), rows_(rows), cols_(cols), data_(rows * cols, dom.zero()) {}

  static Matrix identity(const D& dom, std::size_t n) {
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }
  // rows given as vectors of equal length `cols`
  static Matrix from_rows(const D& dom, const std::vector<Vec<D>>& rows, std::size_t cols) {
    Matrix m(dom, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }
  static Matrix from_columns(const D& dom, const std::vector<Vec<D>>& cols, std::size_t rows) {
    Matrix m(dom, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  const D& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  Vec<D> row(std::size_t i) const { return Vec<D>(row_ptr(i), row_ptr(i) + cols_); }
  Vec<D> column(std::size_t j) const {
    Vec<D> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(std::size_t i, const Vec<D>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_column(std::size_t j, const Vec<D>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!dom_.is_zero(x)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix r(dom_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Elem* out = r.row_ptr(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (dom_.is_zero(a)) continue;
        const Elem* b = o.row_ptr(k);
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!dom_.is_zero(b[j])) out[j] = dom_.add(out[j], dom_.mul(a, b[j]));
      }
    }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in sum");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = dom_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("matrix shape mismatch in difference");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = dom_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix scaled(const Elem& c) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = dom_.mul(c, x);
    return r;
  }
  // this += c * o
  void add_scaled(const Elem& c, const Matrix& o) {
    if (dom_.is_zero(c)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!dom_.is_zero(o.data_[i])) data_[i] = dom_.add(data_[i], dom_.mul(c, o.data_[i]));
  }

  Vec<D> apply(const Vec<D>& v) const {
    Vec<D> out(rows_, dom_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      const Elem* r = row_ptr(i);
      Elem acc = dom_.zero();
      for (std::size_t j = 0; j < cols_; ++j)
        if (!dom_.is_zero(r[j]) && !dom_.is_zero(v[j])) acc = dom_.add(acc, dom_.mul(r[j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  // flatten row-major into a single vector
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

 private:
  D dom_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class D>
Vec<D> zero_vec(const D& dom, std::size_t n) {
  return Vec<D>(n, dom.zero());
}

template <class D>
bool vec_is_zero(const D& dom, const Vec<D>& v) {
  for (const auto& x : v)
    if (!dom.is_zero(x)) return false;
  return true;
}

// y += c * x
template <class D>
void axpy(const D& dom, const typename D::Elem& c, const Vec<D>& x, Vec<D>& y) {
  if (dom.is_zero(c)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!dom.is_zero(x[i])) y[i] = dom.add(y[i], dom.mul(c, x[i]));
}

}  // namespace qhc
