#include "qhc/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <type_traits>

namespace qhc {

template <class D>
Algebra<D>::Algebra(const D& dom, std::vector<std::string> labels, Vec<D> unit,
                    std::vector<std::vector<Entry>> table)
    : dom_(dom), labels_(std::move(labels)), unit_(std::move(unit)), table_(std::move(table)) {
  if (unit_.size() != labels_.size() || table_.size() != labels_.size())
    throw DomainError("algebra data has inconsistent rank");
  for (auto& row : table_)
    std::sort(row.begin(), row.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.j, a.k) < std::tie(b.j, b.k); });
}

template <class D>
std::size_t Algebra<D>::nnz() const {
  std::size_t n = 0;
  for (const auto& r : table_) n += r.size();
  return n;
}

template <class D>
Vec<D> Algebra<D>::basis_vector(std::size_t i) const {
  Vec<D> v(rank(), dom_.zero());
  v[i] = dom_.one();
  return v;
}

template <class D>
Vec<D> Algebra<D>::basis_product(std::size_t i, std::size_t j) const {
  Vec<D> v(rank(), dom_.zero());
  const auto& row = table_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, std::size_t jj) { return e.j < jj; });
  for (; it != row.end() && it->j == j; ++it) v[it->k] = dom_.add(v[it->k], it->c);
  return v;
}

template <class D>
Vec<D> Algebra<D>::mul(const Vec<D>& x, const Vec<D>& y) const {
  Vec<D> z(rank(), dom_.zero());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (dom_.is_zero(x[i])) continue;
    for (const auto& e : table_[i]) {
      if (dom_.is_zero(y[e.j])) continue;
      z[e.k] = dom_.add(z[e.k], dom_.mul(x[i], dom_.mul(y[e.j], e.c)));
    }
  }
  return z;
}

template <class D>
Matrix<D> Algebra<D>::left_mult(const Vec<D>& a) const {
  Matrix<D> m(dom_, rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (dom_.is_zero(a[i])) continue;
    for (const auto& e : table_[i]) m(e.k, e.j) = dom_.add(m(e.k, e.j), dom_.mul(a[i], e.c));
  }
  return m;
}

template <class D>
Matrix<D> Algebra<D>::right_mult(const Vec<D>& a) const {
  Matrix<D> m(dom_, rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (const auto& e : table_[i]) {
      if (dom_.is_zero(a[e.j])) continue;
      m(e.k, i) = dom_.add(m(e.k, i), dom_.mul(a[e.j], e.c));
    }
  return m;
}

template <class D>
bool Algebra<D>::operator==(const Algebra& o) const {
  if (!(dom_ == o.dom_) || rank() != o.rank() || unit_ != o.unit_) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto& a = table_[i];
    const auto& b = o.table_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t].j != b[t].j || a[t].k != b[t].k || a[t].c != b[t].c) return false;
  }
  return true;
}

namespace {

// Greedy choice of basis elements whose generated subalgebra is everything.
template <class D>
std::vector<std::size_t> greedy_generators(const Algebra<D>& a) {
  const D& dom = a.domain();
  const std::size_t n = a.rank();
  Lattice<D> lat(dom, n);
  std::vector<Vec<D>> spanning;  // inserted vectors, closed under right mult by gens
  std::vector<std::size_t> gens;
  std::deque<std::pair<std::size_t, std::size_t>> work;  // (vector index, first gen to apply)

  auto add_vector = [&](const Vec<D>& v) {
    if (lat.insert(v)) {
      spanning.push_back(v);
      work.emplace_back(spanning.size() - 1, 0);
    }
  };
  auto close = [&]() {
    while (!work.empty()) {
      auto [vi, g0] = work.front();
      work.pop_front();
      const Vec<D> v = spanning[vi];
      for (std::size_t g = g0; g < gens.size(); ++g) {
        Vec<D> w(n, dom.zero());
        for (std::size_t i = 0; i < n; ++i) {
          if (dom.is_zero(v[i])) continue;
          auto prod = a.basis_product(i, gens[g]);
          axpy(dom, v[i], prod, w);
        }
        add_vector(w);
      }
    }
  };
  add_vector(a.unit());
  close();
  for (std::size_t j = 0; j < n && !lat.is_full(); ++j) {
    auto bj = a.basis_vector(j);
    if (lat.contains(bj)) continue;
    gens.push_back(j);
    // old vectors only need the new generator; close() handles the rest
    const std::size_t old = spanning.size();
    for (std::size_t vi = 0; vi < old; ++vi) work.emplace_back(vi, gens.size() - 1);
    close();
  }
  return gens;
}

}  // namespace

template <class D>
const std::vector<std::size_t>& Algebra<D>::generators() const {
  std::call_once(gens_once_, [this] {
    if constexpr (std::is_same_v<D, LocalIntegers>) {
      // generation over a local ring is detected on the residue field
      gens_ = reduce_mod_p(*this)->generators();
    } else {
      gens_ = greedy_generators(*this);
    }
  });
  return gens_;
}

template <class D>
AlgebraPtr<D> make_algebra(const D& dom, std::vector<std::string> labels, Vec<D> unit,
                           const std::vector<StructureConstant<D>>& quads) {
  const std::size_t n = labels.size();
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, typename D::Elem> acc;
  for (const auto& q : quads) {
    if (q.i >= n || q.j >= n || q.k >= n) throw DomainError("structure constant index out of range");
    auto key = std::make_tuple(q.i, q.j, q.k);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, q.c);
    else
      it->second = dom.add(it->second, q.c);
  }
  std::vector<std::vector<typename Algebra<D>::Entry>> table(n);
  for (const auto& [key, c] : acc) {
    if (dom.is_zero(c)) continue;
    table[std::get<0>(key)].push_back({std::get<1>(key), std::get<2>(key), c});
  }
  return std::make_shared<const Algebra<D>>(dom, std::move(labels), std::move(unit),
                                            std::move(table));
}

template <class D>
AlgebraPtr<D> opposite(const Algebra<D>& a) {
  std::vector<std::vector<typename Algebra<D>::Entry>> table(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (const auto& e : a.row(i))
      table[e.j].push_back({static_cast<std::uint32_t>(i), e.k, e.c});
  return std::make_shared<const Algebra<D>>(a.domain(), a.labels(), a.unit(), std::move(table));
}

template <class D>
AlgebraCheck check_algebra(const Algebra<D>& a) {
  AlgebraCheck res;
  const D& dom = a.domain();
  const std::size_t n = a.rank();
  for (std::size_t j = 0; j < n && res.unital; ++j) {
    auto bj = a.basis_vector(j);
    if (a.mul(a.unit(), bj) != bj || a.mul(bj, a.unit()) != bj) {
      res.unital = false;
      res.failure = "unit law fails at " + a.labels()[j];
    }
  }
  // (b_i b_j) b_k against b_i (b_j b_k), all k at once per (i, j)
  std::vector<typename D::Elem> lhs(n * n, dom.zero()), rhs(n * n, dom.zero());
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n && res.associative; ++i)
    for (std::size_t j = 0; j < n && res.associative; ++j) {
      touched.clear();
      auto x = a.basis_product(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        if (dom.is_zero(x[m])) continue;
        for (const auto& e : a.row(m)) {
          std::size_t idx = e.j * n + e.k;
          lhs[idx] = dom.add(lhs[idx], dom.mul(x[m], e.c));
          touched.push_back(idx);
        }
      }
      // b_j b_k = sum_m c b_m, then b_i b_m
      for (const auto& e : a.row(j)) {
        auto prod = a.basis_product(i, e.k);
        for (std::size_t o = 0; o < n; ++o) {
          if (dom.is_zero(prod[o])) continue;
          std::size_t idx = e.j * n + o;
          rhs[idx] = dom.add(rhs[idx], dom.mul(e.c, prod[o]));
          touched.push_back(idx);
        }
      }
      for (auto idx : touched) {
        if (lhs[idx] != rhs[idx] && res.associative) {
          res.associative = false;
          res.failure = "associativity fails at (" + a.labels()[i] + ", " + a.labels()[j] + ", " +
                        a.labels()[idx / n] + ")";
        }
      }
      for (auto idx : touched) {
        lhs[idx] = dom.zero();
        rhs[idx] = dom.zero();
      }
    }
  return res;
}

AlgebraPtr<PrimeField> reduce_mod_p(const Algebra<LocalIntegers>& a) {
  PrimeField f(a.domain().p);
  std::vector<std::vector<Algebra<PrimeField>::Entry>> table(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (const auto& e : a.row(i)) {
      auto c = f.from_rational(e.c);
      if (c != 0) table[i].push_back({e.j, e.k, c});
    }
  return std::make_shared<const Algebra<PrimeField>>(f, a.labels(),
                                                     reduce_mod_p(a.domain(), a.unit()),
                                                     std::move(table));
}

template <class D>
Representation<D>::Representation(AlgebraPtr<D> alg, std::size_t rank,
                                   std::vector<Matrix<D>> action)
    : alg_(std::move(alg)), rank_(rank), action_(std::move(action)) {
  if (action_.size() != alg_->rank()) throw DomainError("representation needs one matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != rank_ || m.cols() != rank_) throw DomainError("action matrix has the wrong shape");
}

template <class D>
Representation<D> Representation<D>::regular(AlgebraPtr<D> alg) {
  Representation r;
  r.rank_ = alg->rank();
  r.alg_ = std::move(alg);
  r.regular_ = true;
  return r;
}

template <class D>
Matrix<D> Representation<D>::action(std::size_t i) const {
  if (!regular_) return action_[i];
  Matrix<D> m(alg_->domain(), rank_, rank_);
  const D& dom = alg_->domain();
  for (const auto& e : alg_->row(i)) m(e.k, e.j) = dom.add(m(e.k, e.j), e.c);
  return m;
}

template <class D>
Matrix<D> Representation<D>::act(const Vec<D>& a) const {
  if (regular_) return alg_->left_mult(a);
  const D& dom = alg_->domain();
  Matrix<D> m(dom, rank_, rank_);
  for (std::size_t i = 0; i < a.size(); ++i) m.add_scaled(a[i], action_[i]);
  return m;
}

template <class D>
Vec<D> Representation<D>::apply(const Vec<D>& a, const Vec<D>& x) const {
  if (regular_) return alg_->mul(a, x);
  const D& dom = alg_->domain();
  Vec<D> out(rank_, dom.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (dom.is_zero(a[i])) continue;
    axpy(dom, a[i], action_[i].apply(x), out);
  }
  return out;
}

template <class D>
Vec<D> Representation<D>::apply_basis(std::size_t i, const Vec<D>& x) const {
  if (regular_) return alg_->mul(alg_->basis_vector(i), x);
  return action_[i].apply(x);
}

template <class D>
Representation<D> Representation<D>::rebind(AlgebraPtr<D> alg) const {
  if (!same_algebra(alg_, alg)) throw DomainError("cannot rebind to a different algebra");
  Representation r = *this;
  r.alg_ = std::move(alg);
  return r;
}

template <class D>
bool check_representation(const Representation<D>& m, std::string* failure) {
  const auto& a = *m.algebra();
  const D& dom = a.domain();
  if (m.act(a.unit()) != Matrix<D>::identity(dom, m.rank())) {
    if (failure) *failure = "unit does not act as the identity";
    return false;
  }
  std::vector<Matrix<D>> acts;
  for (std::size_t i = 0; i < a.rank(); ++i) acts.push_back(m.action(i));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) {
      Matrix<D> expect(dom, m.rank(), m.rank());
      auto prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < a.rank(); ++k) expect.add_scaled(prod[k], acts[k]);
      if (acts[i] * acts[j] != expect) {
        if (failure) *failure = "action is not multiplicative at (" + a.labels()[i] + ", " + a.labels()[j] + ")";
        return false;
      }
    }
  return true;
}

template <class D>
bool is_intertwiner(const Representation<D>& m, const Representation<D>& n, const Matrix<D>& f) {
  const auto& gens = m.algebra()->generators();
  for (auto g : gens)
    if (f * m.action(g) != n.action(g) * f) return false;
  return true;
}

namespace {

template <class D>
Matrix<D> reshape(const Vec<D>& v, const D& dom, std::size_t rows, std::size_t cols) {
  Matrix<D> m(dom, rows, cols);
  m.data() = v;
  return m;
}

}  // namespace

template <class D>
SubBasis<D> hom_lattice(const Representation<D>& m, const Representation<D>& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw DomainError("hom_space: algebra mismatch");
  const D& dom = m.domain();
  const std::size_t rm = m.rank(), rn = n.rank(), nv = rm * rn;
  // current solution space, columns of `basis` (nv x k)
  std::optional<SubBasis<D>> sol;
  for (auto g : m.algebra()->generators()) {
    auto am = m.action(g);
    auto an = n.action(g);
    // equations X am - an X = 0 for X in the span of the current solutions
    std::size_t k = sol ? sol->dim() : nv;
    Matrix<D> eq(dom, nv, k);
    for (std::size_t col = 0; col < k; ++col) {
      Matrix<D> x = sol ? reshape(sol->vector(col), dom, rn, rm) : Matrix<D>(dom, rn, rm);
      if (!sol) x(col / rm, col % rm) = dom.one();
      auto r = x * am - an * x;
      for (std::size_t t = 0; t < nv; ++t) eq(t, col) = r.data()[t];
    }
    auto ker = kernel_basis(eq);
    std::vector<Vec<D>> vecs;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      auto c = ker.vector(i);
      if (sol)
        vecs.push_back(sol->combine(c));
      else
        vecs.push_back(c);
    }
    auto mat = Matrix<D>::from_rows(dom, vecs, nv);
    if (vecs.empty()) mat = Matrix<D>(dom, 0, nv);
    auto next = unit_echelon(mat);
    if (!next) throw DomainError("hom_space: solution lattice not saturated");
    sol = std::move(*next);
    if (sol->dim() == 0) break;
  }
  if (!sol) {
    // algebra generated by nothing: the base ring itself
    auto s = unit_echelon(Matrix<D>::identity(dom, nv));
    sol = std::move(*s);
  }
  return *sol;
}

template <class D>
std::vector<Matrix<D>> hom_space(const Representation<D>& m, const Representation<D>& n) {
  auto basis = hom_lattice(m, n);
  std::vector<Matrix<D>> out;
  for (std::size_t i = 0; i < basis.dim(); ++i)
    out.push_back(reshape(basis.vector(i), m.domain(), n.rank(), m.rank()));
  return out;
}

template <class D>
EndomorphismAlgebra<D> endomorphism_algebra(const Representation<D>& m) {
  const D& dom = m.domain();
  auto basis = hom_lattice(m, m);
  EndomorphismAlgebra<D> res;
  const std::size_t k = basis.dim();
  for (std::size_t i = 0; i < k; ++i)
    res.maps.push_back(reshape(basis.vector(i), dom, m.rank(), m.rank()));
  std::vector<StructureConstant<D>> quads;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      auto prod = res.maps[s] * res.maps[t];
      auto c = basis.coords(prod.data());
      for (std::size_t u = 0; u < k; ++u)
        if (!dom.is_zero(c[u]))
          quads.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                           static_cast<std::uint32_t>(u), c[u]});
    }
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < k; ++s) labels.push_back("phi" + std::to_string(s));
  auto unit = basis.coords(Matrix<D>::identity(dom, m.rank()).data());
  res.algebra = make_algebra(dom, std::move(labels), std::move(unit), quads);
  return res;
}

template <class D>
Representation<D> submodule_representation(const Representation<D>& m, const SubBasis<D>& s) {
  const auto& a = *m.algebra();
  const D& dom = a.domain();
  std::vector<Matrix<D>> acts;
  acts.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Matrix<D> mat(dom, s.dim(), s.dim());
    if (m.is_regular()) {
      for (std::size_t t = 0; t < s.dim(); ++t) {
        auto img = a.mul(a.basis_vector(i), s.vector(t));
        mat.set_column(t, s.coords(img));
      }
    } else {
      auto act = m.action(i);
      for (std::size_t t = 0; t < s.dim(); ++t) mat.set_column(t, s.coords(act.apply(s.vector(t))));
    }
    acts.push_back(std::move(mat));
  }
  return Representation<D>(m.algebra(), s.dim(), std::move(acts));
}

template <class D>
std::optional<SplitSubmodule<D>> split_submodule(const Representation<D>& m,
                                                 const std::vector<Vec<D>>& span) {
  const D& dom = m.domain();
  auto mat = span.empty() ? Matrix<D>(dom, 0, m.rank()) : Matrix<D>::from_rows(dom, span, m.rank());
  auto sb = unit_echelon(mat);
  if (!sb) return std::nullopt;
  SplitSubmodule<D> res;
  res.basis = *sb;
  res.sub = submodule_representation(m, res.basis);
  res.inclusion = res.basis.rows.transpose();
  auto q = res.basis.complement();
  const std::size_t rq = q.size();
  res.projection = Matrix<D>(dom, rq, m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j) {
    Vec<D> e(m.rank(), dom.zero());
    e[j] = dom.one();
    auto r = res.basis.reduce(e);
    for (std::size_t t = 0; t < rq; ++t) res.projection(t, j) = r[q[t]];
  }
  const auto& a = *m.algebra();
  std::vector<Matrix<D>> acts;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Matrix<D> qa(dom, rq, rq);
    for (std::size_t t = 0; t < rq; ++t) {
      Vec<D> e(m.rank(), dom.zero());
      e[q[t]] = dom.one();
      auto img = res.basis.reduce(m.apply_basis(i, e));
      for (std::size_t u = 0; u < rq; ++u) qa(u, t) = img[q[u]];
    }
    acts.push_back(std::move(qa));
  }
  res.quotient = Representation<D>(m.algebra(), rq, std::move(acts));
  return res;
}

template <class D>
Lattice<D> generated_submodule(const Representation<D>& m, const std::vector<Vec<D>>& gens) {
  const D& dom = m.domain();
  Lattice<D> lat(dom, m.rank());
  std::vector<Matrix<D>> acts;
  const auto& g = m.algebra()->generators();
  for (auto i : g) acts.push_back(m.action(i));
  std::deque<Vec<D>> work;
  for (const auto& v : gens)
    if (lat.insert(v)) work.push_back(v);
  while (!work.empty()) {
    auto v = std::move(work.front());
    work.pop_front();
    for (const auto& a : acts) {
      auto w = a.apply(v);
      if (lat.insert(w)) work.push_back(std::move(w));
    }
  }
  return lat;
}

template <class D>
Lattice<D> left_ideal(const Algebra<D>& a, const std::vector<Vec<D>>& gens) {
  Lattice<D> lat(a.domain(), a.rank());
  std::deque<Vec<D>> work;
  for (const auto& v : gens)
    if (lat.insert(v)) work.push_back(v);
  const auto& g = a.generators();
  while (!work.empty()) {
    auto v = std::move(work.front());
    work.pop_front();
    for (auto i : g) {
      auto w = a.mul(a.basis_vector(i), v);
      if (lat.insert(w)) work.push_back(std::move(w));
    }
  }
  return lat;
}

template <class D>
Lattice<D> two_sided_ideal(const Algebra<D>& a, const std::vector<Vec<D>>& gens) {
  Lattice<D> lat(a.domain(), a.rank());
  std::deque<Vec<D>> work;
  for (const auto& v : gens)
    if (lat.insert(v)) work.push_back(v);
  const auto& g = a.generators();
  while (!work.empty()) {
    auto v = std::move(work.front());
    work.pop_front();
    for (auto i : g) {
      auto bi = a.basis_vector(i);
      auto w = a.mul(bi, v);
      if (lat.insert(w)) work.push_back(std::move(w));
      w = a.mul(v, bi);
      if (lat.insert(w)) work.push_back(std::move(w));
    }
  }
  return lat;
}

template <class D>
LeftIdealModule<D> left_ideal_module(const AlgebraPtr<D>& a, const Vec<D>& e) {
  auto r = a->right_mult(e);  // columns b_i e
  auto sb = unit_echelon(r.transpose());
  if (!sb) throw DomainError("left ideal A*e is not a direct summand");
  LeftIdealModule<D> res;
  res.basis = *sb;
  res.module = submodule_representation(Representation<D>::regular(a), res.basis);
  return res;
}

template <class D>
Representation<D> Truncation<D>::apply(const Representation<D>& m, SubBasis<D>* image) const {
  const D& dom = m.domain();
  auto pe = m.act(e);
  auto sb = unit_echelon(pe.transpose());
  if (!sb) throw DomainError("truncation image is not a direct summand");
  std::vector<Matrix<D>> acts;
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    auto act = m.act(basis.vector(s));
    Matrix<D> mat(dom, sb->dim(), sb->dim());
    for (std::size_t t = 0; t < sb->dim(); ++t) mat.set_column(t, sb->coords(act.apply(sb->vector(t))));
    acts.push_back(std::move(mat));
  }
  if (image) *image = *sb;
  return Representation<D>(algebra, sb->dim(), std::move(acts));
}

template <class D>
Truncation<D> idempotent_truncation(const AlgebraPtr<D>& a, const Vec<D>& e) {
  const D& dom = a->domain();
  if (a->mul(e, e) != e) throw DomainError("idempotent_truncation: element is not idempotent");
  Truncation<D> t;
  t.e = e;
  auto l = a->left_mult(e);
  auto ere = l * a->right_mult(e);
  auto sb = unit_echelon(ere.transpose());
  if (!sb) throw DomainError("eAe is not a direct summand");
  t.basis = *sb;
  const std::size_t k = t.basis.dim();
  std::vector<StructureConstant<D>> quads;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t u = 0; u < k; ++u) {
      auto c = t.basis.coords(a->mul(t.basis.vector(s), t.basis.vector(u)));
      for (std::size_t w = 0; w < k; ++w)
        if (!dom.is_zero(c[w]))
          quads.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(u),
                           static_cast<std::uint32_t>(w), c[w]});
    }
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < k; ++s) labels.push_back("e" + a->labels()[t.basis.pivots[s]] + "e");
  t.algebra = make_algebra(dom, std::move(labels), t.basis.coords(e), quads);
  auto eab = unit_echelon(l.transpose());
  if (!eab) throw DomainError("eA is not a direct summand");
  t.eA_basis = *eab;
  std::vector<Matrix<D>> acts;
  for (std::size_t s = 0; s < k; ++s) {
    Matrix<D> mat(dom, t.eA_basis.dim(), t.eA_basis.dim());
    for (std::size_t u = 0; u < t.eA_basis.dim(); ++u)
      mat.set_column(u, t.eA_basis.coords(a->mul(t.basis.vector(s), t.eA_basis.vector(u))));
    acts.push_back(std::move(mat));
  }
  t.eA = Representation<D>(t.algebra, t.eA_basis.dim(), std::move(acts));
  return t;
}

template <class D>
Representation<D> dual_module(const Representation<D>& m, AlgebraPtr<D> opposite_alg) {
  if (!opposite_alg) opposite_alg = opposite(*m.algebra());
  std::vector<Matrix<D>> acts;
  for (std::size_t i = 0; i < m.algebra()->rank(); ++i) acts.push_back(m.action(i).transpose());
  return Representation<D>(opposite_alg, m.rank(), std::move(acts));
}

template <class D>
Vec<D> TensorProduct<D>::class_of(std::size_t t, const Vec<D>& x) const {
  const D& dom = relations.domain();
  Vec<D> w(rv * rm, dom.zero());
  for (std::size_t u = 0; u < rm; ++u) w[t * rm + u] = x[u];
  auto r = relation_basis->reduce(w);
  Vec<D> out(quotient_coords.size());
  for (std::size_t i = 0; i < quotient_coords.size(); ++i) out[i] = r[quotient_coords[i]];
  return out;
}

template <class D>
TensorProduct<D> tensor_over_algebra(const Representation<D>& v, const Representation<D>& m,
                                     const AlgebraPtr<D>& acting,
                                     const std::vector<Matrix<D>>* acting_on_v) {
  const D& dom = m.domain();
  if (v.algebra()->rank() != m.algebra()->rank())
    throw DomainError("tensor_over_algebra: algebras do not match");
  TensorProduct<D> res;
  res.rv = v.rank();
  res.rm = m.rank();
  const std::size_t rv = res.rv, rm = res.rm, nw = rv * rm;
  std::vector<Vec<D>> rels;
  for (auto g : m.algebra()->generators()) {
    auto av = v.action(g);
    auto am = m.action(g);
    for (std::size_t t = 0; t < rv; ++t)
      for (std::size_t u = 0; u < rm; ++u) {
        Vec<D> r(nw, dom.zero());
        for (std::size_t t2 = 0; t2 < rv; ++t2)
          if (!dom.is_zero(av(t2, t))) r[t2 * rm + u] = dom.add(r[t2 * rm + u], av(t2, t));
        for (std::size_t u2 = 0; u2 < rm; ++u2)
          if (!dom.is_zero(am(u2, u))) r[t * rm + u2] = dom.sub(r[t * rm + u2], am(u2, u));
        if (!vec_is_zero(dom, r)) rels.push_back(std::move(r));
      }
  }
  res.relations = rels.empty() ? Matrix<D>(dom, nw, 0) : Matrix<D>::from_columns(dom, rels, nw);
  res.structure = cokernel_invariants(res.relations);
  if (!res.is_free()) return res;
  auto rowmat = rels.empty() ? Matrix<D>(dom, 0, nw) : Matrix<D>::from_rows(dom, rels, nw);
  res.relation_basis = saturation(rowmat, nw);
  res.quotient_coords = res.relation_basis->complement();
  if (acting && acting_on_v) {
    const auto& q = res.quotient_coords;
    std::vector<Matrix<D>> acts;
    for (std::size_t s = 0; s < acting->rank(); ++s) {
      const auto& phi = (*acting_on_v)[s];
      Matrix<D> mat(dom, q.size(), q.size());
      for (std::size_t c = 0; c < q.size(); ++c) {
        std::size_t t = q[c] / rm, u = q[c] % rm;
        Vec<D> w(nw, dom.zero());
        for (std::size_t t2 = 0; t2 < rv; ++t2) w[t2 * rm + u] = phi(t2, t);
        auto r = res.relation_basis->reduce(w);
        for (std::size_t c2 = 0; c2 < q.size(); ++c2) mat(c2, c) = r[q[c2]];
      }
      acts.push_back(std::move(mat));
    }
    res.module = Representation<D>(acting, q.size(), std::move(acts));
  }
  return res;
}

namespace {

using u128 = unsigned __int128;

// trace of (lift M)^(p^i) modulo p^(i+1), divided by p^i
std::uint32_t trace_power_digit(const Matrix<PrimeField>& m, std::uint32_t p, int i) {
  const std::size_t n = m.rows();
  std::uint64_t mod = 1;
  for (int t = 0; t <= i; ++t) mod *= p;
  std::vector<std::uint64_t> base(n * n), acc(n * n, 0), tmp(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) base[r * n + c] = m(r, c);
  for (std::size_t r = 0; r < n; ++r) acc[r * n + r] = 1;
  auto mult = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                  std::vector<std::uint64_t>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t a = x[r * n + k];
        if (a == 0) continue;
        for (std::size_t c = 0; c < n; ++c) {
          std::uint64_t b = y[k * n + c];
          if (b == 0) continue;
          out[r * n + c] = static_cast<std::uint64_t>((u128(out[r * n + c]) + u128(a) * b) % mod);
        }
      }
  };
  std::uint64_t e = 1;
  for (int t = 0; t < i; ++t) e *= p;
  while (e > 0) {
    if (e & 1) {
      mult(acc, base, tmp);
      acc.swap(tmp);
    }
    e >>= 1;
    if (e) {
      mult(base, base, tmp);
      base.swap(tmp);
    }
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + acc[r * n + r]) % mod;
  std::uint64_t low = mod / p;
  if (tr % low != 0) throw DomainError("radical: trace digit not divisible");
  return static_cast<std::uint32_t>(tr / low);
}

}  // namespace

template <class D>
SubBasis<D> radical(const Algebra<D>& a, const Representation<D>* faithful) {
  if constexpr (!D::is_field) {
    (void)a;
    (void)faithful;
    throw DomainError("radical requires a field domain");
  } else {
    const D& dom = a.domain();
    const std::size_t n = a.rank();
    auto regular = Representation<D>::regular(std::make_shared<const Algebra<D>>(a));
    const Representation<D>& rho = faithful ? *faithful : regular;
    std::vector<typename D::Elem> traces(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto m = rho.action(k);
      auto t = dom.zero();
      for (std::size_t r = 0; r < m.rows(); ++r) t = dom.add(t, m(r, r));
      traces[k] = t;
    }
    // level 0: the trace form
    Matrix<D> g(dom, n, n);
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& e : a.row(m)) g(m, e.j) = dom.add(g(m, e.j), dom.mul(e.c, traces[e.k]));
    auto ker = kernel_basis(g.transpose());  // c with c^T g = 0
    SubBasis<D> ideal = ker;
    if constexpr (std::is_same_v<D, PrimeField>) {
      const std::uint32_t p = dom.p;
      int levels = 0;
      for (std::uint64_t pw = p; pw <= rho.rank(); pw *= p) ++levels;
      for (int i = 1; i <= levels && ideal.dim() > 0; ++i) {
        const std::size_t k = ideal.dim();
        std::vector<PrimeField::Elem> gv(k);
        for (std::size_t m = 0; m < k; ++m) gv[m] = trace_power_digit(rho.act(ideal.vector(m)), p, i);
        Matrix<D> gm(dom, k, n);
        for (std::size_t m = 0; m < k; ++m)
          for (std::size_t j = 0; j < n; ++j) {
            auto c = ideal.coords(a.mul(ideal.vector(m), a.basis_vector(j)));
            auto s = dom.zero();
            for (std::size_t t = 0; t < k; ++t) s = dom.add(s, dom.mul(c[t], gv[t]));
            gm(m, j) = s;
          }
        auto kk = kernel_basis(gm.transpose());
        std::vector<Vec<D>> vecs;
        for (std::size_t t = 0; t < kk.dim(); ++t) vecs.push_back(ideal.combine(kk.vector(t)));
        ideal = saturation(vecs.empty() ? Matrix<D>(dom, 0, n) : Matrix<D>::from_rows(dom, vecs, n), n);
      }
    }
    return ideal;
  }
}

template <class D>
bool is_nilpotent_ideal(const Algebra<D>& a, const SubBasis<D>& ideal) {
  const D& dom = a.domain();
  const std::size_t n = a.rank();
  std::vector<Vec<D>> power;
  for (std::size_t i = 0; i < ideal.dim(); ++i) power.push_back(ideal.vector(i));
  std::size_t prev = power.size() + 1;
  while (!power.empty()) {
    if (power.size() >= prev) return false;
    prev = power.size();
    std::vector<Vec<D>> next;
    for (const auto& x : power)
      for (std::size_t j = 0; j < ideal.dim(); ++j) next.push_back(a.mul(x, ideal.vector(j)));
    auto sb = saturation(next.empty() ? Matrix<D>(dom, 0, n) : Matrix<D>::from_rows(dom, next, n), n);
    power.clear();
    for (std::size_t i = 0; i < sb.dim(); ++i) power.push_back(sb.vector(i));
  }
  return true;
}

template <class D>
AlgebraPtr<D> quotient_algebra(const Algebra<D>& a, const SubBasis<D>& ideal) {
  const D& dom = a.domain();
  auto q = ideal.complement();
  std::vector<StructureConstant<D>> quads;
  auto project = [&](const Vec<D>& v) {
    auto r = ideal.reduce(v);
    Vec<D> out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out[t] = r[q[t]];
    return out;
  };
  for (std::size_t s = 0; s < q.size(); ++s)
    for (std::size_t t = 0; t < q.size(); ++t) {
      auto c = project(a.basis_product(q[s], q[t]));
      for (std::size_t u = 0; u < q.size(); ++u)
        if (!dom.is_zero(c[u]))
          quads.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                           static_cast<std::uint32_t>(u), c[u]});
    }
  std::vector<std::string> labels;
  for (auto i : q) labels.push_back(a.labels()[i]);
  return make_algebra(dom, std::move(labels), project(a.unit()), quads);
}

template <class D>
std::vector<Vec<D>> left_ideal_generators(const Algebra<D>& a, const SubBasis<D>& ideal) {
  std::vector<Vec<D>> gens;
  Lattice<D> lat(a.domain(), a.rank());
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    auto v = ideal.vector(i);
    if (lat.contains(v)) continue;
    gens.push_back(v);
    lat = left_ideal(a, gens);
  }
  return gens;
}

template <class D>
SubBasis<D> socle(const Representation<D>& m, const std::vector<Vec<D>>& radical_gens) {
  const D& dom = m.domain();
  Matrix<D> stacked(dom, m.rank() * radical_gens.size(), m.rank());
  for (std::size_t g = 0; g < radical_gens.size(); ++g) {
    auto act = m.act(radical_gens[g]);
    for (std::size_t r = 0; r < m.rank(); ++r)
      for (std::size_t c = 0; c < m.rank(); ++c) stacked(g * m.rank() + r, c) = act(r, c);
  }
  return kernel_basis(stacked);
}

template <class D>
Lattice<D> radical_submodule(const Representation<D>& m, const std::vector<Vec<D>>& radical_gens) {
  std::vector<Vec<D>> start;
  for (const auto& g : radical_gens) {
    auto act = m.act(g);
    for (std::size_t c = 0; c < m.rank(); ++c) start.push_back(act.column(c));
  }
  return generated_submodule(m, start);
}

Representation<PrimeField> reduce_mod_p(const Representation<LocalIntegers>& m,
                                        AlgebraPtr<PrimeField> reduced) {
  if (m.is_regular()) return Representation<PrimeField>::regular(reduced);
  std::vector<Matrix<PrimeField>> acts;
  for (std::size_t i = 0; i < m.algebra()->rank(); ++i) acts.push_back(reduce_mod_p(m.action(i)));
  return Representation<PrimeField>(std::move(reduced), m.rank(), std::move(acts));
}

#define QHC_INSTANTIATE(D)                                                                     \
  template class Algebra<D>;                                                                   \
  template AlgebraPtr<D> make_algebra(const D&, std::vector<std::string>, Vec<D>,              \
                                      const std::vector<StructureConstant<D>>&);               \
  template AlgebraPtr<D> opposite(const Algebra<D>&);                                          \
  template AlgebraCheck check_algebra(const Algebra<D>&);                                      \
  template class Representation<D>;                                                            \
  template bool check_representation(const Representation<D>&, std::string*);                 \
  template bool is_intertwiner(const Representation<D>&, const Representation<D>&,             \
                               const Matrix<D>&);                                              \
  template SubBasis<D> hom_lattice(const Representation<D>&, const Representation<D>&);       \
  template std::vector<Matrix<D>> hom_space(const Representation<D>&, const Representation<D>&); \
  template EndomorphismAlgebra<D> endomorphism_algebra(const Representation<D>&);              \
  template Representation<D> submodule_representation(const Representation<D>&,                \
                                                      const SubBasis<D>&);                     \
  template std::optional<SplitSubmodule<D>> split_submodule(const Representation<D>&,          \
                                                            const std::vector<Vec<D>>&);       \
  template Lattice<D> generated_submodule(const Representation<D>&, const std::vector<Vec<D>>&); \
  template Lattice<D> left_ideal(const Algebra<D>&, const std::vector<Vec<D>>&);               \
  template Lattice<D> two_sided_ideal(const Algebra<D>&, const std::vector<Vec<D>>&);          \
  template LeftIdealModule<D> left_ideal_module(const AlgebraPtr<D>&, const Vec<D>&);          \
  template struct Truncation<D>;                                                               \
  template Truncation<D> idempotent_truncation(const AlgebraPtr<D>&, const Vec<D>&);           \
  template Representation<D> dual_module(const Representation<D>&, AlgebraPtr<D>);             \
  template struct TensorProduct<D>;                                                            \
  template TensorProduct<D> tensor_over_algebra(const Representation<D>&,                      \
                                                const Representation<D>&,                      \
                                                const AlgebraPtr<D>&,                          \
                                                const std::vector<Matrix<D>>*);                \
  template SubBasis<D> radical(const Algebra<D>&, const Representation<D>*);                   \
  template bool is_nilpotent_ideal(const Algebra<D>&, const SubBasis<D>&);                     \
  template AlgebraPtr<D> quotient_algebra(const Algebra<D>&, const SubBasis<D>&);              \
  template std::vector<Vec<D>> left_ideal_generators(const Algebra<D>&, const SubBasis<D>&);   \
  template SubBasis<D> socle(const Representation<D>&, const std::vector<Vec<D>>&);            \
  template Lattice<D> radical_submodule(const Representation<D>&, const std::vector<Vec<D>>&);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
