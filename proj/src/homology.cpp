#include "qhc/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace qhc {

namespace {

template <class D>
struct Residue {
  using type = D;
  static const D& field(const D& dom) { return dom; }
  static const Matrix<D>& matrix(const Matrix<D>& m) { return m; }
  static const Vec<D>& vec(const D&, const Vec<D>& v) { return v; }
};

template <>
struct Residue<LocalIntegers> {
  using type = PrimeField;
  static PrimeField field(const LocalIntegers& dom) { return dom.residue_field(); }
  static Matrix<PrimeField> matrix(const Matrix<LocalIntegers>& m) { return reduce_mod_p(m); }
  static Vec<PrimeField> vec(const LocalIntegers& dom, const Vec<LocalIntegers>& v) {
    return reduce_mod_p(dom, v);
  }
};

// Span of a set of vectors closed under a family of matrices acting on each
// block of length mats[g].cols(). Over Z_(p) the span is taken modulo p: for
// a saturated lattice K, vectors whose residues span K/pK under the action
// generate K (Nakayama).
template <class D>
class SpanClosure {
  using K = typename Residue<D>::type;

 public:
  SpanClosure(const D& dom, std::size_t n, const std::vector<Matrix<D>>& mats)
      : dom_(dom), field_(Residue<D>::field(dom)), lat_(field_, n) {
    for (const auto& m : mats) mats_.push_back(Residue<D>::matrix(m));
  }

  bool contains(const Vec<D>& v) const { return lat_.contains(Residue<D>::vec(dom_, v)); }
  void add(const Vec<D>& v) {
    std::deque<Vec<K>> work;
    Vec<K> r = Residue<D>::vec(dom_, v);
    if (lat_.insert(r)) work.push_back(std::move(r));
    while (!work.empty()) {
      auto x = std::move(work.front());
      work.pop_front();
      for (const auto& m : mats_) {
        auto y = act(m, x);
        if (lat_.insert(y)) work.push_back(std::move(y));
      }
    }
  }

 private:
  Vec<K> act(const Matrix<K>& m, const Vec<K>& v) const {
    const std::size_t b = m.cols();
    Vec<K> w(v.size(), field_.zero());
    for (std::size_t blk = 0; blk * b < v.size(); ++blk) {
      Vec<K> part(v.begin() + blk * b, v.begin() + (blk + 1) * b);
      if (vec_is_zero(field_, part)) continue;
      auto img = m.apply(part);
      std::copy(img.begin(), img.end(), w.begin() + blk * b);
    }
    return w;
  }

  D dom_;
  K field_;
  Lattice<K> lat_;
  std::vector<Matrix<K>> mats_;
};

std::vector<std::size_t> candidate_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

template <class D>
Matrix<D> augmentation_matrix(const Representation<D>& m, const std::vector<Vec<D>>& gens) {
  const auto& a = *m.algebra();
  const std::size_t n = a.rank();
  Matrix<D> out(a.domain(), m.rank(), gens.size() * n);
  for (std::size_t l = 0; l < gens.size(); ++l)
    for (std::size_t b = 0; b < n; ++b) out.set_column(l * n + b, m.apply_basis(b, gens[l]));
  return out;
}

// d(e_l) = sum_j beta[l][j] e_j as a map A^{rows} <- A^{beta.size()}
template <class D>
Matrix<D> free_map_matrix(const Algebra<D>& a, const std::vector<std::vector<Vec<D>>>& beta,
                          std::size_t target_rank) {
  const std::size_t n = a.rank();
  Matrix<D> out(a.domain(), target_rank * n, beta.size() * n);
  for (std::size_t l = 0; l < beta.size(); ++l)
    for (std::size_t j = 0; j < target_rank; ++j) {
      if (vec_is_zero(a.domain(), beta[l][j])) continue;
      auto r = a.right_mult(beta[l][j]);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out(j * n + x, l * n + y) = r(x, y);
    }
  return out;
}

// Homology at a term of rank `dim`, given the outgoing and incoming maps.
template <class D>
CokernelInvariants homology_at(const D& dom, std::size_t dim, const Matrix<D>* out,
                               const Matrix<D>* in) {
  SubBasis<D> ker;
  if (out && out->rows() > 0) {
    ker = kernel_basis(*out);
  } else {
    ker = *unit_echelon(Matrix<D>::identity(dom, dim));
  }
  std::size_t ncols = in ? in->cols() : 0;
  Matrix<D> img(dom, ker.dim(), ncols);
  for (std::size_t c = 0; c < ncols; ++c) img.set_column(c, ker.coords(in->column(c)));
  auto inv = cokernel_invariants(img);
  if constexpr (!D::is_field) inv.p = dom.p;
  return inv;
}

// Block matrix with block (row_block, col_block) = act(beta) for the
// Hom complex (transpose = false) or the tensor complex (transpose = true).
template <class D>
Matrix<D> induced_complex_map(const Representation<D>& mod,
                              const std::vector<std::vector<Vec<D>>>& beta, std::size_t prev_rank,
                              bool tensor_side) {
  const D& dom = mod.domain();
  const std::size_t r = mod.rank();
  const std::size_t cur = beta.size();
  Matrix<D> out = tensor_side ? Matrix<D>(dom, prev_rank * r, cur * r)
                              : Matrix<D>(dom, cur * r, prev_rank * r);
  for (std::size_t l = 0; l < cur; ++l)
    for (std::size_t j = 0; j < prev_rank; ++j) {
      if (vec_is_zero(dom, beta[l][j])) continue;
      auto act = mod.act(beta[l][j]);
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
          if (tensor_side)
            out(j * r + x, l * r + y) = act(x, y);
          else
            out(l * r + x, j * r + y) = act(x, y);
        }
    }
  return out;
}

}  // namespace

template <class D>
FreeResolution<D> free_resolution(const Representation<D>& m, std::size_t length,
                                  std::uint64_t seed) {
  const auto& alg = m.algebra();
  const auto& a = *alg;
  const D& dom = a.domain();
  const std::size_t n = a.rank();
  const auto& gens = a.generators();
  FreeResolution<D> res;
  res.target = m;

  std::vector<Matrix<D>> acts;
  for (auto g : gens) acts.push_back(m.action(g));
  SpanClosure<D> top(dom, m.rank(), acts);
  for (auto c : candidate_order(m.rank(), seed)) {
    Vec<D> e(m.rank(), dom.zero());
    e[c] = dom.one();
    if (top.contains(e)) continue;
    res.augmentation.push_back(e);
    top.add(e);
  }
  res.ranks.push_back(res.augmentation.size());
  if (res.augmentation.empty()) {
    res.terminated = true;
    return res;
  }
  Matrix<D> cur = augmentation_matrix(m, res.augmentation);

  std::vector<Matrix<D>> left;
  for (auto g : gens) left.push_back(a.left_mult(a.basis_vector(g)));
  for (std::size_t i = 1; i <= length; ++i) {
    auto ker = kernel_basis(cur);
    if (ker.dim() == 0) {
      res.terminated = true;
      break;
    }
    const std::size_t prev = res.ranks.back();
    SpanClosure<D> span(dom, prev * n, left);
    std::vector<std::vector<Vec<D>>> beta;
    for (auto c : candidate_order(ker.dim(), seed == 0 ? 0 : seed + i)) {
      auto v = ker.vector(c);
      if (span.contains(v)) continue;
      span.add(v);
      std::vector<Vec<D>> blocks;
      for (std::size_t blk = 0; blk < prev; ++blk)
        blocks.emplace_back(v.begin() + blk * n, v.begin() + (blk + 1) * n);
      beta.push_back(std::move(blocks));
    }
    res.ranks.push_back(beta.size());
    cur = free_map_matrix(a, beta, prev);
    res.differentials.push_back(std::move(beta));
  }
  return res;
}

template <class D>
Matrix<D> differential_matrix(const FreeResolution<D>& res, std::size_t i) {
  if (i == 0) return augmentation_matrix(res.target, res.augmentation);
  return free_map_matrix(*res.target.algebra(), res.differentials.at(i - 1), res.rank(i - 1));
}

template <class D>
bool verify_resolution(const FreeResolution<D>& res, std::string* failure) {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  const D& dom = res.target.domain();
  auto d0 = differential_matrix(res, 0);
  if (res.target.rank() > 0 && !map_verdict(d0).surjective) return fail("augmentation is not onto");
  Matrix<D> prev = d0;
  for (std::size_t i = 1; i <= res.length() + 1; ++i) {
    auto ker = kernel_basis(prev);
    if (i > res.length()) {
      if (res.terminated && ker.dim() != 0) return fail("resolution stops early");
      break;
    }
    auto d = differential_matrix(res, i);
    if (!(prev * d).is_zero()) return fail("d o d != 0 at degree " + std::to_string(i));
    Lattice<D> img(dom, d.rows());
    for (std::size_t c = 0; c < d.cols(); ++c) img.insert(d.column(c));
    for (std::size_t k = 0; k < ker.dim(); ++k)
      if (!img.contains(ker.vector(k))) return fail("not exact at degree " + std::to_string(i - 1));
    prev = std::move(d);
  }
  return true;
}

template <class D>
std::vector<HomologyGroup> ext_from_resolution(const FreeResolution<D>& res,
                                               const Representation<D>& n,
                                               std::size_t max_degree) {
  const D& dom = n.domain();
  std::vector<HomologyGroup> out;
  // delta_i : N^{r_{i-1}} -> N^{r_i}
  auto delta = [&](std::size_t i) -> std::optional<Matrix<D>> {
    if (i == 0 || i > res.length()) return std::nullopt;
    return induced_complex_map(n, res.differentials[i - 1], res.rank(i - 1), false);
  };
  std::optional<Matrix<D>> incoming;  // delta_i
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (i + 1 > res.length() && !res.terminated)
      throw DomainError("resolution too short for Ext degree " + std::to_string(i));
    auto outgoing = delta(i + 1);
    HomologyGroup g;
    g.degree = i;
    const std::size_t dim = res.rank(i) * n.rank();
    if (dim == 0) {
      if constexpr (!D::is_field) g.inv.p = dom.p;
    } else {
      g.inv = homology_at(dom, dim, outgoing ? &*outgoing : nullptr, incoming ? &*incoming : nullptr);
    }
    out.push_back(std::move(g));
    incoming = std::move(outgoing);
  }
  return out;
}

template <class D>
std::vector<HomologyGroup> ext(const Representation<D>& m, const Representation<D>& n,
                               std::size_t max_degree, std::uint64_t seed) {
  if (!same_algebra(m.algebra(), n.algebra())) throw DomainError("ext: algebra mismatch");
  return ext_from_resolution(free_resolution(m, max_degree + 1, seed), n, max_degree);
}

template <class D>
std::vector<HomologyGroup> tor_from_resolution(const Representation<D>& v,
                                               const FreeResolution<D>& res,
                                               std::size_t max_degree) {
  const D& dom = v.domain();
  std::vector<HomologyGroup> out;
  // boundary_i : V^{r_i} -> V^{r_{i-1}}
  auto boundary = [&](std::size_t i) -> std::optional<Matrix<D>> {
    if (i == 0 || i > res.length()) return std::nullopt;
    return induced_complex_map(v, res.differentials[i - 1], res.rank(i - 1), true);
  };
  std::optional<Matrix<D>> outgoing;  // boundary_i
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (i + 1 > res.length() && !res.terminated)
      throw DomainError("resolution too short for Tor degree " + std::to_string(i));
    auto incoming = boundary(i + 1);
    HomologyGroup g;
    g.degree = i;
    const std::size_t dim = res.rank(i) * v.rank();
    if (dim == 0) {
      if constexpr (!D::is_field) g.inv.p = dom.p;
    } else {
      g.inv = homology_at(dom, dim, outgoing ? &*outgoing : nullptr, incoming ? &*incoming : nullptr);
    }
    out.push_back(std::move(g));
    outgoing = std::move(incoming);
  }
  return out;
}

template <class D>
std::vector<HomologyGroup> tor(const Representation<D>& v, const Representation<D>& m,
                               std::size_t max_degree, std::uint64_t seed) {
  if (v.algebra()->rank() != m.algebra()->rank()) throw DomainError("tor: algebra mismatch");
  return tor_from_resolution(v, free_resolution(m, max_degree + 1, seed), max_degree);
}

template <class D>
bool is_projective(const Representation<D>& p) {
  const auto& alg = p.algebra();
  const auto& a = *alg;
  const D& dom = a.domain();
  const std::size_t n = a.rank();
  auto res = free_resolution(p, 0);
  const std::size_t r = res.rank(0);
  auto pi = differential_matrix(res, 0);
  std::vector<Matrix<D>> acts;
  for (std::size_t i = 0; i < n; ++i) {
    auto l = a.left_mult(a.basis_vector(i));
    Matrix<D> big(dom, r * n, r * n);
    for (std::size_t blk = 0; blk < r; ++blk)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) big(blk * n + x, blk * n + y) = l(x, y);
    acts.push_back(std::move(big));
  }
  Representation<D> free(alg, r * n, std::move(acts));
  auto homs = hom_space(p, free);
  const std::size_t rp = p.rank();
  Matrix<D> sys(dom, rp * rp, homs.size());
  for (std::size_t u = 0; u < homs.size(); ++u) {
    auto comp = pi * homs[u];
    for (std::size_t t = 0; t < rp * rp; ++t) sys(t, u) = comp.data()[t];
  }
  return solve(sys, Matrix<D>::identity(dom, rp).data()).has_value();
}

template <class D>
Cover<D> Cover<D>::from_idempotent(const AlgebraPtr<D>& a, const Vec<D>& e) {
  Cover c;
  c.a_ = a;
  c.trunc_ = idempotent_truncation(a, e);
  c.b_ = c.trunc_->algebra;
  c.fa_ = c.apply(Representation<D>::regular(a));
  return c;
}

template <class D>
Cover<D> Cover<D>::from_projective(const Representation<D>& p) {
  if (!is_projective(p)) throw DomainError("cover module is not projective");
  Cover c;
  c.a_ = p.algebra();
  c.p_ = p;
  auto end = endomorphism_algebra(p);
  c.endo_ = std::move(end.maps);
  c.b_ = opposite(*end.algebra);
  auto reg = Representation<D>::regular(c.a_);
  auto basis = hom_lattice(p, reg);
  for (std::size_t t = 0; t < basis.dim(); ++t) {
    Matrix<D> f(c.a_->domain(), reg.rank(), p.rank());
    f.data() = basis.vector(t);
    c.fa_maps_.push_back(std::move(f));
  }
  c.fa_ = c.apply(reg);
  return c;
}

template <class D>
Representation<D> Cover<D>::projective() const {
  if (p_) return *p_;
  return left_ideal_module(a_, trunc_->e).module;
}

template <class D>
FunctorImage<D> Cover<D>::apply(const Representation<D>& x) const {
  const D& dom = a_->domain();
  FunctorImage<D> out;
  if (trunc_) {
    SubBasis<D> img;
    out.module = trunc_->apply(x, &img);
    for (std::size_t t = 0; t < trunc_->eA_basis.dim(); ++t) {
      auto act = x.act(trunc_->eA_basis.vector(t));
      Matrix<D> pr(dom, img.dim(), x.rank());
      for (std::size_t c = 0; c < x.rank(); ++c) pr.set_column(c, img.coords(act.column(c)));
      out.pairing.push_back(std::move(pr));
    }
    return out;
  }
  const auto& p = *p_;
  auto basis = hom_lattice(p, x);
  const std::size_t k = basis.dim();
  std::vector<Matrix<D>> hs;
  for (std::size_t u = 0; u < k; ++u) {
    Matrix<D> h(dom, x.rank(), p.rank());
    h.data() = basis.vector(u);
    hs.push_back(std::move(h));
  }
  std::vector<Matrix<D>> acts;
  for (const auto& phi : endo_) {
    Matrix<D> mat(dom, k, k);
    for (std::size_t u = 0; u < k; ++u) mat.set_column(u, basis.coords((hs[u] * phi).data()));
    acts.push_back(std::move(mat));
  }
  out.module = Representation<D>(b_, k, std::move(acts));
  for (const auto& f : fa_maps_) {
    std::vector<Matrix<D>> col_acts;
    for (std::size_t q = 0; q < p.rank(); ++q) col_acts.push_back(x.act(f.column(q)));
    Matrix<D> pr(dom, k, x.rank());
    for (std::size_t c = 0; c < x.rank(); ++c) {
      Matrix<D> y(dom, x.rank(), p.rank());
      for (std::size_t q = 0; q < p.rank(); ++q) y.set_column(q, col_acts[q].column(c));
      pr.set_column(c, basis.coords(y.data()));
    }
    out.pairing.push_back(std::move(pr));
  }
  return out;
}

template <class D>
Matrix<D> UnitMap<D>::map_of(std::size_t m_index) const {
  Matrix<D> out(matrix.domain(), fm_rank, fa_rank);
  out.data() = hom_basis.combine(matrix.column(m_index));
  return out;
}

template <class D>
UnitMap<D> adjunction_unit(const Cover<D>& cover, const Representation<D>& m) {
  return adjunction_unit(cover, m, cover.apply(m));
}

template <class D>
UnitMap<D> adjunction_unit(const Cover<D>& cover, const Representation<D>& m,
                           const FunctorImage<D>& fm) {
  const D& dom = m.domain();
  UnitMap<D> u;
  u.fa_rank = cover.fa().rank();
  u.fm_rank = fm.module.rank();
  u.hom_basis = hom_lattice(cover.fa(), fm.module);
  u.matrix = Matrix<D>(dom, u.hom_basis.dim(), m.rank());
  for (std::size_t c = 0; c < m.rank(); ++c) {
    Vec<D> flat(u.fm_rank * u.fa_rank, dom.zero());
    for (std::size_t t = 0; t < u.fa_rank; ++t)
      for (std::size_t r = 0; r < u.fm_rank; ++r) flat[r * u.fa_rank + t] = fm.pairing[t](r, c);
    if (!u.hom_basis.contains(flat)) throw DomainError("unit map value is not B-linear");
    u.matrix.set_column(c, u.hom_basis.coords(flat));
  }
  u.verdict = map_verdict(u.matrix);
  return u;
}

#define QHC_INSTANTIATE(D)                                                                        \
  template FreeResolution<D> free_resolution(const Representation<D>&, std::size_t,              \
                                             std::uint64_t);                                      \
  template Matrix<D> differential_matrix(const FreeResolution<D>&, std::size_t);                  \
  template bool verify_resolution(const FreeResolution<D>&, std::string*);                        \
  template std::vector<HomologyGroup> ext_from_resolution(const FreeResolution<D>&,               \
                                                          const Representation<D>&, std::size_t); \
  template std::vector<HomologyGroup> ext(const Representation<D>&, const Representation<D>&,     \
                                          std::size_t, std::uint64_t);                            \
  template std::vector<HomologyGroup> tor_from_resolution(                                        \
      const Representation<D>&, const FreeResolution<D>&, std::size_t);                           \
  template std::vector<HomologyGroup> tor(const Representation<D>&, const Representation<D>&,     \
                                          std::size_t, std::uint64_t);                            \
  template bool is_projective(const Representation<D>&);                                          \
  template class Cover<D>;                                                                        \
  template struct UnitMap<D>;                                                                     \
  template UnitMap<D> adjunction_unit(const Cover<D>&, const Representation<D>&);                 \
  template UnitMap<D> adjunction_unit(const Cover<D>&, const Representation<D>&,                  \
                                      const FunctorImage<D>&);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
