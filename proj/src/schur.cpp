#include "qhc/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qhc {

std::vector<Permutation> permutations(int d) {
  Permutation p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

std::vector<int> reduced_word(const Permutation& w) {
  Permutation cur = w;
  std::vector<int> rev;
  while (true) {
    std::size_t t = 0;
    while (t + 1 < cur.size() && cur[t] < cur[t + 1]) ++t;
    if (t + 1 >= cur.size()) break;
    rev.push_back(static_cast<int>(t));
    std::swap(cur[t], cur[t + 1]);
  }
  return {rev.rbegin(), rev.rend()};
}

std::string permutation_label(const Permutation& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s + "]";
}

std::vector<Partition> partitions(int d, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::string partition_label(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {

std::map<Permutation, std::uint32_t> permutation_index(const std::vector<Permutation>& perms) {
  std::map<Permutation, std::uint32_t> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<std::uint32_t>(i);
  return idx;
}

std::vector<std::string> permutation_labels(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  for (const auto& p : perms) out.push_back(permutation_label(p));
  return out;
}

std::string index_word(const std::vector<int>& i) {
  std::string s;
  for (int x : i) s += std::to_string(x + 1);
  return s;
}

}  // namespace

template <class D>
AlgebraPtr<D> symmetric_group_algebra(int d, const D& dom) {
  if (d < 1) throw DomainError("symmetric group degree must be positive");
  auto perms = permutations(d);
  auto idx = permutation_index(perms);
  std::vector<StructureConstant<D>> quads;
  for (std::uint32_t i = 0; i < perms.size(); ++i)
    for (std::uint32_t j = 0; j < perms.size(); ++j)
      quads.push_back({i, j, idx.at(compose(perms[i], perms[j])), dom.one()});
  Vec<D> unit(perms.size(), dom.zero());
  unit[0] = dom.one();
  return make_algebra(dom, permutation_labels(perms), std::move(unit), quads);
}

template <class D>
AlgebraPtr<D> hecke_algebra(int d, const D& dom, const typename D::Elem& u) {
  if (d < 1) throw DomainError("Hecke algebra degree must be positive");
  if (!dom.is_unit(u)) throw DomainError("Hecke parameter u must be a unit");
  const auto c = dom.sub(u, dom.inv(u));
  auto perms = permutations(d);
  auto idx = permutation_index(perms);
  const std::size_t m = perms.size();
  // right[t][w] = index of w o s_t; ascent[t][w] = w(t) < w(t+1)
  std::vector<std::vector<std::uint32_t>> right(d - 1, std::vector<std::uint32_t>(m));
  std::vector<std::vector<bool>> ascent(d - 1, std::vector<bool>(m));
  for (int t = 0; t + 1 < d; ++t)
    for (std::size_t w = 0; w < m; ++w) {
      auto ws = perms[w];
      ascent[t][w] = ws[t] < ws[t + 1];
      std::swap(ws[t], ws[t + 1]);
      right[t][w] = idx.at(ws);
    }
  std::vector<StructureConstant<D>> quads;
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      Vec<D> comb(m, dom.zero());
      comb[x] = dom.one();
      for (int t : reduced_word(perms[y])) {
        Vec<D> next(m, dom.zero());
        for (std::size_t w = 0; w < m; ++w) {
          if (dom.is_zero(comb[w])) continue;
          auto ws = right[t][w];
          next[ws] = dom.add(next[ws], comb[w]);
          if (!ascent[t][w]) next[w] = dom.add(next[w], dom.mul(c, comb[w]));
        }
        comb = std::move(next);
      }
      for (std::uint32_t w = 0; w < m; ++w)
        if (!dom.is_zero(comb[w])) quads.push_back({x, y, w, comb[w]});
    }
  Vec<D> unit(m, dom.zero());
  unit[0] = dom.one();
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back("T" + permutation_label(p));
  return make_algebra(dom, std::move(labels), std::move(unit), quads);
}

template <class D>
std::size_t TensorSpace<D>::index_of(const std::vector<int>& i) const {
  std::size_t r = 0;
  for (int x : i) r = r * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return r;
}

template <class D>
TensorSpace<D> tensor_space(int n, int d, const D& dom, const typename D::Elem& u) {
  if (n < 1 || d < 1) throw DomainError("tensor space needs n, d >= 1");
  TensorSpace<D> ts;
  ts.n = n;
  ts.d = d;
  ts.u = u;
  ts.hecke = hecke_algebra(d, dom, u);
  std::vector<int> cur(d, 0);
  while (true) {
    ts.indices.push_back(cur);
    int pos = d - 1;
    while (pos >= 0 && cur[pos] == n - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  const std::size_t big = ts.indices.size();
  const auto c = dom.sub(u, dom.inv(u));
  for (int t = 0; t + 1 < d; ++t) {
    Matrix<D> g(dom, big, big);
    for (std::size_t i = 0; i < big; ++i) {
      auto is = ts.indices[i];
      std::swap(is[t], is[t + 1]);
      auto j = ts.index_of(is);
      const auto& ii = ts.indices[i];
      if (ii[t] < ii[t + 1]) {
        g(j, i) = dom.one();
      } else if (ii[t] == ii[t + 1]) {
        g(i, i) = u;
      } else {
        g(i, i) = c;
        g(j, i) = dom.one();
      }
    }
    ts.generators.push_back(std::move(g));
  }
  std::vector<Matrix<D>> acts;
  for (const auto& w : permutations(d)) {
    auto x = Matrix<D>::identity(dom, big);
    for (int t : reduced_word(w)) x = ts.generators[t] * x;
    acts.push_back(std::move(x));
  }
  ts.module = Representation<D>(opposite(*ts.hecke), big, std::move(acts));
  return ts;
}

template <class D>
Vec<D> SchurAlgebra<D>::coords_of(const Matrix<D>& endo) const {
  Vec<D> c(pivots.size());
  for (std::size_t s = 0; s < pivots.size(); ++s) c[s] = endo.data()[pivots[s]];
  return c;
}

template <class D>
std::size_t omega_index(const SchurAlgebra<D>& s) {
  std::vector<int> w(s.d);
  std::iota(w.begin(), w.end(), 0);
  return s.tensor.index_of(w);
}

template <class D>
SchurAlgebra<D> schur_algebra(int n, int d, const D& dom, const typename D::Elem& u,
                              SchurMethod method) {
  if (n < d) throw DomainError("Schur algebra constructions need n >= d");
  SchurAlgebra<D> s;
  s.n = n;
  s.d = d;
  s.u = u;
  s.tensor = tensor_space(n, d, dom, u);
  const std::size_t big = s.tensor.rank();
  std::vector<StructureConstant<D>> quads;
  std::vector<Matrix<D>> maps;
  if (dom.is_one(u) && method == SchurMethod::automatic) {
    // orbits of S_d on pairs of indices, numbered by first occurrence
    auto perms = permutations(d);
    std::vector<std::vector<std::size_t>> act(perms.size(), std::vector<std::size_t>(big));
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (std::size_t i = 0; i < big; ++i) {
        std::vector<int> moved(d);
        for (int a = 0; a < d; ++a) moved[a] = s.tensor.indices[i][perms[p][a]];
        act[p][i] = s.tensor.index_of(moved);
      }
    std::vector<long> orb(big * big, -1);
    for (std::size_t f = 0; f < big * big; ++f) {
      if (orb[f] >= 0) continue;
      const long id = static_cast<long>(s.pivots.size());
      s.pivots.push_back(f);
      for (std::size_t p = 0; p < perms.size(); ++p) orb[act[p][f / big] * big + act[p][f % big]] = id;
    }
    for (std::size_t c = 0; c < s.pivots.size(); ++c) {
      const std::size_t p = s.pivots[c] / big, q = s.pivots[c] % big;
      for (std::size_t m = 0; m < big; ++m)
        quads.push_back({static_cast<std::uint32_t>(orb[p * big + m]),
                         static_cast<std::uint32_t>(orb[m * big + q]),
                         static_cast<std::uint32_t>(c), dom.one()});
    }
    maps.assign(s.pivots.size(), Matrix<D>(dom, big, big));
    for (std::size_t f = 0; f < big * big; ++f) maps[orb[f]].data()[f] = dom.one();
  } else {
    auto sol = hom_lattice(s.tensor.module, s.tensor.module);
    s.pivots = sol.pivots;
    for (std::size_t k = 0; k < sol.dim(); ++k) {
      Matrix<D> m(dom, big, big);
      m.data() = sol.vector(k);
      maps.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = 0; b < maps.size(); ++b) {
        auto coords = s.coords_of(maps[a] * maps[b]);
        for (std::size_t c = 0; c < coords.size(); ++c)
          if (!dom.is_zero(coords[c]))
            quads.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                             static_cast<std::uint32_t>(c), coords[c]});
      }
  }
  std::vector<std::string> labels;
  for (auto f : s.pivots)
    labels.push_back("xi(" + index_word(s.tensor.indices[f / big]) + "," +
                     index_word(s.tensor.indices[f % big]) + ")");
  s.algebra = make_algebra(dom, std::move(labels), s.coords_of(Matrix<D>::identity(dom, big)), quads);
  s.tensor_module = Representation<D>(s.algebra, big, std::move(maps));

  auto projection = [&](const std::vector<int>& content) {
    Matrix<D> m(dom, big, big);
    for (std::size_t i = 0; i < big; ++i) {
      std::vector<int> cnt(n, 0);
      for (int x : s.tensor.indices[i]) ++cnt[x];
      if (cnt == content) m(i, i) = dom.one();
    }
    return s.coords_of(m);
  };
  s.weights = partitions(d, n);
  for (const auto& lam : s.weights) {
    std::vector<int> content(n, 0);
    std::copy(lam.begin(), lam.end(), content.begin());
    s.weight_idempotents.push_back(projection(content));
  }
  std::vector<int> omega(n, 0);
  std::fill(omega.begin(), omega.begin() + d, 1);
  s.e = projection(omega);

  // x_w on e_omega T_v = e_omega T_w T_v
  const auto& h = *s.tensor.hecke;
  const std::size_t om = omega_index(s);
  std::vector<std::size_t> pos(h.rank());
  for (std::size_t v = 0; v < h.rank(); ++v) {
    auto col = s.tensor.module.action(v).column(om);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < big; ++i) {
      if (dom.is_zero(col[i])) continue;
      if (!dom.is_one(col[i])) hits = 2;
      pos[v] = i;
      ++hits;
    }
    if (hits != 1) throw DomainError("e_omega T_w is not a basis vector");
  }
  for (std::size_t w = 0; w < h.rank(); ++w) {
    Matrix<D> x(dom, big, big);
    for (std::size_t v = 0; v < h.rank(); ++v) {
      auto prod = h.basis_product(w, v);
      for (std::size_t r = 0; r < h.rank(); ++r)
        if (!dom.is_zero(prod[r])) x(pos[r], pos[v]) = dom.add(x(pos[r], pos[v]), prod[r]);
    }
    auto c = s.coords_of(x);
    if (s.tensor_module.act(c) != x) throw DomainError("Hecke image is not in the commutant");
    s.hecke_images.push_back(std::move(c));
  }
  return s;
}

template <class D>
HeredityChain<D> schur_heredity_chain(const SchurAlgebra<D>& s) {
  HeredityChain<D> chain;
  chain.algebra = s.algebra;
  const std::size_t t = s.weights.size();
  chain.above.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i) {
    chain.weights.push_back(partition_label(s.weights[i]));
    chain.idempotents.push_back(s.weight_idempotents[i]);
    for (std::size_t j = 0; j < t; ++j)
      chain.above[i][j] = i != j && dominates(s.weights[i], s.weights[j]);
  }
  return chain;
}

template <class D>
Representation<D> schur_functor_image(const SchurAlgebra<D>& s, const Representation<D>& m) {
  auto trunc = idempotent_truncation(s.algebra, s.e);
  auto em = trunc.apply(m);
  std::vector<Matrix<D>> acts;
  for (const auto& x : s.hecke_images) acts.push_back(em.act(trunc.basis.coords(x)));
  return Representation<D>(s.tensor.hecke, em.rank(), std::move(acts));
}

#define QHC_INSTANTIATE(D)                                                                   \
  template AlgebraPtr<D> symmetric_group_algebra(int, const D&);                             \
  template AlgebraPtr<D> hecke_algebra(int, const D&, const typename D::Elem&);              \
  template struct TensorSpace<D>;                                                            \
  template TensorSpace<D> tensor_space(int, int, const D&, const typename D::Elem&);         \
  template struct SchurAlgebra<D>;                                                           \
  template SchurAlgebra<D> schur_algebra(int, int, const D&, const typename D::Elem&, SchurMethod);     \
  template HeredityChain<D> schur_heredity_chain(const SchurAlgebra<D>&);                    \
  template Representation<D> schur_functor_image(const SchurAlgebra<D>&,                     \
                                                 const Representation<D>&);                  \
  template std::size_t omega_index(const SchurAlgebra<D>&);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
