#include "qhc/primitive.hpp"

#include <deque>
#include <functional>
#include <random>

namespace qhc {

namespace {

using F = PrimeField;
using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

struct PolyRing {
  F f;

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  long deg(const Poly& a) const { return static_cast<long>(a.size()) - 1; }

  Poly sub(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    trim(c);
    return c;
  }
  // a = q b + r
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    trim(a);
    if (deg(a) < deg(b)) return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    const auto lead = f.inv(b.back());
    for (long i = deg(a) - deg(b); i >= 0; --i) {
      auto c = f.mul(a[i + b.size() - 1], lead);
      q[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = f.sub(a[i + j], f.mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly monic(Poly a) const {
    if (a.empty()) return a;
    auto l = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, l);
    return a;
  }
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      auto r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // inverse of a modulo m (gcd(a, m) = 1)
  Poly inverse(const Poly& a, const Poly& m) const {
    Poly r0 = m, r1 = mod(a, m), s0, s1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      auto s = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant
    auto c = f.inv(r0[0]);
    for (auto& x : s0) x = f.mul(x, c);
    return mod(s0, m);
  }
  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly r{1};
    base = mod(base, m);
    while (e) {
      if (e & 1) r = mod(mul(r, base), m);
      base = mod(mul(base, base), m);
      e >>= 1;
    }
    return r;
  }
};

// Coprime factorization f = u v with deg u, deg v >= 1, if one is found.
std::optional<std::pair<Poly, Poly>> coprime_split(const PolyRing& R, const Poly& f) {
  auto primary = [&](const Poly& g) {
    Poly u{1}, w = f;
    while (true) {
      auto c = R.gcd(w, g);
      if (R.deg(c) < 1) break;
      w = R.divmod(w, c).first;
      u = R.mul(u, c);
    }
    return std::pair{u, w};
  };
  if (R.f.p <= (1u << 16)) {
    for (std::uint32_t lam = 0; lam < R.f.p; ++lam) {
      std::uint32_t val = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) val = R.f.add(R.f.mul(val, lam), *it);
      if (val != 0) continue;
      auto [u, v] = primary(Poly{R.f.neg(lam), 1});
      if (R.deg(v) >= 1) return std::pair{u, v};
      break;
    }
  }
  Poly h{0, 1};
  for (long k = 1; k <= R.deg(f); ++k) {
    h = R.powmod(h, R.f.p, f);
    auto g = R.gcd(f, R.sub(h, Poly{0, 1}));
    if (R.deg(g) < 1) continue;
    auto [u, v] = primary(g);
    if (R.deg(v) >= 1) return std::pair{u, v};
    return std::nullopt;
  }
  return std::nullopt;
}

class Splitter {
 public:
  Splitter(const Algebra<F>& a, std::uint64_t seed) : a_(a), R_{a.domain()}, rng_(seed) {}

  std::vector<Vec<F>> run() {
    std::vector<Vec<F>> done;
    std::deque<Vec<F>> work{a_.unit()};
    while (!work.empty()) {
      auto e = std::move(work.front());
      work.pop_front();
      auto parts = split(e);
      if (!parts) {
        done.push_back(std::move(e));
      } else {
        work.push_back(std::move(parts->first));
        work.push_back(std::move(parts->second));
      }
    }
    return done;
  }

 private:
  const F& dom() const { return a_.domain(); }

  std::vector<Vec<F>> corner(const Vec<F>& e) const {
    Lattice<F> lat(dom(), a_.rank());
    for (std::size_t i = 0; i < a_.rank(); ++i) lat.insert(a_.mul(a_.mul(e, a_.basis_vector(i)), e));
    return lat.rows();
  }

  Vec<F> power(const Vec<F>& e, const Vec<F>& x, std::uint64_t k) const {
    Vec<F> r = e, b = x;
    while (k) {
      if (k & 1) r = a_.mul(r, b);
      b = a_.mul(b, b);
      k >>= 1;
    }
    return r;
  }

  Poly min_poly(const Vec<F>& e, const Vec<F>& x) const {
    std::vector<Vec<F>> pw{e};
    while (true) {
      auto next = a_.mul(pw.back(), x);
      auto sol = solve(Matrix<F>::from_columns(dom(), pw, a_.rank()), next);
      if (sol) {
        Poly f(pw.size() + 1, 0);
        for (std::size_t i = 0; i < pw.size(); ++i) f[i] = dom().neg((*sol)[i]);
        f.back() = 1;
        return f;
      }
      pw.push_back(std::move(next));
    }
  }

  Vec<F> evaluate(const Poly& g, const Vec<F>& e, const Vec<F>& x) const {
    Vec<F> acc(a_.rank(), 0);
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      acc = a_.mul(acc, x);
      axpy(dom(), *it, e, acc);
    }
    return acc;
  }

  std::optional<std::pair<Vec<F>, Vec<F>>> split_by(const Vec<F>& e, const Vec<F>& x) const {
    auto f = min_poly(e, x);
    auto uv = coprime_split(R_, f);
    if (!uv) return std::nullopt;
    const auto& [u, v] = *uv;
    auto eps = R_.mod(R_.mul(v, R_.inverse(R_.mod(v, u), u)), f);
    auto e1 = evaluate(eps, e, x);
    auto e2 = e;
    axpy(dom(), dom().neg(1), e1, e2);
    return std::pair{std::move(e1), std::move(e2)};
  }

  std::optional<std::pair<Vec<F>, Vec<F>>> split(const Vec<F>& e) {
    auto basis = corner(e);
    if (basis.size() <= 1) return std::nullopt;
    bool commutative = true;
    for (std::size_t i = 0; i < basis.size() && commutative; ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (a_.mul(basis[i], basis[j]) != a_.mul(basis[j], basis[i])) {
          commutative = false;
          break;
        }
    if (commutative) {
      // x -> x^p - x is linear; its kernel is spanned by the block idempotents
      std::vector<Vec<F>> cols;
      for (const auto& b : basis) {
        auto y = power(e, b, dom().p);
        axpy(dom(), dom().neg(1), b, y);
        cols.push_back(std::move(y));
      }
      auto ker = kernel_basis(Matrix<F>::from_columns(dom(), cols, a_.rank()));
      if (ker.dim() <= 1) return std::nullopt;
      for (std::size_t k = 0; k < ker.dim(); ++k) {
        Vec<F> z(a_.rank(), 0);
        auto c = ker.vector(k);
        for (std::size_t t = 0; t < basis.size(); ++t) axpy(dom(), c[t], basis[t], z);
        Lattice<F> two(dom(), a_.rank());
        two.insert(e);
        if (!two.insert(z)) continue;
        if (auto s = split_by(e, z)) return s;
      }
      throw DomainError("could not split a commutative semisimple corner");
    }
    std::uniform_int_distribution<std::uint32_t> coef(0, dom().p - 1);
    for (int attempt = 0; attempt < 500; ++attempt) {
      Vec<F> x(a_.rank(), 0);
      for (const auto& b : basis) axpy(dom(), coef(rng_), b, x);
      if (auto s = split_by(e, x)) return s;
    }
    throw DomainError("no splitting element found for a non-commutative corner");
  }

  const Algebra<F>& a_;
  PolyRing R_;
  std::mt19937_64 rng_;
};

Vec<F> lift_idempotent(const Algebra<F>& a, Vec<F> y) {
  const F& dom = a.domain();
  for (int it = 0; it < 64; ++it) {
    auto y2 = a.mul(y, y);
    if (y2 == y) return y;
    auto y3 = a.mul(y2, y);
    Vec<F> next(a.rank(), 0);
    axpy(dom, dom.from_int(3), y2, next);
    axpy(dom, dom.from_int(-2), y3, next);
    y = std::move(next);
  }
  throw DomainError("idempotent lifting did not converge");
}

// A vector space with a family of linear operators; either an explicit
// module (one block) or a free module A^m acting blockwise.
struct Ambient {
  std::size_t blocks = 1, block = 0;
  std::vector<Matrix<F>> ops;  // generators, then class idempotents, then radical generators
  std::function<Vec<F>(const Vec<F>&, const Vec<F>&)> act;

  std::size_t dim() const { return blocks * block; }
  Vec<F> apply(std::size_t op, const Vec<F>& v) const {
    if (blocks == 1) return ops[op].apply(v);
    Vec<F> out(v.size(), 0);
    for (std::size_t b = 0; b < blocks; ++b) {
      Vec<F> part(v.begin() + b * block, v.begin() + (b + 1) * block);
      bool zero = true;
      for (auto c : part) zero = zero && c == 0;
      if (zero) continue;
      auto img = ops[op].apply(part);
      std::copy(img.begin(), img.end(), out.begin() + b * block);
    }
    return out;
  }
};

struct Operators {
  std::size_t ngens = 0, nclasses = 0, nrad = 0;
  std::vector<Vec<F>> elements;
};

Operators make_operators(const PrimitiveData& prim) {
  Operators o;
  const auto& a = *prim.algebra;
  for (auto g : a.generators()) o.elements.push_back(a.basis_vector(g));
  o.ngens = o.elements.size();
  for (const auto& e : prim.representatives) o.elements.push_back(e);
  o.nclasses = prim.representatives.size();
  for (const auto& g : prim.radical_generators) o.elements.push_back(g);
  o.nrad = prim.radical_generators.size();
  return o;
}

void close_span(const Ambient& amb, std::size_t ngens, Lattice<F>& lat, std::deque<Vec<F>> work) {
  while (!work.empty()) {
    auto v = std::move(work.front());
    work.pop_front();
    for (std::size_t g = 0; g < ngens; ++g) {
      auto y = amb.apply(g, v);
      if (lat.insert(y)) work.push_back(std::move(y));
    }
  }
}

}  // namespace

PrimitiveData primitive_idempotents(const AlgebraPtr<PrimeField>& a,
                                    const Representation<PrimeField>* faithful,
                                    std::uint64_t seed) {
  PrimitiveData out;
  out.algebra = a;
  const F& dom = a->domain();
  out.radical = radical(*a, faithful);
  out.radical_generators = left_ideal_generators(*a, out.radical);
  auto quotient = quotient_algebra(*a, out.radical);
  auto positions = out.radical.complement();
  auto bar = Splitter(*quotient, seed).run();

  auto lift = [&](const Vec<F>& v) {
    Vec<F> w(a->rank(), 0);
    for (std::size_t t = 0; t < positions.size(); ++t) w[positions[t]] = v[t];
    return w;
  };
  Vec<F> taken(a->rank(), 0);
  for (const auto& eb : bar) {
    Vec<F> c = a->unit();
    axpy(dom, dom.neg(1), taken, c);
    auto y = a->mul(a->mul(c, lift(eb)), c);
    auto e = lift_idempotent(*a, std::move(y));
    axpy(dom, 1u, e, taken);
    out.idempotents.push_back(std::move(e));
  }
  if (taken != a->unit()) throw DomainError("lifted idempotents do not sum to 1");

  // f_i ~ f_j iff f_j Abar f_i != 0
  out.class_of.assign(bar.size(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < bar.size(); ++i) {
    bool found = false;
    for (std::size_t r = 0; r < reps.size() && !found; ++r) {
      const auto& fj = bar[reps[r]];
      for (std::size_t b = 0; b < quotient->rank() && !found; ++b) {
        auto x = quotient->mul(quotient->mul(fj, quotient->basis_vector(b)), bar[i]);
        if (!vec_is_zero(dom, x)) {
          out.class_of[i] = r;
          found = true;
        }
      }
    }
    if (!found) {
      out.class_of[i] = reps.size();
      reps.push_back(i);
    }
  }
  for (auto r : reps) {
    const auto& f = out.idempotents[r];
    out.representatives.push_back(f);
    auto proj = left_ideal_module(a, f);
    auto rad = radical_submodule(proj.module, out.radical_generators);
    auto split = split_submodule(proj.module, rad.rows());
    if (!split) throw DomainError("radical of a projective is not split");
    out.simples.push_back(split->quotient);
    out.projectives.push_back(std::move(proj));
  }
  return out;
}

MinimalResolution minimal_resolution(const PrimitiveData& prim, const Representation<PrimeField>& m,
                                     std::size_t length) {
  const auto& a = *prim.algebra;
  const F& dom = a.domain();
  const std::size_t n = a.rank();
  auto ops = make_operators(prim);
  MinimalResolution res;
  res.target = m;

  Ambient amb;
  amb.block = m.rank();
  for (const auto& x : ops.elements) amb.ops.push_back(m.act(x));
  amb.act = [&m](const Vec<F>& x, const Vec<F>& v) { return m.apply(x, v); };
  std::vector<Vec<F>> module_basis;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    Vec<F> e(m.rank(), 0);
    e[i] = 1;
    module_basis.push_back(std::move(e));
  }
  std::vector<Matrix<F>> left_ops;
  for (const auto& x : ops.elements) left_ops.push_back(a.left_mult(x));

  for (std::size_t step = 0; step <= length; ++step) {
    if (module_basis.empty()) {
      res.terminated = true;
      break;
    }
    // radical of the current module, then generators of its top class by class
    Lattice<F> lat(dom, amb.dim());
    std::deque<Vec<F>> work;
    for (std::size_t r = 0; r < ops.nrad; ++r)
      for (const auto& v : module_basis) {
        auto y = amb.apply(ops.ngens + ops.nclasses + r, v);
        if (lat.insert(y)) work.push_back(std::move(y));
      }
    close_span(amb, ops.ngens, lat, std::move(work));
    std::vector<std::size_t> classes;
    std::vector<Vec<F>> gens;
    for (std::size_t c = 0; c < ops.nclasses; ++c)
      for (const auto& v : module_basis) {
        auto y = amb.apply(ops.ngens + c, v);
        if (lat.contains(y)) continue;
        lat.insert(y);
        close_span(amb, ops.ngens, lat, std::deque<Vec<F>>{y});
        classes.push_back(c);
        gens.push_back(std::move(y));
      }
    if (lat.rank() != module_basis.size()) throw DomainError("minimal cover does not reach the module");

    // kernel of sum_j A f_{c_j} -> current module
    std::vector<std::size_t> offset{0};
    for (auto c : classes) offset.push_back(offset.back() + prim.projectives[c].basis.dim());
    Matrix<F> map(dom, amb.dim(), offset.back());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& pb = prim.projectives[classes[j]].basis;
      for (std::size_t t = 0; t < pb.dim(); ++t) map.set_column(offset[j] + t, amb.act(pb.vector(t), gens[j]));
    }
    auto ker = kernel_basis(map);
    res.classes.push_back(classes);
    res.gens.push_back(gens);

    std::vector<Vec<F>> next;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
      auto coords = ker.vector(k);
      Vec<F> v(gens.size() * n, 0);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto& pb = prim.projectives[classes[j]].basis;
        for (std::size_t t = 0; t < pb.dim(); ++t) {
          auto c = coords[offset[j] + t];
          if (c == 0) continue;
          auto bv = pb.vector(t);
          for (std::size_t x = 0; x < n; ++x) v[j * n + x] = dom.add(v[j * n + x], dom.mul(c, bv[x]));
        }
      }
      next.push_back(std::move(v));
    }
    module_basis = std::move(next);
    amb = Ambient{};
    amb.blocks = gens.size();
    amb.block = n;
    amb.ops = left_ops;
    amb.act = [&a, n](const Vec<F>& x, const Vec<F>& v) {
      Vec<F> out(v.size(), 0);
      for (std::size_t b = 0; b < v.size() / n; ++b) {
        Vec<F> part(v.begin() + b * n, v.begin() + (b + 1) * n);
        auto img = a.mul(x, part);
        std::copy(img.begin(), img.end(), out.begin() + b * n);
      }
      return out;
    };
  }
  if (!res.terminated && module_basis.empty()) res.terminated = true;
  return res;
}

std::vector<std::size_t> ext_dims(const PrimitiveData& prim, const MinimalResolution& res,
                                  const Representation<PrimeField>& x, std::size_t max_degree) {
  const auto& a = *prim.algebra;
  const F& dom = a.domain();
  const std::size_t n = a.rank(), r = x.rank();
  if (!res.terminated && res.classes.size() < max_degree + 2)
    throw DomainError("resolution too short for the requested Ext degrees");
  std::vector<SubBasis<F>> images;  // f_c X
  for (const auto& f : prim.representatives) images.push_back(saturation(x.act(f).transpose(), r));

  auto hom_dim = [&](std::size_t i) {
    if (i >= res.classes.size()) return std::size_t{0};
    std::size_t s = 0;
    for (auto c : res.classes[i]) s += images[c].dim();
    return s;
  };
  // rank of Hom(P_{i-1}, X) -> Hom(P_i, X)
  auto delta_rank = [&](std::size_t i) {
    if (i == 0 || i >= res.classes.size()) return std::size_t{0};
    const auto& prev = res.classes[i - 1];
    const auto& cur = res.classes[i];
    const auto& gens = res.gens[i];
    std::vector<std::vector<std::optional<Matrix<F>>>> blocks(cur.size(),
                                                             std::vector<std::optional<Matrix<F>>>(prev.size()));
    for (std::size_t j = 0; j < cur.size(); ++j)
      for (std::size_t l = 0; l < prev.size(); ++l) {
        Vec<F> y(gens[j].begin() + l * n, gens[j].begin() + (l + 1) * n);
        if (!vec_is_zero(dom, y)) blocks[j][l] = x.act(y);
      }
    Lattice<F> lat(dom, cur.size() * r);
    for (std::size_t l = 0; l < prev.size(); ++l) {
      const auto& im = images[prev[l]];
      for (std::size_t t = 0; t < im.dim(); ++t) {
        auto w = im.vector(t);
        Vec<F> out(cur.size() * r, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
          if (!blocks[j][l]) continue;
          auto img = blocks[j][l]->apply(w);
          std::copy(img.begin(), img.end(), out.begin() + j * r);
        }
        lat.insert(std::move(out));
      }
    }
    return lat.rank();
  };
  std::vector<std::size_t> out;
  std::size_t rank_in = 0;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    auto rank_out = delta_rank(i + 1);
    out.push_back(hom_dim(i) - rank_out - rank_in);
    rank_in = rank_out;
  }
  return out;
}

std::optional<std::size_t> projective_dimension(const PrimitiveData& prim,
                                                const Representation<PrimeField>& m, std::size_t cap) {
  auto res = minimal_resolution(prim, m, cap + 1);
  if (!res.terminated) return std::nullopt;
  return res.classes.empty() ? 0 : res.classes.size() - 1;
}

std::vector<std::size_t> top_multiplicities(const PrimitiveData& prim, const Representation<PrimeField>& m) {
  std::vector<std::size_t> out;
  for (const auto& s : prim.simples) out.push_back(hom_rank(m, s) / hom_rank(s, s));
  return out;
}

std::vector<std::size_t> socle_multiplicities(const PrimitiveData& prim, const Representation<PrimeField>& m) {
  std::vector<std::size_t> out;
  for (const auto& s : prim.simples) out.push_back(hom_rank(s, m) / hom_rank(s, s));
  return out;
}

bool is_projective_module(const PrimitiveData& prim, const Representation<PrimeField>& m) {
  auto mult = top_multiplicities(prim, m);
  std::size_t cover = 0;
  for (std::size_t c = 0; c < mult.size(); ++c) cover += mult[c] * prim.projectives[c].basis.dim();
  return cover == m.rank();
}

bool is_injective_module(const PrimitiveData& prim, const Representation<PrimeField>& m) {
  const auto& a = *prim.algebra;
  auto mult = socle_multiplicities(prim, m);
  std::size_t hull = 0;
  for (std::size_t c = 0; c < mult.size(); ++c) {
    if (mult[c] == 0) continue;
    Lattice<F> right(a.domain(), a.rank());
    for (std::size_t b = 0; b < a.rank(); ++b) right.insert(a.mul(prim.representatives[c], a.basis_vector(b)));
    hull += mult[c] * right.rank();
  }
  return hull == m.rank();
}

std::vector<bool> projective_injective_classes(const PrimitiveData& prim) {
  const auto& a = prim.algebra;
  auto op = opposite(*a);
  std::vector<bool> out;
  for (const auto& f : prim.representatives) {
    auto inj = dual_module(left_ideal_module(op, f).module, a);
    auto top = inj.rank() - radical_submodule(inj, prim.radical_generators).rank();
    bool pi = false;
    for (std::size_t c = 0; c < prim.classes() && !pi; ++c)
      if (top == prim.simples[c].rank() && inj.rank() == prim.projectives[c].basis.dim() &&
          hom_rank(inj, prim.simples[c]) > 0)
        pi = true;
    out.push_back(pi);
  }
  return out;
}

}  // namespace qhc
