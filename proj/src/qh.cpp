#include "qhc/qh.hpp"

#include <algorithm>
#include <type_traits>


namespace qhc {

HeredityChain<PrimeField> reduce_mod_p(const HeredityChain<LocalIntegers>& chain,
                                       AlgebraPtr<PrimeField> reduced) {
  HeredityChain<PrimeField> out;
  out.algebra = reduced ? std::move(reduced) : reduce_mod_p(*chain.algebra);
  out.weights = chain.weights;
  out.above = chain.above;
  for (const auto& e : chain.idempotents)
    out.idempotents.push_back(reduce_mod_p(chain.algebra->domain(), e));
  return out;
}

template <class D>
HeredityChain<D> opposite_chain(const HeredityChain<D>& chain, AlgebraPtr<D> op) {
  HeredityChain<D> out = chain;
  out.algebra = op ? std::move(op) : opposite(*chain.algebra);
  return out;
}

template <class D>
StandardModule<D> standard_module(const HeredityChain<D>& chain, std::size_t k) {
  if (k >= chain.size()) throw DomainError("chain index out of range");
  StandardModule<D> s;
  s.weight = chain.weights[k];
  s.index = k;
  s.projective = left_ideal_module(chain.algebra, chain.idempotents[k]);
  const auto& p = s.projective.module;
  std::vector<Vec<D>> start;
  for (std::size_t l = 0; l < k; ++l) {
    auto act = p.act(chain.idempotents[l]);
    for (std::size_t c = 0; c < p.rank(); ++c) start.push_back(act.column(c));
  }
  auto lat = generated_submodule(p, start);
  auto split = split_submodule(p, lat.rows());
  if (!split) throw DomainError("C(" + s.weight + ") is not a direct summand of A e");
  s.kernel = std::move(split->basis);
  s.kernel_module = std::move(split->sub);
  s.delta = std::move(split->quotient);
  s.surjection = std::move(split->projection);
  return s;
}

template <class D>
std::vector<StandardModule<D>> standard_modules(const HeredityChain<D>& chain) {
  std::vector<StandardModule<D>> out;
  for (std::size_t k = 0; k < chain.size(); ++k) out.push_back(standard_module(chain, k));
  return out;
}

template <class D>
std::vector<Representation<D>> costandard_modules(const HeredityChain<D>& chain) {
  auto op = opposite_chain(chain);
  std::vector<Representation<D>> out;
  for (std::size_t k = 0; k < chain.size(); ++k)
    out.push_back(dual_module(standard_module(op, k).delta, chain.algebra));
  return out;
}

namespace {

// rank of delta(k) and of e_k delta(k) = End(delta(k))
template <class D>
struct StandardShape {
  std::vector<std::size_t> rank, top;
};

template <class D>
StandardShape<D> standard_shape(const HeredityChain<D>& chain, const std::vector<StandardModule<D>>& stds) {
  StandardShape<D> out;
  for (const auto& s : stds) {
    out.rank.push_back(s.delta.rank());
    out.top.push_back(rref(s.delta.act(chain.idempotents[s.index])).rank);
  }
  return out;
}

// Trace filtration J_k M = sum_{l <= k} A e_l M. Each layer is generated by its
// e_k-part and killed by e_l, l < k, so it is a quotient of delta(k)^m with
// m = rank e_k (J_k / J_{k-1}) once End(delta(k)) is the ground field; it is
// isomorphic to delta(k)^m exactly when the ranks match.
template <class D>
FiltrationVerdict filtration_over_field(const Representation<D>& m, const HeredityChain<D>& chain,
                                        const StandardShape<D>& shape,
                                        std::optional<std::size_t> limit) {
  FiltrationVerdict v;
  const D& dom = m.domain();
  std::vector<Vec<D>> start;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < chain.size() && prev < m.rank(); ++k) {
    if (shape.top[k] != 1) throw DomainError("End(Delta(" + chain.weights[k] + ")) is not the ground field");
    auto ek = m.act(chain.idempotents[k]);
    Lattice<D> below(dom, m.rank());
    for (const auto& x : start) below.insert(ek.apply(x));
    for (std::size_t c = 0; c < m.rank(); ++c) start.push_back(ek.column(c));
    auto layer = generated_submodule(m, start);
    start = layer.rows();
    Lattice<D> above = below;
    for (const auto& x : start) above.insert(ek.apply(x));
    const std::size_t mult = above.rank() - below.rank();
    const std::size_t r = layer.rank();
    if (mult == 0 && r == prev) continue;
    if (limit && k >= *limit) {
      v.certificate = "weight " + chain.weights[k] + " occurs but is not allowed";
      return v;
    }
    if (r - prev != mult * shape.rank[k]) {
      v.certificate = "trace layer of " + chain.weights[k] + " has rank " + std::to_string(r - prev) +
                      ", not " + std::to_string(mult) + " x " + std::to_string(shape.rank[k]);
      return v;
    }
    prev = r;
    v.layers.emplace_back(chain.weights[k], mult);
  }
  if (prev != m.rank()) {
    v.certificate = "the standard layers span rank " + std::to_string(prev) + " of " + std::to_string(m.rank());
    return v;
  }
  // J_1 M is the bottom layer; list from the top quotient down
  std::reverse(v.layers.begin(), v.layers.end());
  v.member = true;
  return v;
}

template <class D>
AxiomCheck progenerator_check(const HeredityChain<D>& chain) {
  AxiomCheck out;
  const auto& a = *chain.algebra;
  std::vector<Vec<D>> gens;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    gens.push_back(chain.idempotents[k]);
    auto r = two_sided_ideal(a, gens).rank();
    if (r <= prev) {
      out.pass = false;
      out.detail = "ideal chain does not grow at " + chain.weights[k];
      return out;
    }
    prev = r;
  }
  if (prev != a.rank()) {
    out.pass = false;
    out.detail = "sum of A e A has rank " + std::to_string(prev) + " of " + std::to_string(a.rank());
  }
  return out;
}

}  // namespace

template <class D>
FiltrationVerdict has_delta_filtration(const Representation<D>& m, const HeredityChain<D>& chain,
                                       std::optional<std::size_t> limit) {
  if constexpr (D::is_field) {
    return filtration_over_field(m, chain, standard_shape(chain, standard_modules(chain)), limit);
  } else {
    // free over Z_(p) by construction; membership decided on the residue field
    auto fchain = reduce_mod_p(chain);
    auto fm = reduce_mod_p(m, fchain.algebra);
    auto v = filtration_over_field(fm, fchain, standard_shape(fchain, standard_modules(fchain)), limit);
    v.free_over_ring = true;
    if (!v.certificate.empty()) v.certificate = "mod " + std::to_string(chain.algebra->domain().p) + ": " + v.certificate;
    return v;
  }
}

template <class D>
QhVerdict verify_split_qh(const HeredityChain<D>& chain) {
  QhVerdict v;
  auto& [ax1, ax2, ax3, ax4, ax5] = v.axioms;
  std::vector<StandardModule<D>> stds;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    try {
      stds.push_back(standard_module(chain, k));
    } catch (const DomainError& e) {
      ax1.pass = false;
      ax1.detail = e.what();
      break;
    }
  }
  if (!ax1.pass) {
    for (auto* a : {&ax2, &ax3, &ax4}) {
      a->pass = false;
      a->detail = "standard modules unavailable";
    }
  } else {
    for (std::size_t i = 0; i < stds.size() && ax2.pass; ++i)
      for (std::size_t j = 0; j < stds.size(); ++j) {
        if (i == j || chain.is_above(j, i)) continue;
        if (hom_rank(stds[i].delta, stds[j].delta) != 0) {
          ax2.pass = false;
          ax2.detail = "Hom(Delta(" + stds[i].weight + "), Delta(" + stds[j].weight + ")) != 0";
          break;
        }
      }
    for (const auto& s : stds) {
      auto r = hom_rank(s.delta, s.delta);
      if (r != 1) {
        ax3.pass = false;
        ax3.detail = "End(Delta(" + s.weight + ")) has rank " + std::to_string(r);
        break;
      }
    }
    auto check_kernels = [&](const auto& fchain, const auto& shape, auto reduce) {
      for (const auto& s : stds) {
        auto f = filtration_over_field(reduce(s.kernel_module, fchain.algebra), fchain, shape,
                                       std::optional<std::size_t>(s.index));
        bool ok = f.member;
        for (const auto& [w, mult] : f.layers) {
          (void)mult;
          for (std::size_t l = 0; l < chain.size(); ++l)
            if (chain.weights[l] == w && !chain.is_above(l, s.index)) ok = false;
        }
        if (!ok) {
          ax4.pass = false;
          ax4.detail = "C(" + s.weight + ") " + (f.certificate.empty() ? "has a layer not above it" : f.certificate);
          return;
        }
      }
    };
    if (ax3.pass) {
      if constexpr (D::is_field) {
        check_kernels(chain, standard_shape(chain, stds),
                      [](const Representation<D>& m, const AlgebraPtr<D>&) { return m; });
      } else {
        auto fchain = reduce_mod_p(chain);
        check_kernels(fchain, standard_shape(fchain, standard_modules(fchain)),
                      [](const Representation<D>& m, AlgebraPtr<PrimeField> r) {
                        return reduce_mod_p(m, std::move(r));
                      });
      }
    } else {
      ax4.pass = false;
      ax4.detail = "standard modules are not split";
    }
  }
  if constexpr (D::is_field) {
    ax5 = progenerator_check(chain);
  } else {
    // Nakayama: J + pA = A forces J = A
    ax5 = progenerator_check(reduce_mod_p(chain));
  }
  return v;
}

#define QHC_INSTANTIATE(D)                                                                     \
  template HeredityChain<D> opposite_chain(const HeredityChain<D>&, AlgebraPtr<D>);            \
  template StandardModule<D> standard_module(const HeredityChain<D>&, std::size_t);            \
  template std::vector<StandardModule<D>> standard_modules(const HeredityChain<D>&);           \
  template std::vector<Representation<D>> costandard_modules(const HeredityChain<D>&);         \
  template QhVerdict verify_split_qh(const HeredityChain<D>&);                                 \
  template FiltrationVerdict has_delta_filtration(const Representation<D>&,                    \
                                                  const HeredityChain<D>&,                     \
                                                  std::optional<std::size_t>);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
