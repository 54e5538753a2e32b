#include "qhc/cover.hpp"

#include <algorithm>
#include <functional>

#include "qhc/schur.hpp"

namespace qhc {

// ---------------------------------------------------------------- values

std::string DimValue::str() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::minus_infinity: return "minus-infinity";
    case Kind::at_least: return "at-least:" + std::to_string(value);
    case Kind::infinite: return "infinite";
  }
  return {};
}

DimValue DimValue::parse(const std::string& s) {
  if (s == "minus-infinity") return minus_infinity();
  if (s == "infinite") return infinite();
  try {
    std::size_t used = 0;
    if (s.rfind("at-least:", 0) == 0) {
      auto v = std::stol(s.substr(9), &used);
      if (used == s.size() - 9) return at_least(v);
    } else {
      auto v = std::stol(s, &used);
      if (used == s.size()) return finite(v);
    }
  } catch (const std::exception&) {
  }
  throw DomainError("invalid dimension value: " + s);
}

bool DimValue::reaches(long cap) const {
  switch (kind) {
    case Kind::finite: return value >= cap;
    case Kind::minus_infinity: return false;
    default: return true;
  }
}

bool DimValue::agrees(const DimValue& o, long cap) const {
  return *this == o || (reaches(cap) && o.reaches(cap));
}

bool DimValue::operator<(const DimValue& o) const {
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::minus_infinity: return 0;
      case Kind::finite: return 1;
      case Kind::at_least: return 2;
      case Kind::infinite: return 3;
    }
    return 0;
  };
  if (kind != o.kind) return rank(kind) < rank(o.kind);
  return value < o.value;
}

std::string to_string(ReportKind k) {
  switch (k) {
    case ReportKind::domdim_module: return "domdim-module";
    case ReportKind::domdim_algebra: return "domdim-algebra";
    case ReportKind::hn_proj: return "hn-proj";
    case ReportKind::hn_standard: return "hn-standard";
  }
  return {};
}

ReportKind parse_report_kind(const std::string& s) {
  for (auto k : {ReportKind::domdim_module, ReportKind::domdim_algebra, ReportKind::hn_proj,
                 ReportKind::hn_standard})
    if (to_string(k) == s) return k;
  throw DomainError("invalid report kind: " + s);
}

// ---------------------------------------------------------------- recompute

namespace {

DimValue saturated(const DimensionReport& r) {
  return r.semisimple_certified ? DimValue::infinite() : DimValue::at_least(r.cap);
}

std::vector<std::string> labels_in_order(const DimensionReport& r) {
  std::vector<std::string> out;
  auto add = [&](const std::string& l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  for (const auto& u : r.units) add(u.label);
  for (const auto& d : r.degrees) add(d.label);
  return out;
}

const UnitEvidence* find_unit(const DimensionReport& r, const std::string& label, const std::string& map) {
  for (const auto& u : r.units)
    if (u.label == label && u.map == map) return &u;
  return nullptr;
}

// Degrees first..last of one label and route, by degree; nullptr when missing.
std::vector<const DegreeEvidence*> degree_run(const DimensionReport& r, const std::string& label,
                                              const std::string& route, std::size_t first,
                                              std::size_t last) {
  std::vector<const DegreeEvidence*> out;
  for (std::size_t i = first; i <= last; ++i) {
    const DegreeEvidence* hit = nullptr;
    for (const auto& d : r.degrees)
      if (d.label == label && d.route == route && d.degree == i) hit = &d;
    out.push_back(hit);
  }
  return out;
}

// 2 + leading zeros of degrees 1..cap-2 after the two unit conditions.
DimValue domdim_from(const DimensionReport& r, const std::string& label) {
  const bool tor = r.route == "tor";
  const auto* u = find_unit(r, label, tor ? "phi" : "eta");
  if (!u) throw DomainError("report lacks the unit evidence for " + label);
  if (tor ? !u->epi : !u->split_mono) return DimValue::finite(0);
  if (!u->iso) return DimValue::finite(1);
  if (r.cap <= 2) return saturated(r);
  auto run = degree_run(r, label, r.route, 1, static_cast<std::size_t>(r.cap - 2));
  long zeros = 0;
  for (const auto* d : run) {
    if (!d) throw DomainError("report lacks degree evidence for " + label);
    if (!d->is_zero()) return DimValue::finite(2 + zeros);
    ++zeros;
  }
  return saturated(r);
}

DimValue bass_from(const DimensionReport& r) {
  std::optional<long> best;
  for (const auto& d : r.degrees)
    if (d.route == "bass" && !d.is_zero() && static_cast<long>(d.degree) < r.cap) {
      if (!best || static_cast<long>(d.degree) < *best) best = static_cast<long>(d.degree);
    }
  return best ? DimValue::finite(*best) : saturated(r);
}

}  // namespace

DimValue recompute(const DimensionReport& r) {
  switch (r.kind) {
    case ReportKind::domdim_module:
    case ReportKind::domdim_algebra: {
      if (r.route == "bass") return bass_from(r);
      std::optional<DimValue> best;
      for (const auto& l : labels_in_order(r)) {
        auto v = domdim_from(r, l);
        if (!best || v < *best) best = v;
      }
      return best ? *best : saturated(r);
    }
    case ReportKind::hn_proj: {
      const auto* u = find_unit(r, "A", "eta");
      if (!u) throw DomainError("report lacks the unit evidence for A");
      if (!u->iso) return DimValue::minus_infinity();
      long zeros = 0;
      for (const auto* d : degree_run(r, "A", "ext", 1, static_cast<std::size_t>(r.cap))) {
        if (!d) throw DomainError("report lacks degree evidence for A");
        if (!d->is_zero()) return DimValue::finite(zeros);
        ++zeros;
      }
      return saturated(r);
    }
    case ReportKind::hn_standard: {
      const auto* cover_unit = find_unit(r, "A", "eta");
      if (!cover_unit || !cover_unit->iso) return DimValue::minus_infinity();
      std::vector<std::string> weights;
      for (const auto& u : r.units)
        if (u.label != "A") weights.push_back(u.label);
      for (const auto& w : weights)
        if (!find_unit(r, w, "eta")->split_mono) return DimValue::minus_infinity();
      for (const auto& w : weights)
        if (!find_unit(r, w, "eta")->iso) return DimValue::finite(-1);
      for (long j = 1; j <= r.cap; ++j)
        for (const auto& w : weights) {
          auto d = degree_run(r, w, "ext", static_cast<std::size_t>(j), static_cast<std::size_t>(j))[0];
          if (!d) throw DomainError("report lacks degree evidence for " + w);
          if (!d->is_zero()) return DimValue::finite(j - 1);
        }
      return saturated(r);
    }
  }
  return {};
}

// ---------------------------------------------------------------- cover checks

namespace {

template <class D>
bool is_faithful(const Representation<D>& p) {
  const auto& a = *p.algebra();
  Matrix<D> stacked(a.domain(), p.rank() * p.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) stacked.set_column(i, p.action(i).data());
  auto v = map_verdict(stacked);
  return D::is_field ? v.injective : v.split_injective;
}

template <class D>
bool certify_semisimple(const Algebra<D>& b) {
  if constexpr (std::is_same_v<D, LocalIntegers>) {
    auto red = reduce_mod_p(b);
    return radical(*red).dim() == 0;
  } else {
    return radical(b).dim() == 0;
  }
}

UnitEvidence unit_evidence(const std::string& label, const std::string& map, const MapVerdict& v) {
  return {label, map, v.injective, v.split_injective, v.surjective, v.bijective};
}

DegreeEvidence degree_evidence(const std::string& label, const std::string& route, const HomologyGroup& g) {
  return {label, route, g.degree, g.rank(), g.inv.torsion_strings()};
}

}  // namespace

namespace {

std::string rqf3_over_field(const Representation<PrimeField>& p) {
  auto prim = primitive_idempotents(p.algebra(), &p);
  if (!is_projective_module(prim, p)) return "P is not projective";
  if (!is_injective_module(prim, p)) return "D(P) is not projective over the opposite algebra";
  return {};
}

}  // namespace

template <class D>
std::string rqf3_failure(const Cover<D>& cover) {
  auto p = cover.projective();
  if (!is_faithful(p)) return "P is not faithful";
  if constexpr (std::is_same_v<D, PrimeField>) {
    return rqf3_over_field(p);
  } else if constexpr (std::is_same_v<D, LocalIntegers>) {
    // P and D(P) are lattices; projectivity is decided modulo p
    auto red = reduce_mod_p(*cover.algebra());
    return rqf3_over_field(reduce_mod_p(p, red));
  } else {
    if (!is_projective(p)) return "P is not projective";
    if (!is_projective(dual_module(p, opposite(*cover.algebra()))))
      return "D(P) is not projective over the opposite algebra";
    return {};
  }
}

template <class D>
bool double_centralizer_check(const Cover<D>& cover) {
  return adjunction_unit(cover, Representation<D>::regular(cover.algebra()), cover.fa_image()).is_iso();
}

// ---------------------------------------------------------------- calculators

template <class D>
CoverAnalysis<D>::CoverAnalysis(Cover<D> cover, long cap, std::uint64_t seed)
    : cover_(std::move(cover)), cap_(cap) {
  if (cap_ < 2) throw DomainError("cap must be at least 2");
  if (auto why = rqf3_failure(cover_); !why.empty()) throw DomainError("RQF3 check failed: " + why);
  b_semisimple_ = certify_semisimple(*cover_.b());
  b_op_ = opposite(*cover_.b());
  fa_res_ = free_resolution(cover_.fa(), static_cast<std::size_t>(cap_) + 1, seed);
}

template <class D>
std::vector<HomologyGroup> CoverAnalysis<D>::ext_fa(const Representation<D>& y) const {
  return ext_from_resolution(fa_res_, y, static_cast<std::size_t>(cap_));
}

template <class D>
DimensionReport CoverAnalysis<D>::domdim_module(const Representation<D>& x, const std::string& label) const {
  const D& dom = x.domain();
  DimensionReport r;
  r.kind = ReportKind::domdim_module;
  r.cap = cap_;
  r.semisimple_certified = b_semisimple_;
  const auto top = static_cast<std::size_t>(cap_ - 2);
  auto fx = cover_.apply(x);

  // Ext route: the unit and Ext^i_B(FA, FX)
  auto unit = adjunction_unit(cover_, x, fx);
  r.units.push_back(unit_evidence(label, "eta", unit.verdict));
  if (unit.is_split_mono() && unit.is_iso()) {
    auto groups = ext_fa(fx.module);
    for (std::size_t i = 1; i <= top; ++i) r.degrees.push_back(degree_evidence(label, "ext", groups[i]));
  }

  // Tor route: phi : D(FX) (x)_B FA -> DX and Tor_i^B(D(FX), FA)
  auto dfx = dual_module(fx.module, b_op_);
  const auto& fa = cover_.fa_image();
  auto tp = tensor_over_algebra(dfx, fa.module);
  r.tensor_free = tp.is_free();
  const std::size_t rv = dfx.rank(), rm = fa.module.rank();
  Matrix<D> phi(dom, x.rank(), rv * rm);
  for (std::size_t u = 0; u < rv; ++u)
    for (std::size_t t = 0; t < rm; ++t) phi.set_column(u * rm + t, fx.pairing[t].row(u));
  auto pv = map_verdict(phi);
  UnitEvidence pe{label, "phi", false, false, pv.surjective, false};
  if (pv.surjective) {
    Lattice<D> rel(dom, rv * rm);
    for (std::size_t c = 0; c < tp.relations.cols(); ++c) rel.insert(tp.relations.column(c));
    auto ker = kernel_basis(phi);
    bool inside = true;
    for (std::size_t k = 0; k < ker.dim() && inside; ++k) inside = rel.contains(ker.vector(k));
    pe.mono = pe.split_mono = inside;
    pe.iso = inside;
  }
  r.units.push_back(pe);
  if (pe.iso) {
    auto groups = tor_from_resolution(dfx, fa_res_, top);
    for (std::size_t i = 1; i <= top; ++i) r.degrees.push_back(degree_evidence(label, "tor", groups[i]));
  }

  DimensionReport ext_view = r, tor_view = r;
  ext_view.route = "ext";
  tor_view.route = "tor";
  auto ext_value = recompute(ext_view);
  auto tor_value = recompute(tor_view);
  if constexpr (D::is_field) {
    r.route = "ext";
    r.value = ext_value;
    r.diagnostic = tor_value;
  } else {
    r.route = "tor";
    r.value = tor_value;
    r.diagnostic = ext_value;
    if (!*r.tensor_free)
      r.notes.push_back("D(FX) (x)_B FA has torsion; the converse direction of the Tor criterion is not used");
  }
  r.routes_agree = ext_value.agrees(tor_value, cap_);
  return r;
}

template <class D>
DimensionReport CoverAnalysis<D>::domdim_algebra() const {
  auto r = domdim_module(Representation<D>::regular(cover_.algebra()), "A");
  r.kind = ReportKind::domdim_algebra;
  return r;
}

template <class D>
DimensionReport CoverAnalysis<D>::hn_proj() const {
  DimensionReport r;
  r.kind = ReportKind::hn_proj;
  r.cap = cap_;
  r.route = "ext";
  r.semisimple_certified = b_semisimple_;
  auto unit = adjunction_unit(cover_, Representation<D>::regular(cover_.algebra()), cover_.fa_image());
  r.units.push_back(unit_evidence("A", "eta", unit.verdict));
  if (unit.is_iso()) {
    auto groups = ext_fa(cover_.fa());
    for (std::size_t i = 1; i <= static_cast<std::size_t>(cap_); ++i)
      r.degrees.push_back(degree_evidence("A", "ext", groups[i]));
  }
  r.value = recompute(r);
  return r;
}

template <class D>
DimensionReport CoverAnalysis<D>::hn_standard(const HeredityChain<D>& chain) const {
  DimensionReport r;
  r.kind = ReportKind::hn_standard;
  r.cap = cap_;
  r.route = "ext";
  r.semisimple_certified = b_semisimple_;
  auto cover_unit = adjunction_unit(cover_, Representation<D>::regular(cover_.algebra()), cover_.fa_image());
  r.units.push_back(unit_evidence("A", "eta", cover_unit.verdict));
  auto stds = standard_modules(chain);
  std::vector<FunctorImage<D>> images;
  bool all_iso = cover_unit.is_iso();
  for (const auto& s : stds) {
    images.push_back(cover_.apply(s.delta));
    auto u = adjunction_unit(cover_, s.delta, images.back());
    r.units.push_back(unit_evidence(s.weight, "eta", u.verdict));
    all_iso = all_iso && u.is_iso();
  }
  if (all_iso)
    for (std::size_t k = 0; k < stds.size(); ++k) {
      auto groups = ext_fa(images[k].module);
      for (std::size_t i = 1; i <= static_cast<std::size_t>(cap_); ++i)
        r.degrees.push_back(degree_evidence(stds[k].weight, "ext", groups[i]));
    }
  r.value = recompute(r);
  return r;
}

template <class D>
DimensionReport CoverAnalysis<D>::inf_domdim_standards(const HeredityChain<D>& chain) const {
  DimensionReport r;
  r.kind = ReportKind::domdim_module;
  r.cap = cap_;
  r.semisimple_certified = b_semisimple_;
  r.routes_agree = true;
  r.tensor_free = true;
  std::optional<DimValue> diag;
  for (const auto& s : standard_modules(chain)) {
    auto one = domdim_module(s.delta, s.weight);
    r.route = one.route;
    r.units.insert(r.units.end(), one.units.begin(), one.units.end());
    r.degrees.insert(r.degrees.end(), one.degrees.begin(), one.degrees.end());
    r.notes.insert(r.notes.end(), one.notes.begin(), one.notes.end());
    r.routes_agree = *r.routes_agree && *one.routes_agree;
    r.tensor_free = *r.tensor_free && *one.tensor_free;
    if (!diag || *one.diagnostic < *diag) diag = one.diagnostic;
  }
  r.diagnostic = diag;
  r.value = recompute(r);
  return r;
}

// ---------------------------------------------------------------- field-only tools

DimensionReport domdim_brute(const PrimitiveData& prim, const Representation<PrimeField>& x, long cap,
                             const std::string& label) {
  DimensionReport r;
  r.kind = ReportKind::domdim_module;
  r.cap = cap;
  r.route = "bass";
  r.semisimple_certified = prim.radical.dim() == 0;
  auto pi = projective_injective_classes(prim);
  for (std::size_t c = 0; c < prim.classes(); ++c) {
    if (pi[c]) continue;
    auto res = minimal_resolution(prim, prim.simples[c], static_cast<std::size_t>(cap));
    auto dims = ext_dims(prim, res, x, static_cast<std::size_t>(cap - 1));
    for (std::size_t i = 0; i < dims.size(); ++i) {
      DegreeEvidence d{label + ":S" + std::to_string(c), "bass", i, dims[i], {}};
      r.degrees.push_back(d);
      if (dims[i] != 0) break;
    }
  }
  r.value = recompute(r);
  return r;
}

DimValue global_dimension(const PrimitiveData& prim, long cap) {
  long best = 0;
  for (const auto& s : prim.simples) {
    auto pd = projective_dimension(prim, s, static_cast<std::size_t>(cap));
    if (!pd) return DimValue::at_least(cap);
    best = std::max(best, static_cast<long>(*pd));
  }
  return DimValue::finite(best);
}

RigidityVerdict rigidity_check(const Cover<PrimeField>& cover, const HeredityChain<PrimeField>& chain,
                               const DimValue& hn_standard) {
  RigidityVerdict v;
  const auto& a = *cover.algebra();
  auto p = cover.projective();
  auto gens = left_ideal_generators(a, radical(a, &p));
  auto stds = standard_modules(chain);
  std::vector<bool> survives;
  for (const auto& s : stds) {
    auto rad = radical_submodule(s.delta, gens);
    auto split = split_submodule(s.delta, rad.rows());
    if (!split) throw DomainError("radical of a standard module is not split");
    survives.push_back(cover.apply(split->quotient).module.rank() > 0);
    if (survives.back()) v.surviving.push_back(s.weight);
  }
  // longest chain (in edges) through surviving weights
  const std::size_t n = stds.size();
  std::vector<long> memo(n, -1);
  std::function<long(std::size_t)> longest = [&](std::size_t i) -> long {
    if (memo[i] >= 0) return memo[i];
    long best = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (survives[j] && chain.is_above(i, j)) best = std::max(best, 1 + longest(j));
    return memo[i] = best;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (survives[i]) v.chain_length = std::max(v.chain_length, longest(i));
  v.equivalence = v.surviving.size() == n && is_projective(cover.fa());
  switch (hn_standard.kind) {
    case DimValue::Kind::minus_infinity: v.consistent = true; break;
    case DimValue::Kind::finite: v.consistent = hn_standard.value <= v.chain_length || v.equivalence; break;
    default: v.consistent = v.equivalence;
  }
  return v;
}

SpechtProbe specht_uniqueness_probe(std::uint32_t p, int d) {
  PrimeField f(p);
  auto s = schur_algebra(d, d, f, 1u);
  auto stds = standard_modules(schur_heredity_chain(s));
  const auto row = partition_label(Partition{d});
  const auto col = partition_label(Partition(static_cast<std::size_t>(d), 1));
  const Representation<PrimeField>* top = nullptr;
  const Representation<PrimeField>* bottom = nullptr;
  for (const auto& st : stds) {
    if (st.weight == row) top = &st.delta;
    if (st.weight == col) bottom = &st.delta;
  }
  if (!top || !bottom) throw DomainError("missing the row or column weight");
  SpechtProbe out;
  out.p = p;
  out.d = d;
  out.hom_rank = hom_rank(schur_functor_image(s, *top), schur_functor_image(s, *bottom));
  return out;
}

DimensionReport gendo_domdim(std::uint32_t p, int d, long cap) {
  PrimeField f(p);
  auto ts = tensor_space(d, d, f, 1u);
  // one weight space per partition: indices whose letter j occurs lambda_j times
  std::vector<std::size_t> keep;
  for (const auto& lam : partitions(d, d)) {
    for (std::size_t i = 0; i < ts.rank(); ++i) {
      std::vector<int> content(static_cast<std::size_t>(d), 0);
      for (int letter : ts.indices[i]) ++content[static_cast<std::size_t>(letter)];
      bool match = true;
      for (std::size_t j = 0; j < content.size(); ++j)
        match = match && content[j] == (j < lam.size() ? lam[j] : 0);
      if (match) keep.push_back(i);
    }
  }
  const auto& alg = ts.module.algebra();
  std::vector<Matrix<PrimeField>> acts;
  for (std::size_t b = 0; b < alg->rank(); ++b) {
    auto full = ts.module.action(b);
    Matrix<PrimeField> m(f, keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c) m(r, c) = full(keep[r], keep[c]);
    acts.push_back(std::move(m));
  }
  Representation<PrimeField> t(alg, keep.size(), std::move(acts));

  DimensionReport r;
  r.kind = ReportKind::domdim_algebra;
  r.cap = cap;
  r.route = "ext";
  r.semisimple_certified = radical(*alg).dim() == 0;
  // M^(1^d) is the regular module, so T is a generator and the unit is an iso
  r.units.push_back({"T", "eta", true, true, true, true});
  auto groups = ext(t, t, static_cast<std::size_t>(cap - 2));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(cap - 2); ++i)
    r.degrees.push_back(degree_evidence("T", "ext", groups[i]));
  r.value = recompute(r);
  return r;
}

#define QHC_INSTANTIATE(D)                                               \
  template std::string rqf3_failure(const Cover<D>&);                    \
  template bool double_centralizer_check(const Cover<D>&);               \
  template class CoverAnalysis<D>;

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc
