#include "qhc/io.hpp"

#include <fstream>
#include <sstream>

namespace qhc::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw DomainError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

template <class D>
typename D::Elem parse_elem(const D& dom, const json& j) {
  if (!j.is_string()) throw DomainError("coefficients must be strings");
  try {
    return dom.parse(j.get<std::string>());
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("invalid coefficient \"" + j.get<std::string>() + "\"");
  }
}

template <class D>
json matrix_to_json(const Matrix<D>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.domain(), m.row(i)));
  return rows;
}

template <class D>
Matrix<D> matrix_from_json(const D& dom, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw DomainError("action matrices must be square of the module rank");
  Matrix<D> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_row(i, vec_from_json(dom, j[i], n));
  return m;
}

json unit_json(const UnitEvidence& u) {
  return {{"mono", u.mono}, {"split_mono", u.split_mono}, {"epi", u.epi}, {"iso", u.iso}};
}

}  // namespace

template <class D>
json vec_to_json(const D& dom, const Vec<D>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(dom.str(x));
  return out;
}

template <class D>
Vec<D> vec_from_json(const D& dom, const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw DomainError("expected a vector of length " + std::to_string(expected));
  Vec<D> v;
  for (const auto& x : j) v.push_back(parse_elem(dom, x));
  return v;
}

template <class D>
json algebra_to_json(const Algebra<D>& a) {
  const D& dom = a.domain();
  json mult = json::array();
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) {
      auto prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!dom.is_zero(prod[k])) mult.push_back({i, j, k, dom.str(prod[k])});
    }
  return {{"ring", dom.spec()}, {"rank", a.rank()}, {"labels", a.labels()},
          {"unit", vec_to_json(dom, a.unit())}, {"mult", mult}};
}

template <class D>
AlgebraPtr<D> algebra_from_json(const json& j, const D& dom) {
  if (field(j, "ring") != dom.spec()) throw DomainError("ring mismatch");
  const auto n = count_field(j, "rank");
  const auto& labels = field(j, "labels");
  if (!labels.is_array() || labels.size() != n) throw DomainError("labels must list one name per basis element");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw DomainError("labels must be strings");
    names.push_back(l.get<std::string>());
  }
  auto unit = vec_from_json(dom, field(j, "unit"), n);
  std::vector<StructureConstant<D>> quads;
  const auto& mult = field(j, "mult");
  if (!mult.is_array()) throw DomainError("mult must be an array");
  for (const auto& q : mult) {
    if (!q.is_array() || q.size() != 4) throw DomainError("mult entries are [i, j, k, coeff]");
    std::uint32_t idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!q[t].is_number_unsigned() || q[t].get<std::size_t>() >= n)
        throw DomainError("mult index out of range");
      idx[t] = q[t].get<std::uint32_t>();
    }
    quads.push_back({idx[0], idx[1], idx[2], parse_elem(dom, q[3])});
  }
  return make_algebra(dom, std::move(names), std::move(unit), quads);
}

AnyAlgebra load_algebra(const json& j) {
  const auto& ring = field(j, "ring");
  if (!ring.is_string()) throw DomainError("ring must be a string");
  auto dom = parse_ring_spec(ring.get<std::string>());
  return std::visit([&](const auto& d) -> AnyAlgebra { return algebra_from_json(j, d); }, dom);
}

template <class D>
json representation_to_json(const Representation<D>& m, const std::string& algebra_tag) {
  json acts = json::array();
  for (std::size_t b = 0; b < m.algebra()->rank(); ++b) acts.push_back(matrix_to_json(m.action(b)));
  return {{"algebra", algebra_tag}, {"rank", m.rank()}, {"action", acts}};
}

template <class D>
Representation<D> representation_from_json(const json& j, const AlgebraPtr<D>& a) {
  const auto n = count_field(j, "rank");
  const auto& acts = field(j, "action");
  if (!acts.is_array() || acts.size() != a->rank())
    throw DomainError("one action matrix per basis element is required");
  std::vector<Matrix<D>> mats;
  for (const auto& m : acts) mats.push_back(matrix_from_json(a->domain(), m, n));
  Representation<D> rep(a, n, std::move(mats));
  if (!check_representation(rep)) throw DomainError("action matrices do not define a module");
  return rep;
}

template <class D>
json chain_to_json(const HeredityChain<D>& c) {
  json idem = json::array();
  for (const auto& e : c.idempotents) idem.push_back(vec_to_json(c.algebra->domain(), e));
  json out{{"weights", c.weights}, {"idempotents", idem}};
  out["above"] = c.above.empty() ? json(nullptr) : json(c.above);
  return out;
}

template <class D>
HeredityChain<D> chain_from_json(const json& j, const AlgebraPtr<D>& a) {
  HeredityChain<D> c;
  c.algebra = a;
  const auto& w = field(j, "weights");
  const auto& idem = field(j, "idempotents");
  if (!w.is_array() || !idem.is_array() || w.size() != idem.size())
    throw DomainError("a chain needs one idempotent per weight");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_string()) throw DomainError("weights must be strings");
    c.weights.push_back(w[i].get<std::string>());
    c.idempotents.push_back(vec_from_json(a->domain(), idem[i], a->rank()));
  }
  if (j.contains("above") && !j.at("above").is_null()) {
    const auto& above = j.at("above");
    if (!above.is_array() || above.size() != w.size()) throw DomainError("above must be a square boolean table");
    for (const auto& row : above) {
      if (!row.is_array() || row.size() != w.size()) throw DomainError("above must be a square boolean table");
      std::vector<bool> r;
      for (const auto& x : row) {
        if (!x.is_boolean()) throw DomainError("above must be a square boolean table");
        r.push_back(x.get<bool>());
      }
      c.above.push_back(std::move(r));
    }
  }
  return c;
}

json sidecar_to_json(const Sidecar& s) {
  return {{"family", s.family}, {"n", s.n}, {"d", s.d}, {"u", s.u},
          {"idempotent_e", s.idempotent_e}, {"chain", s.chain}};
}

Sidecar sidecar_from_json(const json& j) {
  Sidecar s;
  try {
    s.family = field(j, "family").get<std::string>();
    s.n = field(j, "n").get<int>();
    s.d = field(j, "d").get<int>();
    s.u = field(j, "u").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed sidecar: ") + e.what());
  }
  s.idempotent_e = j.value("idempotent_e", json(nullptr));
  s.chain = j.value("chain", json(nullptr));
  return s;
}

json report_to_json(const DimensionReport& r) {
  json units = json::object();
  for (const auto& u : r.units) units[u.label][u.map] = unit_json(u);
  json evidence{{"unit", units}};
  for (const char* route : {"ext", "tor", "bass"}) {
    json rows = json::array();
    for (const auto& d : r.degrees)
      if (d.route == route) rows.push_back({d.degree, d.rank, d.torsion, d.label});
    if (!rows.empty()) evidence[route] = rows;
  }
  evidence["semisimple_certified"] = r.semisimple_certified;
  if (r.diagnostic) evidence["diagnostic"] = r.diagnostic->str();
  if (r.routes_agree) evidence["routes_agree"] = *r.routes_agree;
  if (r.tensor_free) evidence["tensor_free"] = *r.tensor_free;
  if (!r.notes.empty()) evidence["notes"] = r.notes;
  json out{{"kind", to_string(r.kind)}, {"value", r.value.str()}, {"cap", r.cap}, {"evidence", evidence}};
  if (!r.route.empty()) out["route"] = r.route;
  return out;
}

DimensionReport report_from_json(const json& j) {
  DimensionReport r;
  try {
    r.kind = parse_report_kind(field(j, "kind").get<std::string>());
    r.value = DimValue::parse(field(j, "value").get<std::string>());
    r.cap = field(j, "cap").get<long>();
    r.route = j.value("route", std::string());
    const auto& ev = field(j, "evidence");
    for (const auto& [label, maps] : field(ev, "unit").items())
      for (const auto& [map, v] : maps.items())
        r.units.push_back({label, map, v.at("mono").get<bool>(), v.at("split_mono").get<bool>(),
                           v.at("epi").get<bool>(), v.at("iso").get<bool>()});
    for (const char* route : {"ext", "tor", "bass"}) {
      if (!ev.contains(route)) continue;
      for (const auto& row : ev.at(route))
        r.degrees.push_back({row.at(3).get<std::string>(), route, row.at(0).get<std::size_t>(),
                             row.at(1).get<std::size_t>(), row.at(2).get<std::vector<std::string>>()});
    }
    r.semisimple_certified = ev.value("semisimple_certified", false);
    if (ev.contains("diagnostic")) r.diagnostic = DimValue::parse(ev.at("diagnostic").get<std::string>());
    if (ev.contains("routes_agree")) r.routes_agree = ev.at("routes_agree").get<bool>();
    if (ev.contains("tensor_free")) r.tensor_free = ev.at("tensor_free").get<bool>();
    if (ev.contains("notes")) r.notes = ev.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
  return r;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << j.dump(2) << "\n";
}

#define QHC_INSTANTIATE(D)                                                                 \
  template json vec_to_json(const D&, const Vec<D>&);                                      \
  template Vec<D> vec_from_json(const D&, const json&, std::size_t);                       \
  template json algebra_to_json(const Algebra<D>&);                                        \
  template AlgebraPtr<D> algebra_from_json(const json&, const D&);                         \
  template json representation_to_json(const Representation<D>&, const std::string&);      \
  template Representation<D> representation_from_json(const json&, const AlgebraPtr<D>&);  \
  template json chain_to_json(const HeredityChain<D>&);                                    \
  template HeredityChain<D> chain_from_json(const json&, const AlgebraPtr<D>&);

QHC_INSTANTIATE(PrimeField)
QHC_INSTANTIATE(Rationals)
QHC_INSTANTIATE(LocalIntegers)

}  // namespace qhc::io
