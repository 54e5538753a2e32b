#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "qhc/cover.hpp"
#include "qhc/qh.hpp"

namespace qhc::io {

using json = nlohmann::json;

// Coefficients are written as exact strings ("3", "-1/2").
template <class D>
json vec_to_json(const D& dom, const Vec<D>& v);
template <class D>
Vec<D> vec_from_json(const D& dom, const json& j, std::size_t expected);

// {"ring", "rank", "labels", "unit", "mult": [[i, j, k, "c"], ...]} with the
// products sorted by (i, j, k).
template <class D>
json algebra_to_json(const Algebra<D>& a);
template <class D>
AlgebraPtr<D> algebra_from_json(const json& j, const D& dom);

using AnyAlgebra = std::variant<AlgebraPtr<PrimeField>, AlgebraPtr<Rationals>, AlgebraPtr<LocalIntegers>>;
AnyAlgebra load_algebra(const json& j);

// {"algebra": tag, "rank", "action": [matrix per basis element, rows of strings]}
template <class D>
json representation_to_json(const Representation<D>& m, const std::string& algebra_tag);
template <class D>
Representation<D> representation_from_json(const json& j, const AlgebraPtr<D>& a);

// {"weights", "idempotents", "above"}
template <class D>
json chain_to_json(const HeredityChain<D>& c);
template <class D>
HeredityChain<D> chain_from_json(const json& j, const AlgebraPtr<D>& a);

// Build parameters stored next to an algebra file.
struct Sidecar {
  std::string family;
  int n = 0, d = 0;
  std::string u;
  json idempotent_e;  // array of strings, or null
  json chain;         // chain object, or null
};
json sidecar_to_json(const Sidecar& s);
Sidecar sidecar_from_json(const json& j);

json report_to_json(const DimensionReport& r);
DimensionReport report_from_json(const json& j);

json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline; keys are sorted, so output is stable.
void write_json_file(const std::string& path, const json& j);

}  // namespace qhc::io
