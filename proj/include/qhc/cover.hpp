#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhc/homology.hpp"
#include "qhc/primitive.hpp"
#include "qhc/qh.hpp"

namespace qhc {

// A dimension that may be finite, -infinity, bounded below by the cap, or
// certified infinite.
struct DimValue {
  enum class Kind { finite, minus_infinity, at_least, infinite };
  Kind kind = Kind::finite;
  long value = 0;  // finite value, or the cap for at_least

  static DimValue finite(long v) { return {Kind::finite, v}; }
  static DimValue minus_infinity() { return {Kind::minus_infinity, 0}; }
  static DimValue at_least(long cap) { return {Kind::at_least, cap}; }
  static DimValue infinite() { return {Kind::infinite, 0}; }

  // "2", "-1", "minus-infinity", "at-least:8", "infinite"
  std::string str() const;
  static DimValue parse(const std::string& s);

  bool is_finite() const { return kind == Kind::finite; }
  // Reaches the cap: at_least, infinite, or finite >= cap.
  bool reaches(long cap) const;
  // Equal, or both at least the cap.
  bool agrees(const DimValue& o, long cap) const;
  bool operator==(const DimValue& o) const { return kind == o.kind && value == o.value; }
  // Total order used for minima: -inf < finite < at_least < infinite.
  bool operator<(const DimValue& o) const;
};

enum class ReportKind { domdim_module, domdim_algebra, hn_proj, hn_standard };
std::string to_string(ReportKind k);
ReportKind parse_report_kind(const std::string& s);

struct UnitEvidence {
  std::string label;  // "A", a weight, or "X"
  std::string map;    // "eta" for the unit, "phi" for the evaluation map
  bool mono = false, split_mono = false, epi = false, iso = false;
};

struct DegreeEvidence {
  std::string label;
  std::string route;  // "ext", "tor" or "bass"
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::vector<std::string> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

struct DimensionReport {
  ReportKind kind = ReportKind::domdim_module;
  DimValue value;
  long cap = 8;
  std::string route;  // authoritative route for domdim reports
  std::vector<UnitEvidence> units;
  std::vector<DegreeEvidence> degrees;
  bool semisimple_certified = false;  // the algebra measured against has zero radical
  std::optional<DimValue> diagnostic;  // the other route, when it was run
  std::optional<bool> routes_agree;
  std::optional<bool> tensor_free;     // D(FX) (x)_B FA free over the ground ring
  std::vector<std::string> notes;
};

// Recomputes the value of a report from its evidence alone.
DimValue recompute(const DimensionReport& r);

// P projective, faithful, and D(P) projective over the opposite algebra.
// Returns a failure message, empty on success.
template <class D>
std::string rqf3_failure(const Cover<D>& cover);

// A -> End_B(FA)^op is bijective.
template <class D>
bool double_centralizer_check(const Cover<D>& cover);

// Calculators sharing one free resolution of FA over B.
template <class D>
class CoverAnalysis {
 public:
  // Throws DomainError if the RQF3 checks fail.
  CoverAnalysis(Cover<D> cover, long cap = 8, std::uint64_t seed = 0);

  const Cover<D>& cover() const { return cover_; }
  long cap() const { return cap_; }
  bool b_semisimple() const { return b_semisimple_; }

  // Ext^i_B(FA, Y) for i = 0..cap.
  std::vector<HomologyGroup> ext_fa(const Representation<D>& y) const;

  DimensionReport domdim_module(const Representation<D>& x, const std::string& label = "X") const;
  DimensionReport domdim_algebra() const;
  DimensionReport hn_proj() const;
  DimensionReport hn_standard(const HeredityChain<D>& chain) const;
  DimensionReport inf_domdim_standards(const HeredityChain<D>& chain) const;

 private:
  Cover<D> cover_;
  long cap_;
  bool b_semisimple_ = false;
  FreeResolution<D> fa_res_;
  AlgebraPtr<D> b_op_;
};

// Bass-number oracle: the first degree i with Ext^i_A(S, X) != 0 for a simple
// S whose injective hull is not projective.
DimensionReport domdim_brute(const PrimitiveData& prim, const Representation<PrimeField>& x, long cap,
                             const std::string& label = "X");

// Maximum projective dimension of the simple modules.
DimValue global_dimension(const PrimitiveData& prim, long cap);

struct RigidityVerdict {
  std::vector<std::string> surviving;  // weights with F(L) != 0
  long chain_length = 0;               // longest chain in the surviving subposet
  bool equivalence = false;            // F is an equivalence
  bool consistent = false;             // hn <= chain_length or equivalence
};

RigidityVerdict rigidity_check(const Cover<PrimeField>& cover, const HeredityChain<PrimeField>& chain,
                               const DimValue& hn_standard);

struct SpechtProbe {
  std::uint32_t p = 0;
  int d = 0;
  std::size_t hom_rank = 0;  // Hom_B(F Delta((d)), F Delta((1^d)))

  bool nonzero() const { return hom_rank > 0; }
};

// Over S_{F_p}(d, d).
SpechtProbe specht_uniqueness_probe(std::uint32_t p, int d);

// For B = F_p S_d and T the sum of the permutation modules M^lambda, one per
// partition: 2 + the number of leading vanishing Ext^i_B(T, T), i = 1..cap-2.
// This equals the dominant dimension of End_B(T), Morita equivalent to S(n, d)
// for n >= d.
DimensionReport gendo_domdim(std::uint32_t p, int d, long cap);

}  // namespace qhc
