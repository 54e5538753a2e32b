#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace qhc {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

// Prime field F_p, elements are residues in [0, p).
struct PrimeField {
  using Elem = std::uint32_t;
  static constexpr bool is_field = true;

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem from_rational(const mpq_class& q) const;

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const;
  // a / b where valuation(b) <= valuation(a)
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool is_unit(Elem a) const { return a != 0; }
  int valuation(Elem a) const { return a == 0 ? kInfiniteValuation : 0; }

  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const { return from_rational(mpq_class(s)); }
  mpq_class to_rational(Elem a) const { return mpq_class(a); }
  std::string spec() const { return "f" + std::to_string(p); }
  std::uint32_t characteristic() const { return p; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// The rational numbers.
struct Rationals {
  using Elem = mpq_class;
  static constexpr bool is_field = true;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool is_unit(const Elem& a) const { return sgn(a) != 0; }
  int valuation(const Elem& a) const { return sgn(a) == 0 ? kInfiniteValuation : 0; }

  std::string str(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const;
  mpq_class to_rational(const Elem& a) const { return a; }
  std::string spec() const { return "q"; }
  std::uint32_t characteristic() const { return 0; }
  bool operator==(const Rationals&) const { return true; }
};

// Z localized at p: reduced fractions with denominator prime to p.
struct LocalIntegers {
  using Elem = mpq_class;
  static constexpr bool is_field = false;

  std::uint32_t p = 2;

  LocalIntegers() = default;
  explicit LocalIntegers(std::uint64_t prime);

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool is_unit(const Elem& a) const;
  int valuation(const Elem& a) const;

  std::string str(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const;
  mpq_class to_rational(const Elem& a) const { return a; }
  std::string spec() const { return "zloc" + std::to_string(p); }
  std::uint32_t characteristic() const { return 0; }
  bool operator==(const LocalIntegers& o) const { return p == o.p; }

  PrimeField residue_field() const { return PrimeField(p); }
  PrimeField::Elem residue(const Elem& a) const;
  // p^e as an element
  Elem prime_power(int e) const;
};

using AnyDomain = std::variant<PrimeField, Rationals, LocalIntegers>;

// "f2", "f3", ..., "q", "zloc2", ...
AnyDomain parse_ring_spec(const std::string& spec);
std::string ring_spec(const AnyDomain& d);

template <class D>
inline bool dom_equal(const D& a, const D& b) {
  return a == b;
}

}  // namespace qhc
