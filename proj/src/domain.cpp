#include "qhc/domain.hpp"

#include <cctype>

namespace qhc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t prime) {
  if (!is_prime(prime) || prime >= (1ULL << 31))
    throw DomainError("not a supported prime: " + std::to_string(prime));
  p = static_cast<std::uint32_t>(prime);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p));
  if (num < 0) num += p;
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + spec());
  // extended Euclid on (a, p)
  long long r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero in q");
  return 1 / a;
}

Rationals::Elem Rationals::parse(const std::string& s) const {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

LocalIntegers::LocalIntegers(std::uint64_t prime) {
  if (!is_prime(prime) || prime >= (1ULL << 31))
    throw DomainError("not a supported prime: " + std::to_string(prime));
  p = static_cast<std::uint32_t>(prime);
}

LocalIntegers::Elem LocalIntegers::from_rational(const mpq_class& q) const {
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p))
    throw DomainError(q.get_str() + " is not in " + spec());
  return q;
}

bool LocalIntegers::is_unit(const Elem& a) const {
  return sgn(a) != 0 && !mpz_divisible_ui_p(a.get_num().get_mpz_t(), p);
}

int LocalIntegers::valuation(const Elem& a) const {
  if (sgn(a) == 0) return kInfiniteValuation;
  mpz_class n = abs(a.get_num());
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

LocalIntegers::Elem LocalIntegers::inv(const Elem& a) const {
  if (!is_unit(a)) throw DomainError(a.get_str() + " is not a unit in " + spec());
  return 1 / a;
}

LocalIntegers::Elem LocalIntegers::div(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw DomainError("division by zero in " + spec());
  Elem q = a / b;
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p))
    throw DomainError("inexact division in " + spec());
  return q;
}

LocalIntegers::Elem LocalIntegers::parse(const std::string& s) const {
  Rationals q;
  return from_rational(q.parse(s));
}

PrimeField::Elem LocalIntegers::residue(const Elem& a) const {
  return PrimeField(p).from_rational(a);
}

LocalIntegers::Elem LocalIntegers::prime_power(int e) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return Elem(r);
}

AnyDomain parse_ring_spec(const std::string& spec) {
  auto number = [&](std::size_t from) -> std::uint64_t {
    if (from >= spec.size()) throw DomainError("malformed ring spec: " + spec);
    for (std::size_t i = from; i < spec.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(spec[i])))
        throw DomainError("malformed ring spec: " + spec);
    if (spec.size() - from > 10) throw DomainError("prime too large: " + spec);
    return std::stoull(spec.substr(from));
  };
  if (spec == "q") return Rationals{};
  if (spec.rfind("zloc", 0) == 0) return LocalIntegers(number(4));
  if (spec.rfind("f", 0) == 0) return PrimeField(number(1));
  throw DomainError("unknown ring spec: " + spec);
}

std::string ring_spec(const AnyDomain& d) {
  return std::visit([](const auto& x) { return x.spec(); }, d);
}

}  // namespace qhc
