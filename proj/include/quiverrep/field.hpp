#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quiverrep/errors.hpp"

namespace qrep {

using BigInt = mpz_class;

/// Exact rationals backed by GMP. A field is a small value object that is
/// copied freely; matrices carry one so prime-field arithmetic knows its
/// modulus without per-element storage.
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem inv(const Elem& a) const { return Elem(1 / a); }
  Elem div(const Elem& a, const Elem& b) const { return Elem(a / b); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem e;
    if (e.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    e.canonicalize();
    return e;
  }

  std::string name() const { return "q"; }
  bool operator==(const RationalField&) const { return true; }
};

/// Z/p for prime p < 2^31. Elements are canonical residues in [0, p).
struct PrimeField {
  using Elem = std::uint32_t;

  std::uint32_t p = 2;

  explicit PrimeField(std::uint32_t prime = 2) : p(prime) {
    if (p < 2 || !probable_prime(p))
      throw ParseError("field modulus " + std::to_string(p) + " is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p) s -= p;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("DivisionByZero", "inverse of 0 mod p");
    return pow_mod(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer literal '" + s + "'");
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r.get_ui());
  }

  std::string name() const { return "fp:" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }

  Elem pow_mod(Elem base, std::uint64_t e) const {
    std::uint64_t r = 1, b = base % p;
    while (e) {
      if (e & 1) r = (r * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    return static_cast<Elem>(r);
  }

  static bool probable_prime(std::uint32_t n) {
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
  }
};

}  // namespace qrep
