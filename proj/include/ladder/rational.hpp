#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ladder/error.hpp"

namespace ladder {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class keeps den > 0 and gcd(num, den) == 1 once canonicalized;
// every helper below returns canonical values.

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

inline BigInt floor_q(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_q(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Floor of the integer square root; n must be >= 0.
inline BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

inline std::optional<Rational> exact_sqrt_q(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto n = exact_sqrt(BigInt(q.get_num()));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(BigInt(q.get_den()));
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

inline Rational pow_q(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw division_by_zero("0^negative");
    return pow_q(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), canonical.
inline Rational gcd_q(const Rational& x, const Rational& y) {
  BigInt n;
  mpz_gcd(n.get_mpz_t(),
          BigInt(x.get_num() * y.get_den()).get_mpz_t(),
          BigInt(y.get_num() * x.get_den()).get_mpz_t());
  return make_rational(n, x.get_den() * y.get_den());
}

inline std::string q_to_string(const Rational& q) { return q.get_str(); }

inline Rational q_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw division_by_zero("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace ladder
