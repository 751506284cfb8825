#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ladder/rational.hpp"

namespace ladder {

// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
//
// d is square-free and >= 1; d == 1 marks a plain rational, in which case
// b == 0. Since sqrt(d) is irrational for d >= 2, the representation is
// unique and equality is coefficient-wise. Rationals embed in every field,
// so mixed operations coerce the d == 1 operand; combining two genuinely
// quadratic elements of different fields throws field_mismatch.
class QuadExt {
 public:
  QuadExt() : d_(1) {}
  QuadExt(long v) : a_(v), d_(1) {}  // NOLINT: implicit by design
  QuadExt(const Rational& a) : a_(a), d_(1) {}
  QuadExt(const Rational& a, const Rational& b, std::int64_t d);

  // Normalizes an arbitrary radicand: factors out the square part into b.
  static QuadExt from_raw(const Rational& a, const Rational& b,
                          const BigInt& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // Exact sign of the real number a + b*sqrt(d).
  int sign() const;

  QuadExt conjugate() const;
  // a^2 - d*b^2; zero only for the zero element.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadExt inverse() const;
  QuadExt pow(long e) const;

  double to_double() const;
  // Decimal expansion truncated toward zero (never rounded up), digits >= 1.
  std::string to_decimal(int digits) const;

  // "a/b + c/d*sqrt(D)" in lowest terms; pure rationals print as "a/b".
  std::string text() const;
  static QuadExt parse(const std::string& s);

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() >= 0;
  }

  // Total order usable as a container key (lexicographic on (d, a, b)).
  static int key_compare(const QuadExt& x, const QuadExt& y);

 private:
  struct unchecked_tag {};
  QuadExt(Rational a, Rational b, std::int64_t d, unchecked_tag);
  void normalize_zero();
  static std::int64_t merge_radicand(const QuadExt& x, const QuadExt& y);

  Rational a_;
  Rational b_;
  std::int64_t d_;
};

// n = f^2 * D with D square-free; returns (f, D). n >= 1.
std::pair<BigInt, BigInt> square_free_decompose(const BigInt& n);

// Exact floor of x as an integer.
BigInt floor_to_int(const QuadExt& x);

// sign(e - sqrt(q)) for rational q >= 0, decided without extending the field.
int cmp_minus_sqrt(const QuadExt& e, const Rational& q);

// Square root within Q(sqrt(ambient_d)) if one exists (the positive root).
std::optional<QuadExt> field_sqrt(const QuadExt& x, std::int64_t ambient_d);

}  // namespace ladder
