#include "ladder/quadext.hpp"

#include <cmath>
#include <cstdlib>

namespace ladder {

namespace {

// Cheap square-freeness guard for radicands handed in directly.
void require_square_free_small(std::int64_t d) {
  if (d < 1) throw invalid_parameters("radicand must be >= 1");
  for (std::int64_t p = 2; p * p <= d && p <= 4096; ++p) {
    if (d % (p * p) == 0)
      throw invalid_parameters("radicand not square-free: " +
                               std::to_string(d));
  }
}

// floor(B*sqrt(d)) for integer B; d square-free so B*sqrt(d) is never an
// integer unless B == 0.
BigInt floor_int_times_sqrt(const BigInt& B, std::int64_t d) {
  if (B == 0) return BigInt(0);
  BigInt s = isqrt(BigInt(d) * B * B);
  if (B > 0) return s;
  return -s - 1;
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, std::int64_t d)
    : a_(a), b_(b), d_(d) {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    return;
  }
  require_square_free_small(d_);
  normalize_zero();
}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d, unchecked_tag)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  normalize_zero();
}

void QuadExt::normalize_zero() {
  if (b_ == 0) d_ = 1;
}

QuadExt QuadExt::from_raw(const Rational& a, const Rational& b,
                          const BigInt& radicand) {
  if (radicand < 0) throw invalid_parameters("negative radicand");
  if (radicand == 0 || b == 0) return QuadExt(a);
  auto [f, d] = square_free_decompose(radicand);
  if (d == 1) return QuadExt(a + b * Rational(f));
  if (!d.fits_slong_p())
    throw invalid_parameters("radicand too large: " + d.get_str());
  return QuadExt(a, b * Rational(f), d.get_si(), unchecked_tag{});
}

std::int64_t QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1) return x.d_;
  throw field_mismatch("radicand mismatch: " + std::to_string(x.d_) + " vs " +
                       std::to_string(y.d_));
}

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Mixed signs: |a| vs |b|*sqrt(d), i.e. a^2 vs d*b^2.
  int c = cmp(a_ * a_, Rational(d_) * b_ * b_);
  if (c == 0)
    throw std::logic_error("sqrt(d) rational? broken radicand invariant");
  return c > 0 ? sa : sb;
}

QuadExt QuadExt::conjugate() const {
  return QuadExt(a_, -b_, d_, unchecked_tag{});
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n == 0) throw division_by_zero("inverse of zero");
  return QuadExt(a_ / n, -b_ / n, d_, unchecked_tag{});
}

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExt acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

QuadExt QuadExt::operator-() const {
  return QuadExt(-a_, -b_, d_, unchecked_tag{});
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize_zero();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize_zero();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  std::int64_t d = merge_radicand(*this, o);
  Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  normalize_zero();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_decimal(int digits) const {
  if (digits < 1) throw invalid_parameters("digits must be >= 1");
  int s = sign();
  QuadExt v = s < 0 ? -*this : *this;
  // |v| * 10^digits = (P + B*sqrt(d)) / Q over integers, Q > 0.
  BigInt ten_d;
  mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt qa = v.a_.get_den(), qb = v.b_.get_den();
  BigInt P = v.a_.get_num() * ten_d * qb;
  BigInt B = v.b_.get_num() * ten_d * qa;
  BigInt Q = qa * qb;
  BigInt scaled;
  mpz_fdiv_q(scaled.get_mpz_t(),
             BigInt(P + floor_int_times_sqrt(B, v.d_)).get_mpz_t(),
             Q.get_mpz_t());
  BigInt ipart = scaled / ten_d;
  BigInt frac = scaled % ten_d;
  std::string f = frac.get_str();
  f.insert(0, static_cast<size_t>(digits) - f.size(), '0');
  std::string out = ipart.get_str() + "." + f;
  if (s < 0 && scaled != 0) out.insert(0, "-");
  return out;
}

std::string QuadExt::text() const {
  if (b_ == 0) return q_to_string(a_);
  std::string tail =
      q_to_string(abs(b_)) + "*sqrt(" + std::to_string(d_) + ")";
  if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + tail;
  return q_to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + tail;
}

QuadExt QuadExt::parse(const std::string& s) {
  // Grammar: rat | [rat (+|-)] rat "*sqrt(" int ")"  with optional spaces.
  auto fail = [&]() -> QuadExt {
    throw parse_error("bad field element: '" + s + "'");
  };
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') t.push_back(c);
  if (t.empty()) return fail();

  auto star = t.find("*sqrt(");
  if (star == std::string::npos) return QuadExt(q_from_string(t));

  if (t.back() != ')') return fail();
  std::string dstr = t.substr(star + 6, t.size() - star - 7);
  if (dstr.empty()) return fail();
  std::int64_t d = 0;
  try {
    d = std::stoll(dstr);
  } catch (...) {
    return fail();
  }

  // Split the part before "*sqrt(" into "a+b" / "a-b" / "b".
  std::string head = t.substr(0, star);
  if (head.empty()) return fail();
  // Scan for a top-level +/- that separates the two coefficients (skip a
  // leading sign and signs right after another operator).
  size_t split = std::string::npos;
  for (size_t i = 1; i < head.size(); ++i) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' &&
        head[i - 1] != '+' && head[i - 1] != '-')
      split = i;
  }
  Rational a(0), b;
  if (split == std::string::npos) {
    b = q_from_string(head);
  } else {
    a = q_from_string(head.substr(0, split));
    std::string bs = head.substr(split + 1);
    if (bs.empty()) return fail();
    b = q_from_string(bs);
    if (head[split] == '-') b = -b;
  }
  return QuadExt(a, b, d);
}

int QuadExt::key_compare(const QuadExt& x, const QuadExt& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c;
  return cmp(x.b_, y.b_);
}

std::pair<BigInt, BigInt> square_free_decompose(const BigInt& n) {
  if (n < 1) throw invalid_parameters("square_free_decompose needs n >= 1");
  if (n > BigInt("100000000000000"))
    throw invalid_parameters("radicand too large to factor: " + n.get_str());
  BigInt m = n, f = 1, d = 1;
  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e & 1) d *= p;
    for (int i = 0; i < e / 2; ++i) f *= p;
  };
  strip(2);
  strip(3);
  for (BigInt p = 5; p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) d *= m;  // leftover prime
  return {f, d};
}

BigInt floor_to_int(const QuadExt& x) {
  BigInt qa = x.a().get_den(), qb = x.b().get_den();
  BigInt P = x.a().get_num() * qb;
  BigInt B = x.b().get_num() * qa;
  BigInt Q = qa * qb;
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(),
             BigInt(P + floor_int_times_sqrt(B, x.radicand())).get_mpz_t(),
             Q.get_mpz_t());
  return r;
}

int cmp_minus_sqrt(const QuadExt& e, const Rational& q) {
  if (q < 0) throw invalid_parameters("cmp_minus_sqrt needs q >= 0");
  int se = e.sign();
  if (q == 0) return se;
  if (se <= 0) return -1;
  return (e * e - QuadExt(q)).sign();
}

std::optional<QuadExt> field_sqrt(const QuadExt& x, std::int64_t ambient_d) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return QuadExt(0);
  const Rational& u = x.a();
  const Rational& v = x.b();
  if (v == 0) {
    if (auto r = exact_sqrt_q(u)) return QuadExt(*r);
    if (ambient_d > 1) {
      // sqrt(u) = y*sqrt(d) iff u/d is a rational square.
      if (auto y = exact_sqrt_q(u / Rational(ambient_d)))
        return QuadExt(Rational(0), *y, ambient_d);
    }
    return std::nullopt;
  }
  std::int64_t d = x.radicand();
  auto n = exact_sqrt_q(x.norm());  // u^2 - d v^2 must be a rational square
  if (!n) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rational top = pick == 0 ? Rational(u + *n) : Rational(u - *n);
    Rational ysq = top / (Rational(2) * Rational(d));
    auto y = exact_sqrt_q(ysq);
    if (!y || *y == 0) continue;
    Rational xc = v / (Rational(2) * *y);
    QuadExt root(xc, *y, d);
    if (root * root == x) return root.sign() > 0 ? root : -root;
  }
  return std::nullopt;
}

}  // namespace ladder
