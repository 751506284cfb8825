#include "ladder/lambda.hpp"

#include <numeric>

namespace ladder {

QuadExt defining_equation_residual(long k, long l, const QuadExt& lambda) {
  QuadExt one(1);
  return QuadExt(Rational(k)) * (lambda + one) -
         QuadExt(Rational(l)) * (lambda.inverse() + one + lambda);
}

LadderParams solve_lambda(long k, long l) {
  if (!(k > l && l > 0))
    throw invalid_parameters("need k > l > 0, got k=" + std::to_string(k) +
                             " l=" + std::to_string(l));
  if (k > 1000000) throw invalid_parameters("k too large (max 10^6)");
  if (std::gcd(k, l) != 1)
    throw invalid_parameters("k and l must be coprime");

  // lambda = (-(k-l) + sqrt((k-l)(k+3l))) / (2(k-l))
  BigInt disc = BigInt(k - l) * BigInt(k + 3 * l);
  QuadExt lambda = QuadExt::from_raw(
      make_rational(-1, 2), make_rational(1, 2 * (k - l)), disc);

  if (!(lambda.sign() > 0 && (QuadExt(1) - lambda).sign() > 0))
    throw invalid_parameters(
        "root not in (0,1); parameters give lambda = " + lambda.text());

  // (k-l) lambda^2 + (k-l) lambda - l == 0, exactly.
  QuadExt kl(Rational(k - l));
  if (!((kl * lambda * lambda + kl * lambda - QuadExt(Rational(l))).is_zero()))
    throw std::logic_error("lambda fails its defining quadratic");
  if (!defining_equation_residual(k, l, lambda).is_zero())
    throw std::logic_error("lambda fails the (k,l) balance equation");

  return LadderParams{k, l, lambda.radicand(), lambda};
}

}  // namespace ladder
