#pragma once

#include "ladder/quadext.hpp"

namespace ladder {

// Parameter pair (k, l) with k > l > 0 coprime, together with the scaling
// factor lambda: the positive root of (k-l)x^2 + (k-l)x - l = 0, required to
// lie strictly in (0, 1). radicand is lambda's field (1 when lambda turned
// out rational, e.g. (13,4) -> 1/3).
struct LadderParams {
  long k = 0;
  long l = 0;
  std::int64_t radicand = 1;
  QuadExt lambda;

  QuadExt lambda_inv() const { return lambda.inverse(); }
  // k*(1+lambda), the horizontal multi-twist shear.
  QuadExt shear() const { return QuadExt(Rational(k)) * (QuadExt(1) + lambda); }
};

// Throws invalid_parameters unless k > l > 0, gcd(k,l) == 1, k <= 10^6 and
// the root lands in (0,1). The returned lambda satisfies the defining
// quadratic exactly (asserted).
LadderParams solve_lambda(long k, long l);

// k*(lambda+1) - l*(1/lambda + 1 + lambda); zero iff lambda is a root.
QuadExt defining_equation_residual(long k, long l, const QuadExt& lambda);

}  // namespace ladder
