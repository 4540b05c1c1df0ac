#pragma once

// Dimension of Harm_k(S^d) and Gegenbauer polynomials g_{k,d} normalized
// to g_{k,d}(1) = 1, evaluated exactly.

#include "sphcode/scalars.hpp"

#include <stdexcept>
#include <vector>

namespace sphcode {

// dim Harm_k(S^d) = ((2k+d-1)/(k+d-1)) * C(d+k-1, k); always an integer.
inline BigInt harm_dim(int k, int d) {
  if (k < 1 || d < 2) throw std::invalid_argument("harm_dim: need k >= 1, d >= 2");
  BigInt binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (d + k - i) / i;
  BigInt num = binom * (2 * k + d - 1);
  if (num % (k + d - 1) != 0) throw std::logic_error("harm_dim: non-integral result");
  return num / (k + d - 1);
}

// Degree-2 closed form: g_{2,d}(t) = ((d+1) t^2 - 1) / d.
inline QuadScalar gegenbauer2(int d, const QuadScalar& t) {
  if (d < 2) throw std::invalid_argument("gegenbauer2: need d >= 2");
  return (QuadScalar(d + 1) * t * t - QuadScalar(1)) / QuadScalar(d);
}

// g_{k,d}(t) via the classical three-term recurrence with lambda = (d-1)/2:
//   (n+1) C_{n+1} = 2(n+lambda) t C_n - (n+2lambda-1) C_{n-1},
// normalized by the same recurrence evaluated at t = 1.
inline QuadScalar gegenbauer(int k, int d, const QuadScalar& t) {
  if (k < 0 || d < 2) throw std::invalid_argument("gegenbauer: need k >= 0, d >= 2");
  if (k == 0) return QuadScalar(1);
  const Rational lambda(d - 1, 2);
  QuadScalar p_prev(1), p_cur = QuadScalar(Rational(2) * lambda) * t;
  Rational q_prev(1), q_cur = Rational(2) * lambda;
  for (int n = 1; n < k; ++n) {
    const Rational c1 = Rational(2) * (lambda + n) / (n + 1);
    const Rational c2 = (Rational(2) * lambda + n - 1) / (n + 1);
    QuadScalar p_next = QuadScalar(c1) * t * p_cur - QuadScalar(c2) * p_prev;
    Rational q_next = c1 * q_cur - c2 * q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  return p_cur / QuadScalar(q_cur);
}

}  // namespace sphcode
