#pragma once

#include "toep/rational.hpp"
#include "toep/scalar.hpp"
#include "toep/series.hpp"

namespace toep {

// Gamma at non-negative integers shifted by one: returns n!.
Rational factorial_gamma(long n);

// Gamma at positive integers: (n-1)!. InputError at poles (n <= 0).
Rational gamma_int(long n);

// Barnes G at positive integers: G(1) = G(2) = 1, G(n+1) = (n-1)! G(n).
Rational barnes_g(long n);

// Falling-factorial binomial: any integer a, zero for b < 0.
Rational binomial(long a, long b);

// 1 + q + ... + q^(n-1); n >= 0.
Scalar q_int(long n, const Scalar& q);

// (q; q)_k for k >= 0.
Scalar q_pochhammer(long k, const Scalar& q);

// Product of q-integers [1][2]...[n-1]; n >= 1. Rational q = 1 is rejected:
// limits at q = 1 go through a series in 1 - q.
Scalar q_gamma(long n, const Scalar& q);

// q-Barnes: G_q(1) = G_q(2) = 1, G_q(n+1) = Gamma_q(n) G_q(n); n >= 1.
Scalar q_barnes(long n, const Scalar& q);

// Gaussian binomial. Zero for b < 0 or 0 <= a < b; one for b = 0; the
// standard Gamma_q ratio for 0 <= b <= a; the product extension
// prod_i (1 - q^(a-b+i))/(1 - q^i) for a < 0, b >= 1. Rational q = 1 is
// rejected as in q_gamma.
Scalar q_binomial(long a, long b, const Scalar& q);

// (q; q)_infinity as a series: pentagonal-number expansion.
Series euler_phi_series(int order);

}  // namespace toep
