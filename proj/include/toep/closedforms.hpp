#pragma once

#include <string>

#include "toep/matrix.hpp"
#include "toep/partitions.hpp"
#include "toep/rational.hpp"
#include "toep/scalar.hpp"
#include "toep/series.hpp"

namespace toep {

// A closed-form evaluation tagged with the formula that produced it, for
// report plumbing. `value` must equal the direct computation it shortcuts.
struct ClosedFormResult {
  Scalar value;
  std::string formula_id;
  std::string parameters;
};

// Chebyshev U_n by the three-term recurrence; n >= 0.
Scalar chebyshev_u(long n, const Scalar& c);

// det T_N(E(y;1/z)E(x;z)) as the polynomial sum_{r=0}^{N} (xy)^r; valid at
// xy = 1, where the geometric-quotient form degenerates.
Scalar tridiag_det(const Scalar& x, const Scalar& y, long N);

// Inverse of the tridiagonal symbol matrix, 1-based entries
//   (T^-1)_{j,k} = (-1)^{j+k} y^{k-j} S_{j-1} S_{N-k} / S_N   (j <= k)
// with S_m = sum_{r=0}^{m} (xy)^r and the x-mirrored case for j > k. This is
// the Chebyshev-quotient formula with the radicals cancelled. InputError when
// the determinant S_N vanishes.
ScalarMatrix tridiag_inverse(const Scalar& x, const Scalar& y, long N);

// s_{(N,j)/(k)}(x, 1/y) for 0 <= j,k <= N, with S_m = sum_{r=0}^{m} (xy)^r:
//   y^{-N} y^{k-j} S_j S_{N-k}   (j <= k),
//   y^{-N} x^{j-k} S_k S_{N-j}   (j > k).
// Needs y != 0.
Scalar two_row_skew(long N, long j, long k, const Scalar& x, const Scalar& y);

// det T_N(pure_fh(gamma, delta)) as a Barnes-quotient.
Rational fh_determinant(long gamma, long delta, long N);

// Duduchava-Roch inverse of T_N(pure_fh(gamma, delta)), 1-based entries
//   (-1)^{j+k} G(gamma+j) G(delta+k) / (G(j) G(k)) *
//   sum_{r=max(j,k)}^{N} G(r)/G(gamma+delta+r) C(gamma+r-k-1, r-k) C(delta+r-j-1, r-j).
// gamma, delta >= 1.
ScalarMatrix dr_inverse(long gamma, long delta, long N);

// Checks the Duduchava-Roch matrix identity
//   T_N((1-z)^gamma) M_{gamma+delta} T_N((1-z^{-1})^delta)
//     = [G(gamma+1)G(delta+1)/G(gamma+delta+1)] M_delta T_N(f) M_gamma
// with (M_a)_{kk} = C(a+k-1, k-1) and the signed expansion of f, whose
// coefficients are (-1)^k times the pure_fh ones; the sign conjugation is
// applied here so callers keep the nonnegative-coefficient convention.
bool verify_duduchava_roch(long gamma, long delta, long N);

// s_{(N^d, j)/(k)}(1^M) as a Gamma/Barnes-quotient sum; j,k <= N and M > d
// (M = d allowed when j = 0).
Rational evskew_fh(long N, long d, long j, long k, long M);

// D_N^{empty,mu}(pure_fh(gamma, delta)) in one closed product; l(mu) <= N.
Rational fh_minor_single(const Partition& mu, long gamma, long delta, long N);

// Same value by the row/column factor-extraction recursion: pull the stated
// Gamma factors out of the minor determinant, eliminate the last column by
// row subtractions, and recurse with (N-1, delta+1, mu minus its last part)
// down to the empty base. Gamma poles are paired in a single limit, so
// vanishing minors come out as exact zeros.
Rational fh_minor_via_recursion(const Partition& mu, long gamma, long delta, long N);

// det T_N(theta_gd(gamma, delta, q)) as a q-Barnes quotient; q != 1 in
// rational mode.
Scalar q_theta_determinant(long gamma, long delta, long N, const Scalar& q);

// s_{(N^d, j)/(k)}(1, q, ..., q^{M-1}), domain as evskew_fh. The q-power
// bookkeeping follows the kernel route: prefactor exponent
// d(d-1)N/2 + (d-1)(j-k) with q^{r-k} inside the sum, which is the variant
// that matches the Jacobi-Trudi values (see README on the exponent checks).
Scalar q_evskew(long N, long d, long j, long k, long M, const Scalar& q);

// det T_N(theta_d(delta, q)) = (1-q)^{-delta N} G_q(delta+1)G_q(N+1)/G_q(delta+N+1).
// The symbol is an infinite product, so only series q is accepted.
Series theta_d_determinant(long delta, long N, const Series& q);

// s_{(N^d, j)/(k)}(1, q, q^2, ...) for j,k <= N; series q only.
Series infinite_q_skew(long N, long d, long j, long k, const Series& q);

// The N -> infinity shape of the four evaluation families: an N-independent
// combinatorial `factor` plus a prefactor record. The prefactor reads
//   classical kinds: constant * N^n_power
//   q kinds:         constant * q^(q_exponent_n * N + q_exponent_const)
// and `note` names the quantity the product approximates.
struct AsymptoticForm {
  Scalar factor;
  Scalar constant = Scalar(1);
  long n_power = 0;
  Rational q_exponent_n = Rational(0);
  Rational q_exponent_const = Rational(0);
  std::string note;
};

// factor = sum_{r=0}^{min(j,k)} x^{j-r} y^{k-r}; approximates
// y^N s_{(N,j)/(k)}(x, 1/y) / D_N, equivalently the minor ratio
// D_N^{(1^k),(1^j)}/D_N of the tridiagonal symbol.
AsymptoticForm asymptotic_tridiag(long j, long k, const Scalar& x, const Scalar& y);

// s_{(N^d,j)/(k)}(1^M) ~ N^{d(M-d)} G(d+1)G(M-d+1)/G(M+1) * factor with
// factor = sum_{r=0}^{min(j,k)} C(M-d+j-r-1, j-r) C(d+k-r-1, k-r); the bare
// factor is also the limit of the minor ratio D_N^{(1^k),(1^j)}/D_N.
AsymptoticForm asymptotic_fh(long d, long j, long k, long M);

// s_{(N^d,j)/(k)}(1, q, ..., q^{M-1}) ~ q^{d(d-1)N/2 + dj - (d-1)k}
// (1-q)^{-d(M-d)} G_q(d+1)G_q(M-d+1)/G_q(M+1) * factor with
// factor = sum_{r=0}^{min(j,k)} q^{-r} qC(M-d+j-r-1, j-r) qC(d+k-r-1, k-r).
AsymptoticForm asymptotic_q_principal(long d, long j, long k, long M, const Scalar& q);

// s_{(N^d,j)/(k)}(1, q, ...) ~ q^{d(d-1)N/2 + dj - (d-1)k}
// (1-q)^{d(d-1)/2} G_q(d+1)/(q;q)_inf^d * factor with
// factor = sum_{r=0}^{min(j,k)} q^{-r} (q;q)_{j-r}^{-1} qC(d+k-r-1, k-r).
// Needs q of positive valuation so (q;q)_inf truncates.
AsymptoticForm asymptotic_q_infinite(long d, long j, long k, const Series& q);

}  // namespace toep
