#pragma once

#include <vector>

#include "toep/partitions.hpp"
#include "toep/scalar.hpp"
#include "toep/specialization.hpp"

namespace toep {

enum class SchurBasis { H, E };

// Power sum p_k, k >= 1. Closed form q^(shift k)/(1 - q^k) for the infinite
// principal specialization.
Scalar power_p(long k, const Specialization& x);

// Complete homogeneous h_k: zero for k < 0. Finite kinds go through the
// Newton recurrence from power sums; the infinite principal kind has the
// closed form q^(shift k)/(q;q)_k in series mode only.
Scalar complete_h(long k, const Specialization& x);

// Elementary e_k: zero for k < 0 or k above the variable count. The infinite
// principal kind has the closed form q^(k(k-1)/2 + shift k)/(q;q)_k in series
// mode only.
Scalar elementary_e(long k, const Specialization& x);

std::vector<Scalar> h_prefix(const Specialization& x, long kmax);  // h_0..h_kmax
std::vector<Scalar> e_prefix(const Specialization& x, long kmax);

// Determinant det(h[mu_a - lambda_b - a + b]) over an explicit list h[0..K]
// with h below index 0 treated as zero. CheckError when an index exceeds K.
Scalar jacobi_trudi_det(const std::vector<Scalar>& h, const Partition& mu,
                        const Partition& lambda);

// Skew Schur evaluation via Jacobi-Trudi, size length(mu) in both bases: the
// H basis gives s_{mu/lambda}, the E basis gives the conjugate skew Schur
// s_{(mu/lambda)'}. Zero when lambda is not contained in mu.
Scalar skew_schur(const Partition& mu, const Partition& lambda, const Specialization& x,
                  SchurBasis basis);

// s_mu(1^N) as the discrete Weyl-dimension product over G(N+1). Requires
// N >= length(mu).
Rational schur_at_ones(const Partition& mu, long N);

// Same value through hooks and contents; independent route for cross-checks.
Rational schur_hook_content(const Partition& mu, long N);

// Both specializations must be graded with values tracked to degree >= D.
// Verifies sum_nu s_nu(x) s_nu(y) against prod 1/(1 - x_j y_k) through
// t-degree D, and the dual pairing sum_nu s_nu(x) s_{nu'}(y) against
// prod (1 + x_j y_k).
bool cauchy_check(const Specialization& x, const Specialization& y, int D);

}  // namespace toep
