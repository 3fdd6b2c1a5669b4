#pragma once

#include <vector>

#include "toep/laurent.hpp"
#include "toep/partitions.hpp"
#include "toep/symbols.hpp"

namespace toep {

// Size cap for the constant-term oracle, from TM_MAX_ORACLE_N (default 4).
long oracle_cap();

// Brute-force minor determinant as a constant-term integral:
//   (1/N!) CT[ s_mu(1/z) s_lam(z) prod_j f(z_j) prod_{j<k} (z_j-z_k)(1/z_j-1/z_k) ].
// Exponential in N; refuses N above the cap or windows wider than 12.
Rational heine_minor(long lo, const std::vector<Rational>& window, const Partition& lam,
                     const Partition& mu, long N);
Rational heine_minor(const Symbol& f, const Partition& lam, const Partition& mu, long N);

// The same integrand with the binomial window of gamma, delta.
Rational morris_value(long gamma, long delta, const Partition& lam, const Partition& mu, long N);

// <p, q> = CT[ p(1/z) q(z) f(z) ] = sum_{r,s} a_r b_s d_{r-s}; coefficient
// lists are indexed by exponent.  Works for any symbol with computable
// coefficients, including one-sided infinite windows.
Scalar pairing_value(const Symbol& f, const std::vector<Scalar>& p_coeffs,
                     const std::vector<Scalar>& q_coeffs);

}  // namespace toep
