#pragma once

#include <vector>

#include "toep/matrix.hpp"
#include "toep/scalar.hpp"
#include "toep/series.hpp"
#include "toep/symbols.hpp"

namespace toep {

// Monic biorthogonal pair of degree j for a symbol f:
//   <p_j, q_k>_f = CT[ p_j(1/z) q_k(z) f(z) ] = 0 for j != k,
// and <p_j, q_j> = norm2 = D_{j+1}(f) / D_j(f). Coefficients are indexed by
// exponent, so p_coeffs[j] = q_coeffs[j] = 1.
struct BiorthogonalPair {
  std::vector<Scalar> p_coeffs;
  std::vector<Scalar> q_coeffs;
  Scalar norm2;
};

// Coefficient array of the reproducing kernel: c[j][k] is the coefficient of
// z^j w^-k, equal to the (j+1, k+1) entry of T_N(f)^-1.
struct KernelCoefficients {
  ScalarMatrix c;
};

// Bordered-determinant construction: p_j expands the right-bordered moment
// determinant (monomial last column), q_j the bottom-bordered one (monomial
// last row), both divided by D_j. InputError when D_j or D_{j+1} vanishes.
BiorthogonalPair bordered_pair(const Symbol& f, long j);

// Closed pair for theta_gd(gamma, delta, q), gamma, delta >= 1:
//   p_j: sum_r (-1)^{j+r} qbinom(j,r) [(q;q)_{gamma+j-r-1}/(q;q)_{gamma-1}]
//                                     [(q;q)_{delta+r}/(q;q)_{delta+j}] q^{j-r} z^r
//   q_j: sum_r (-1)^{j+r} qbinom(j,r) [(q;q)_{gamma+r}/(q;q)_{gamma+j}]
//                                     [(q;q)_{delta+j-r-1}/(q;q)_{delta-1}] z^r
//   norm2 = (q;q)_j (q;q)_{gamma+delta+j} / ((q;q)_{delta+j} (q;q)_{gamma+j}).
// Equals bordered_pair(theta_gd(gamma, delta, q), j); see README on the
// q-power bookkeeping inside p_j.
BiorthogonalPair closed_pair_theta(long gamma, long delta, long j, const Scalar& q);

// Closed pair for theta_d(delta, q), series q only:
//   p_j: sum_r (-1)^{j+r} qbinom(j,r) [(q;q)_{delta+r}/(q;q)_{delta+j}] q^{delta(j-r)} z^r
//   q_j: sum_r (-1)^{j+r} qbinom(j,r) [(q;q)_{delta+j-r-1}/(q;q)_{delta-1}]
//                                     q^{-(delta-1)(j-r)} z^r
//   norm2 = (q;q)_j / (q;q)_{delta+j}.
BiorthogonalPair closed_pair_theta_d(long delta, long j, const Scalar& q);

// c[j][k] = sum_{r=max(j,k)}^{N-1} ([z^j] q_r)([z^k] p_r) / norm2_r, assembled
// from bordered pairs; equals exact_inverse(f, N).
KernelCoefficients kernel_coefficients(const Symbol& f, long N);

// Kernel for theta_gd, entries
//   c[j][k] = sum_{r=max(j,k)}^{N-1} (-1)^{j+k} q^{r-k}
//             GammaQ(gamma+j+1) GammaQ(delta+k+1) GammaQ(r+1)
//             / (GammaQ(j+1) GammaQ(k+1) GammaQ(gamma+delta+r+1))
//             qbinom(gamma+r-k-1, r-k) qbinom(delta+r-j-1, r-j).
KernelCoefficients kernel_closed_theta_gd(long gamma, long delta, long N, const Scalar& q);

// Kernel for theta_d, series q only, entries
//   c[j][k] = sum_{r=max(j,k)}^{N-1} (-1)^{j+k} q^{r+(delta-1)j-delta*k}
//             [(q;q)_{delta+k}/(q;q)_j] qbinom(r, r-k) qbinom(delta+r-j-1, r-j).
KernelCoefficients kernel_closed_theta_d(long delta, long N, const Scalar& q);

}  // namespace toep
