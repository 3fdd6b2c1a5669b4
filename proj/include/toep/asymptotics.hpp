#pragma once

#include <vector>

#include "toep/partitions.hpp"
#include "toep/scalar.hpp"
#include "toep/symbols.hpp"

namespace toep {

// Irreducible symmetric group character chi^lam evaluated at cycle type phi.
// Requires |lam| == |phi|. Border-strip recursion on beta sets, memoized;
// safe to call from several threads.
long sym_group_character(const Partition& lam, const Partition& phi);

// Generalized Laguerre polynomial L_n^{(a)}(t), n >= 0, a >= 0.
Scalar laguerre(long n, long a, const Scalar& t);

// Coefficients of log f(z) = sum_{k>=1} (c_k z^k + c_{-k} z^{-k}) for a
// two-sided symbol; plus[k-1] = c_k, minus[k-1] = c_{-k}.
struct LogCoefficients {
  std::vector<Scalar> plus;
  std::vector<Scalar> minus;

  const Scalar& c_plus(long k) const;   // c_k, 1 <= k <= size
  const Scalar& c_minus(long k) const;  // c_{-k}
};

// Profile of a symbol H(y;1/z)H(x;z) or E(y;1/z)E(x;z): the H form gives
// c_k = p_k(x)/k and c_{-k} = p_k(y)/k, the E form carries an extra
// (-1)^(k+1).
LogCoefficients log_coefficients(const TwoSidedSpecs& specs, long kmax);

// Weight attached to the cycle-type pair (phi, psi) in the character
// expansion of the minor ratio limit: a product over part sizes k of
//   k^max(n,m) * c^|n-m| * min(n,m)! * L_min^(|n-m|)(-k c_k c_{-k}),
// where n, m are the multiplicities of k in phi, psi and c is c_{-k} when
// n >= m, c_k otherwise.
Scalar delta_factor(const Partition& phi, const Partition& psi, const LogCoefficients& c);

// Limit of D_N^{lam,mu}(f) / D_N(f) as N grows, as a double character sum
// over cycle types phi of |lam| and psi of |mu|.
Scalar character_sum(const Partition& lam, const Partition& mu, const LogCoefficients& c);

// The same limit as a finite sum over common inner shapes:
//   sum_nu s_{lam/nu}(y) s_{mu/nu}(x)        (H basis)
//   sum_nu s_{lam'/nu'}(y) s_{mu'/nu'}(x)    (E basis)
Scalar skew_pair_sum(const Partition& lam, const Partition& mu, const Specialization& y,
                     const Specialization& x, SchurBasis basis);

// Complete homogeneous values h_0..h_kmax of the (possibly virtual)
// specialization whose power sums are p_k = k * c[k-1]. Needs c.size() >= kmax.
std::vector<Scalar> h_from_profile(const std::vector<Scalar>& c, long kmax);

struct ConvergenceRow {
  long N = 0;
  Rational minor_value;
  Rational det_value;
  Rational ratio;
  Rational target;
  Rational abs_error;
};

// Exact ratio trajectory D_N^{lam,mu}/D_N against its limit, for rational
// symbols with two-sided factorizations. Rows run from max(2, l(lam), l(mu))
// through N_max. InputError when a determinant vanishes on the way.
std::vector<ConvergenceRow> convergence_table(const Symbol& f, const Partition& lam,
                                              const Partition& mu, long N_max);

}  // namespace toep
