#pragma once

#include <string>

#include "toep/matrix.hpp"
#include "toep/partitions.hpp"
#include "toep/symbols.hpp"

namespace toep {

// N x N Toeplitz matrix of the symbol, entry (j,k) = d_{j-k}.
ScalarMatrix toeplitz_matrix(const Symbol& f, long N);

// Minor matrix with row shifts lam and column shifts mu (1-based entry
// (j,k) = d_{j-lam_j-k+mu_k}).  Both partitions need length <= N.
ScalarMatrix minor_matrix(const Symbol& f, long N, const Partition& lam, const Partition& mu);

// Same matrix produced by striking rows and columns out of a larger Toeplitz
// matrix: strike runs of rows sized by the successive differences of lam and
// runs of columns sized by those of mu.  Independent of minor_matrix.
ScalarMatrix striking_minor_matrix(const Symbol& f, long N, const Partition& lam,
                                   const Partition& mu);

Scalar toeplitz_determinant(const Symbol& f, long N);
Scalar toeplitz_minor_det(const Symbol& f, long N, const Partition& lam, const Partition& mu);

// Inverse of the N x N Toeplitz matrix.  Every entry is re-derived through
// the minor identity  (T^-1)_{j,k} = (-1)^{j+k} D_{N-1}^{(1^{k-1}),(1^{j-1})} / D_N
// and a disagreement raises CheckError.
ScalarMatrix exact_inverse(const Symbol& f, long N);

// D_N^{(1^k),(1^j)} recovered from the inverse of the next larger matrix.
Scalar minor_from_inverse(const Symbol& f, long j, long k, long N);

struct VerifyReport {
  bool ok = false;
  std::string identity;
  std::string detail;
};

// D_N(H(y;1/z) H(x;z)) as a Schur sum over shapes with at most N rows.
// x is graded internally; the comparison is exact through t^order.
VerifyReport verify_schur_expansion(const Specialization& y, const Specialization& x, long N,
                                    int order);

// With finitely many y variables the determinant stabilizes: for N >= d it
// equals the Cauchy product and no longer depends on N.
VerifyReport verify_stable_product(const Specialization& y, const Specialization& x, long N,
                                   int order);

// Minor determinant as a skew Schur sum, and for N >= d + l(mu) as the
// stabilized determinant times a finite skew sum.
VerifyReport verify_minor_factorization(const Specialization& y, const Specialization& x,
                                        const Partition& lam, const Partition& mu, long N,
                                        int order);

// Exact rational identity between a skew Schur value on (1/y, x), the minor
// determinant of E(y;1/z) E(x;z), and its bounded skew sum.
VerifyReport verify_dual_minor_schur(const Specialization& y, const Specialization& x,
                                     const Partition& lam, const Partition& mu, long N);

}  // namespace toep
