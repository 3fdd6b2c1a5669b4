#include "toep/biorthogonal.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "toep/error.hpp"
#include "toep/qfunctions.hpp"
#include "toep/toeplitz.hpp"

namespace toep {

namespace {

// Submatrix of the (j+1)x(j+1) moment matrix with one row and one column
// struck; empty for j = 0.
Scalar struck_det(const ScalarMatrix& m, long drop_row, long drop_col) {
  std::size_t n = m.size();
  ScalarMatrix sub;
  sub.reserve(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    if (r == static_cast<std::size_t>(drop_row)) continue;
    std::vector<Scalar> row;
    row.reserve(n - 1);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == static_cast<std::size_t>(drop_col)) continue;
      row.push_back(m[r][s]);
    }
    sub.push_back(std::move(row));
  }
  return det_scalar(sub);
}

void check_series_q(const Scalar& q, const char* who) {
  if (q.is_rational())
    throw InputError(std::string(who) + ": series q required");
}

void check_rational_one(const Scalar& q, const char* who) {
  if (q.is_rational() && q.rational() == Rational(1))
    throw InputError(std::string(who) + ": rational q = 1 is outside the domain");
}

}  // namespace

BiorthogonalPair bordered_pair(const Symbol& f, long j) {
  if (j < 0) throw InputError("bordered_pair: j must be non-negative");
  Scalar dj = toeplitz_determinant(f, j);
  Scalar djp = toeplitz_determinant(f, j + 1);
  if (dj.is_zero() || djp.is_zero())
    throw InputError("bordered_pair: vanishing leading determinant");
  BiorthogonalPair out;
  out.norm2 = djp / dj;
  std::size_t deg = static_cast<std::size_t>(j);
  out.p_coeffs.assign(deg + 1, Scalar(0));
  out.q_coeffs.assign(deg + 1, Scalar(0));
  if (j == 0) {
    out.p_coeffs[0] = Scalar(1);
    out.q_coeffs[0] = Scalar(1);
    return out;
  }
  ScalarMatrix moments = toeplitz_matrix(f, j + 1);
  for (long r = 0; r <= j; ++r) {
    Scalar pd = struck_det(moments, r, j);   // delete monomial column
    Scalar qd = struck_det(moments, j, r);   // delete monomial row
    if ((j + r) % 2 != 0) {
      pd = -pd;
      qd = -qd;
    }
    out.p_coeffs[static_cast<std::size_t>(r)] = pd / dj;
    out.q_coeffs[static_cast<std::size_t>(r)] = qd / dj;
  }
  return out;
}

BiorthogonalPair closed_pair_theta(long gamma, long delta, long j, const Scalar& q) {
  if (gamma < 1 || delta < 1 || j < 0)
    throw InputError("closed_pair_theta: need gamma, delta >= 1 and j >= 0");
  check_rational_one(q, "closed_pair_theta");
  BiorthogonalPair out;
  std::size_t deg = static_cast<std::size_t>(j);
  out.p_coeffs.assign(deg + 1, Scalar(0));
  out.q_coeffs.assign(deg + 1, Scalar(0));
  for (long r = 0; r <= j; ++r) {
    Scalar common = q_binomial(j, r, q);
    if ((j + r) % 2 != 0) common = -common;
    Scalar p = common * q_pochhammer(gamma + j - r - 1, q) / q_pochhammer(gamma - 1, q) *
               q_pochhammer(delta + r, q) / q_pochhammer(delta + j, q) * q.pow(j - r);
    Scalar qq = common * q_pochhammer(gamma + r, q) / q_pochhammer(gamma + j, q) *
                q_pochhammer(delta + j - r - 1, q) / q_pochhammer(delta - 1, q);
    out.p_coeffs[static_cast<std::size_t>(r)] = p;
    out.q_coeffs[static_cast<std::size_t>(r)] = qq;
  }
  out.norm2 = q_pochhammer(j, q) * q_pochhammer(gamma + delta + j, q) /
              (q_pochhammer(delta + j, q) * q_pochhammer(gamma + j, q));
  return out;
}

BiorthogonalPair closed_pair_theta_d(long delta, long j, const Scalar& q) {
  if (delta < 1 || j < 0)
    throw InputError("closed_pair_theta_d: need delta >= 1 and j >= 0");
  check_series_q(q, "closed_pair_theta_d");
  BiorthogonalPair out;
  std::size_t deg = static_cast<std::size_t>(j);
  out.p_coeffs.assign(deg + 1, Scalar(0));
  out.q_coeffs.assign(deg + 1, Scalar(0));
  for (long r = 0; r <= j; ++r) {
    Scalar common = q_binomial(j, r, q);
    if ((j + r) % 2 != 0) common = -common;
    Scalar p = common * q_pochhammer(delta + r, q) / q_pochhammer(delta + j, q) *
               q.pow(delta * (j - r));
    Scalar qq = common * q_pochhammer(delta + j - r - 1, q) /
                q_pochhammer(delta - 1, q) * q.pow(-(delta - 1) * (j - r));
    out.p_coeffs[static_cast<std::size_t>(r)] = p;
    out.q_coeffs[static_cast<std::size_t>(r)] = qq;
  }
  out.norm2 = q_pochhammer(j, q) / q_pochhammer(delta + j, q);
  return out;
}

KernelCoefficients kernel_coefficients(const Symbol& f, long N) {
  if (N < 1) throw InputError("kernel_coefficients: N must be positive");
  std::vector<BiorthogonalPair> pairs;
  pairs.reserve(static_cast<std::size_t>(N));
  for (long r = 0; r < N; ++r) pairs.push_back(bordered_pair(f, r));
  KernelCoefficients out;
  out.c.assign(static_cast<std::size_t>(N),
               std::vector<Scalar>(static_cast<std::size_t>(N), Scalar(0)));
  for (long j = 0; j < N; ++j)
    for (long k = 0; k < N; ++k) {
      Scalar acc(0);
      for (long r = std::max(j, k); r < N; ++r) {
        const BiorthogonalPair& pr = pairs[static_cast<std::size_t>(r)];
        acc += pr.q_coeffs[static_cast<std::size_t>(j)] *
               pr.p_coeffs[static_cast<std::size_t>(k)] / pr.norm2;
      }
      out.c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = acc;
    }
  return out;
}

KernelCoefficients kernel_closed_theta_gd(long gamma, long delta, long N,
                                          const Scalar& q) {
  if (gamma < 1 || delta < 1 || N < 1)
    throw InputError("kernel_closed_theta_gd: positive parameters required");
  check_rational_one(q, "kernel_closed_theta_gd");
  KernelCoefficients out;
  out.c.assign(static_cast<std::size_t>(N),
               std::vector<Scalar>(static_cast<std::size_t>(N), Scalar(0)));
  for (long j = 0; j < N; ++j)
    for (long k = 0; k < N; ++k) {
      Scalar common = q_gamma(gamma + j + 1, q) * q_gamma(delta + k + 1, q) /
                      (q_gamma(j + 1, q) * q_gamma(k + 1, q));
      Scalar acc(0);
      for (long r = std::max(j, k); r < N; ++r)
        acc += q.pow(r - k) * q_gamma(r + 1, q) /
               q_gamma(gamma + delta + r + 1, q) *
               q_binomial(gamma + r - k - 1, r - k, q) *
               q_binomial(delta + r - j - 1, r - j, q);
      Scalar v = common * acc;
      if ((j + k) % 2 != 0) v = -v;
      out.c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = v;
    }
  return out;
}

KernelCoefficients kernel_closed_theta_d(long delta, long N, const Scalar& q) {
  if (delta < 1 || N < 1)
    throw InputError("kernel_closed_theta_d: positive parameters required");
  check_series_q(q, "kernel_closed_theta_d");
  KernelCoefficients out;
  out.c.assign(static_cast<std::size_t>(N),
               std::vector<Scalar>(static_cast<std::size_t>(N), Scalar(0)));
  for (long j = 0; j < N; ++j)
    for (long k = 0; k < N; ++k) {
      Scalar common = q_pochhammer(delta + k, q) / q_pochhammer(j, q);
      Scalar acc(0);
      for (long r = std::max(j, k); r < N; ++r)
        acc += q.pow(r + (delta - 1) * j - delta * k) *
               q_binomial(r, r - k, q) * q_binomial(delta + r - j - 1, r - j, q);
      Scalar v = common * acc;
      if ((j + k) % 2 != 0) v = -v;
      out.c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = v;
    }
  return out;
}

}  // namespace toep
