#include "toep/closedforms.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "toep/error.hpp"
#include "toep/qfunctions.hpp"
#include "toep/symfunc.hpp"

namespace toep {
namespace {

// sum_{r=0}^{m} base^r; zero for m < 0.
Scalar geometric_prefix(const Scalar& base, long m) {
  Scalar out(0);
  Scalar p(1);
  for (long r = 0; r <= m; ++r) {
    out += p;
    p *= base;
  }
  return out;
}

void check_evskew_domain(long N, long d, long j, long k, long M) {
  if (N < 0 || d < 0 || j < 0 || k < 0 || M < 0)
    throw InputError("evskew: negative parameter");
  if (j > N || k > N) throw InputError("evskew: j and k must stay within 0..N");
  if (!(M > d || (M >= d && j == 0)))
    throw InputError("evskew: need M > d, or M = d with j = 0");
}

void check_rational_q(const Scalar& q, const char* who) {
  if (q.is_rational() && q.rational() == Rational(1))
    throw InputError(std::string(who) + ": rational q = 1; take the limit through a series");
}

// Product of integer-argument Gamma factors evaluated as one eps-shift limit:
// nonpositive arguments are poles, and a matched numerator/denominator pole
// pair contributes lim Gamma(a+eps)/Gamma(b+eps) = (-1)^(b-a) (-b)!/(-a)!.
// Excess denominator poles force the product to zero; excess numerator poles
// have no finite limit.
class GammaProd {
 public:
  void num(long a) {
    if (a >= 1)
      finite_ *= gamma_int(a);
    else
      num_poles_.push_back(a);
  }
  void den(long a) {
    if (a >= 1)
      finite_ /= gamma_int(a);
    else
      den_poles_.push_back(a);
  }
  void mul(const Rational& r) { finite_ *= r; }
  Rational value() const {
    if (den_poles_.size() > num_poles_.size()) return Rational(0);
    if (num_poles_.size() > den_poles_.size())
      throw CheckError("gamma product: unmatched numerator poles");
    Rational out = finite_;
    for (std::size_t i = 0; i < num_poles_.size(); ++i) {
      long a = num_poles_[i], b = den_poles_[i];
      Rational pair = Rational(factorial(-b)) / Rational(factorial(-a));
      if ((b - a) % 2 != 0) pair = -pair;
      out *= pair;
    }
    return out;
  }

 private:
  std::vector<long> num_poles_, den_poles_;
  Rational finite_ = Rational(1);
};

// prod_{m>=1} (1 - q^m), truncated by the valuation of q.
Series q_pochhammer_inf(const Series& q) {
  auto v = q.valuation();
  if (!v.has_value() || *v < 1)
    throw InputError("(q;q)_inf needs a series of positive valuation");
  Scalar qs(q);
  Scalar out(1);
  Scalar p = qs;
  for (long m = 1; m * (*v) <= q.order(); ++m) {
    out *= Scalar(1) - p;
    p *= qs;
  }
  return out.as_series(q.order());
}

}  // namespace

Scalar chebyshev_u(long n, const Scalar& c) {
  if (n < 0) throw InputError("chebyshev_u: n must be non-negative");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(2) * c;
  for (long i = 1; i < n; ++i) {
    Scalar next = Scalar(2) * c * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Scalar tridiag_det(const Scalar& x, const Scalar& y, long N) {
  if (N < 0) throw InputError("tridiag_det: N must be non-negative");
  return geometric_prefix(x * y, N);
}

ScalarMatrix tridiag_inverse(const Scalar& x, const Scalar& y, long N) {
  if (N < 1) throw InputError("tridiag_inverse: N must be positive");
  Scalar xy = x * y;
  std::vector<Scalar> S(static_cast<std::size_t>(N) + 1);
  {
    Scalar acc(0);
    Scalar p(1);
    for (long m = 0; m <= N; ++m) {
      acc += p;
      S[static_cast<std::size_t>(m)] = acc;
      p *= xy;
    }
  }
  if (S[static_cast<std::size_t>(N)].is_zero())
    throw InputError("tridiag_inverse: singular matrix");
  ScalarMatrix out(static_cast<std::size_t>(N),
                   std::vector<Scalar>(static_cast<std::size_t>(N)));
  for (long j = 1; j <= N; ++j)
    for (long k = 1; k <= N; ++k) {
      Scalar v = (j <= k) ? y.pow(k - j) * S[static_cast<std::size_t>(j - 1)] *
                                S[static_cast<std::size_t>(N - k)]
                          : x.pow(j - k) * S[static_cast<std::size_t>(k - 1)] *
                                S[static_cast<std::size_t>(N - j)];
      v = v / S[static_cast<std::size_t>(N)];
      if ((j + k) % 2 != 0) v = -v;
      out[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = v;
    }
  return out;
}

Scalar two_row_skew(long N, long j, long k, const Scalar& x, const Scalar& y) {
  if (N < 0 || j < 0 || k < 0 || j > N || k > N)
    throw InputError("two_row_skew: need 0 <= j,k <= N");
  if (y.is_zero()) throw InputError("two_row_skew: y must be nonzero");
  Scalar xy = x * y;
  Scalar val = (j <= k) ? y.pow(k - j) * geometric_prefix(xy, j) * geometric_prefix(xy, N - k)
                        : x.pow(j - k) * geometric_prefix(xy, k) * geometric_prefix(xy, N - j);
  return val / y.pow(N);
}

Rational fh_determinant(long gamma, long delta, long N) {
  if (gamma < 0 || delta < 0 || N < 0)
    throw InputError("fh_determinant: negative parameter");
  Rational out = barnes_g(N + 1);
  out *= barnes_g(gamma + delta + N + 1) / barnes_g(gamma + delta + 1);
  out *= barnes_g(gamma + 1) / barnes_g(gamma + N + 1);
  out *= barnes_g(delta + 1) / barnes_g(delta + N + 1);
  return out;
}

ScalarMatrix dr_inverse(long gamma, long delta, long N) {
  if (gamma < 1 || delta < 1 || N < 1)
    throw InputError("dr_inverse: positive parameters required");
  ScalarMatrix out(static_cast<std::size_t>(N),
                   std::vector<Scalar>(static_cast<std::size_t>(N)));
  for (long j = 1; j <= N; ++j)
    for (long k = 1; k <= N; ++k) {
      Rational sum(0);
      for (long r = std::max(j, k); r <= N; ++r)
        sum += gamma_int(r) / gamma_int(gamma + delta + r) *
               binomial(gamma + r - k - 1, r - k) * binomial(delta + r - j - 1, r - j);
      Rational v = gamma_int(gamma + j) * gamma_int(delta + k) /
                   (gamma_int(j) * gamma_int(k)) * sum;
      if ((j + k) % 2 != 0) v = -v;
      out[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = Scalar(v);
    }
  return out;
}

bool verify_duduchava_roch(long gamma, long delta, long N) {
  if (gamma < 1 || delta < 1 || N < 1)
    throw InputError("verify_duduchava_roch: positive parameters required");
  auto sgn = [](long m) { return m % 2 != 0 ? Rational(-1) : Rational(1); };
  std::size_t n = static_cast<std::size_t>(N);
  RationalMatrix A(n, std::vector<Rational>(n)), B = A, F = A;
  for (long j = 0; j < N; ++j)
    for (long k = 0; k < N; ++k) {
      long m = j - k;
      std::size_t sj = static_cast<std::size_t>(j), sk = static_cast<std::size_t>(k);
      A[sj][sk] = sgn(m) * binomial(gamma, m);
      B[sj][sk] = sgn(m) * binomial(delta, -m);
      F[sj][sk] = sgn(m) * binomial(gamma + delta, delta + m);
    }
  std::vector<Rational> mgd(n), md(n), mg(n);
  for (long i = 0; i < N; ++i) {
    std::size_t si = static_cast<std::size_t>(i);
    mgd[si] = binomial(gamma + delta + i, i);
    md[si] = binomial(delta + i, i);
    mg[si] = binomial(gamma + i, i);
  }
  Rational c = gamma_int(gamma + 1) * gamma_int(delta + 1) / gamma_int(gamma + delta + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Rational lhs(0);
      for (std::size_t t = 0; t < n; ++t) lhs += A[j][t] * mgd[t] * B[t][k];
      Rational rhs = c * md[j] * F[j][k] * mg[k];
      if (lhs != rhs) return false;
    }
  return true;
}

Rational evskew_fh(long N, long d, long j, long k, long M) {
  check_evskew_domain(N, d, j, k, M);
  Rational out = barnes_g(N + 2);
  out *= barnes_g(M + N + 2) / barnes_g(M + 1);
  out *= barnes_g(M - d + 1) / barnes_g(M - d + N + 2);
  out *= barnes_g(d + 1) / barnes_g(d + N + 2);
  out *= gamma_int(M - d + j + 1) / gamma_int(j + 1);
  out *= gamma_int(d + k + 1) / gamma_int(k + 1);
  Rational sum(0);
  for (long r = std::max(j, k); r <= N; ++r)
    sum += gamma_int(r + 1) / gamma_int(M + r + 1) * binomial(M - d + r - k - 1, r - k) *
           binomial(d + r - j - 1, r - j);
  return out * sum;
}

Rational fh_minor_single(const Partition& mu, long gamma, long delta, long N) {
  if (gamma < 0 || delta < 0 || N < 0)
    throw InputError("fh_minor_single: negative parameter");
  long M = length(mu);
  if (M > N) throw InputError("fh_minor_single: partition longer than the matrix");
  if (M > 0 && mu[0] > gamma) return Rational(0);  // s_{mu'}(1^gamma) vanishes
  Rational out = fh_determinant(gamma, delta, N);
  out *= barnes_g(N - M + 1) / barnes_g(N + 1);
  out *= barnes_g(delta + N + 1) / barnes_g(delta + N - M + 1);
  out *= schur_at_ones(conjugate(mu), gamma);
  for (long k = 1; k <= M; ++k)
    out *= factorial_gamma(part(mu, k) + N - k) / factorial_gamma(delta + part(mu, k) + N - k);
  return out;
}

Rational fh_minor_via_recursion(const Partition& mu, long gamma, long delta, long N) {
  if (gamma < 0 || delta < 0 || N < 0)
    throw InputError("fh_minor_via_recursion: negative parameter");
  if (length(mu) > N)
    throw InputError("fh_minor_via_recursion: partition longer than the matrix");
  if (N == 0) return Rational(1);
  std::vector<long> m(static_cast<std::size_t>(N) + 1, 0);  // 1-based, zero-padded
  for (long i = 1; i <= N; ++i) m[static_cast<std::size_t>(i)] = part(mu, i);
  GammaProd g;
  for (long j = 1; j <= N; ++j) {
    g.num(gamma + delta + 1);
    g.den(gamma - m[static_cast<std::size_t>(N)] + N - j + 1);
  }
  for (long k = 1; k <= N; ++k) g.den(delta + m[static_cast<std::size_t>(k)] + N - k + 1);
  long delta_cur = delta;
  for (long n = N; n >= 2; --n) {
    long mn = m[static_cast<std::size_t>(n)];
    long mprev = m[static_cast<std::size_t>(n - 1)];
    for (long k = 1; k <= n - 1; ++k)
      g.mul(Rational(gamma + delta_cur + 1) *
            Rational(m[static_cast<std::size_t>(k)] - mn + n - k));
    for (long j = 1; j <= n - 1; ++j) {
      g.num(gamma - mn + j);
      g.den(gamma - mprev + j);
    }
    ++delta_cur;
  }
  return g.value();
}

Scalar q_theta_determinant(long gamma, long delta, long N, const Scalar& q) {
  if (gamma < 0 || delta < 0 || N < 0)
    throw InputError("q_theta_determinant: negative parameter");
  check_rational_q(q, "q_theta_determinant");
  Scalar out = q_barnes(N + 1, q);
  out *= q_barnes(delta + gamma + N + 1, q) / q_barnes(delta + gamma + 1, q);
  out *= q_barnes(delta + 1, q) / q_barnes(delta + N + 1, q);
  out *= q_barnes(gamma + 1, q) / q_barnes(gamma + N + 1, q);
  return out;
}

Scalar q_evskew(long N, long d, long j, long k, long M, const Scalar& q) {
  check_evskew_domain(N, d, j, k, M);
  check_rational_q(q, "q_evskew");
  long gamma = M - d, delta = d;
  Scalar common = q_gamma(gamma + j + 1, q) * q_gamma(delta + k + 1, q) /
                  (q_gamma(j + 1, q) * q_gamma(k + 1, q));
  Scalar sum(0);
  for (long r = std::max(j, k); r <= N; ++r) {
    Scalar term = q.pow(r - k) * q_gamma(r + 1, q) / q_gamma(M + r + 1, q);
    term *= q_binomial(gamma + r - k - 1, r - k, q);
    term *= q_binomial(delta + r - j - 1, r - j, q);
    sum += term;
  }
  long e = d * (d - 1) / 2 * N + (d - 1) * (j - k);
  return q.pow(e) * q_theta_determinant(gamma, delta, N + 1, q) * common * sum;
}

Series theta_d_determinant(long delta, long N, const Series& q) {
  if (delta < 0 || N < 0) throw InputError("theta_d_determinant: negative parameter");
  Scalar qs(q);
  Scalar out = q_barnes(delta + 1, qs) * q_barnes(N + 1, qs) / q_barnes(delta + N + 1, qs);
  out = out / (Scalar(1) - qs).pow(delta * N);
  return out.as_series(q.order());
}

Series infinite_q_skew(long N, long d, long j, long k, const Series& q) {
  if (N < 0 || d < 0 || j < 0 || k < 0 || j > N || k > N)
    throw InputError("infinite_q_skew: need 0 <= j,k <= N");
  Scalar qs(q);
  Scalar sum(0);
  for (long r = std::max(j, k); r <= N; ++r)
    sum += qs.pow(r) * q_binomial(r, r - k, qs) * q_binomial(d + r - j - 1, r - j, qs);
  long e = (d - 1) * j - d * k + d * (d - 1) / 2 * N;
  Scalar out = qs.pow(e);
  out = out / (Scalar(1) - qs).pow(d * (N + 1));
  out *= q_barnes(N + 2, qs) * q_barnes(d + 1, qs) / q_barnes(d + N + 2, qs);
  out *= q_pochhammer(d + k, qs) / q_pochhammer(j, qs);
  return (out * sum).as_series(q.order());
}

AsymptoticForm asymptotic_tridiag(long j, long k, const Scalar& x, const Scalar& y) {
  if (j < 0 || k < 0) throw InputError("asymptotic_tridiag: j,k must be non-negative");
  Scalar factor(0);
  for (long r = 0; r <= std::min(j, k); ++r) factor += x.pow(j - r) * y.pow(k - r);
  AsymptoticForm out;
  out.factor = factor;
  out.note = "multiplies y^-N D_N; the bare factor is lim D_N^{(1^k),(1^j)}/D_N";
  return out;
}

AsymptoticForm asymptotic_fh(long d, long j, long k, long M) {
  if (d < 0 || j < 0 || k < 0 || M < d)
    throw InputError("asymptotic_fh: need M >= d >= 0 and j,k >= 0");
  Rational factor(0);
  for (long r = 0; r <= std::min(j, k); ++r)
    factor += binomial(M - d + j - r - 1, j - r) * binomial(d + k - r - 1, k - r);
  AsymptoticForm out;
  out.factor = Scalar(factor);
  out.n_power = d * (M - d);
  out.constant = Scalar(barnes_g(d + 1) * barnes_g(M - d + 1) / barnes_g(M + 1));
  out.note = "s_{(N^d,j)/(k)}(1^M) ~ constant N^n_power factor; "
             "the bare factor is lim D_N^{(1^k),(1^j)}/D_N";
  return out;
}

AsymptoticForm asymptotic_q_principal(long d, long j, long k, long M, const Scalar& q) {
  if (d < 0 || j < 0 || k < 0 || M < d)
    throw InputError("asymptotic_q_principal: need M >= d >= 0 and j,k >= 0");
  if (q.is_zero()) throw InputError("asymptotic_q_principal: q must be nonzero");
  check_rational_q(q, "asymptotic_q_principal");
  Scalar factor(0);
  for (long r = 0; r <= std::min(j, k); ++r)
    factor += q.pow(-r) * q_binomial(M - d + j - r - 1, j - r, q) *
              q_binomial(d + k - r - 1, k - r, q);
  AsymptoticForm out;
  out.factor = factor;
  out.constant = q_barnes(d + 1, q) * q_barnes(M - d + 1, q) / q_barnes(M + 1, q) /
                 (Scalar(1) - q).pow(d * (M - d));
  out.q_exponent_n = Rational(d * (d - 1)) / Rational(2);
  out.q_exponent_const = Rational(d * j - (d - 1) * k);
  out.note = "s_{(N^d,j)/(k)}(1..q^{M-1}) ~ q^(q_exponent_n N + q_exponent_const) "
             "constant factor";
  return out;
}

AsymptoticForm asymptotic_q_infinite(long d, long j, long k, const Series& q) {
  if (d < 0 || j < 0 || k < 0)
    throw InputError("asymptotic_q_infinite: parameters must be non-negative");
  Scalar qs(q);
  Scalar factor(0);
  for (long r = 0; r <= std::min(j, k); ++r)
    factor += qs.pow(-r) / q_pochhammer(j - r, qs) * q_binomial(d + k - r - 1, k - r, qs);
  Scalar phi(q_pochhammer_inf(q));
  AsymptoticForm out;
  out.factor = factor;
  out.constant =
      (Scalar(1) - qs).pow(d * (d - 1) / 2) * q_barnes(d + 1, qs) / phi.pow(d);
  out.q_exponent_n = Rational(d * (d - 1)) / Rational(2);
  out.q_exponent_const = Rational(d * j - (d - 1) * k);
  out.note = "s_{(N^d,j)/(k)}(1,q,...) ~ q^(q_exponent_n N + q_exponent_const) "
             "constant factor";
  return out;
}

}  // namespace toep
