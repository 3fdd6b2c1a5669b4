#include "toep/qfunctions.hpp"

#include <string>

#include "toep/error.hpp"

namespace toep {

namespace {

void reject_rational_one(const Scalar& q) {
  if (q.is_rational() && q.rational() == 1)
    throw InputError("rational q = 1 is rejected; substitute a series in 1 - q to take the limit");
}

}  // namespace

Rational factorial_gamma(long n) {
  if (n < 0) throw InputError("factorial_gamma requires n >= 0");
  return Rational(factorial(n));
}

Rational gamma_int(long n) {
  if (n <= 0) throw InputError("gamma pole at non-positive integer " + std::to_string(n));
  return Rational(factorial(n - 1));
}

Rational barnes_g(long n) {
  if (n <= 0) throw InputError("barnes_g requires n >= 1");
  Rational acc = 1;
  for (long j = 1; j <= n - 2; ++j) acc *= Rational(factorial(j));
  return acc;
}

Rational binomial(long a, long b) {
  if (b < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < b; ++i) num *= Rational(a - i);
  return num / Rational(factorial(b));
}

Scalar q_int(long n, const Scalar& q) {
  if (n < 0) throw InputError("q_int requires n >= 0");
  Scalar acc(0);
  Scalar p(1);
  for (long j = 0; j < n; ++j) {
    acc += p;
    p *= q;
  }
  return acc;
}

Scalar q_pochhammer(long k, const Scalar& q) {
  if (k < 0) throw InputError("q_pochhammer requires k >= 0");
  Scalar acc(1);
  Scalar p = q;
  for (long i = 1; i <= k; ++i) {
    acc *= Scalar(1) - p;
    p *= q;
  }
  return acc;
}

Scalar q_gamma(long n, const Scalar& q) {
  if (n < 1) throw InputError("q_gamma requires n >= 1");
  reject_rational_one(q);
  Scalar acc(1);
  for (long j = 1; j <= n - 1; ++j) acc *= q_int(j, q);
  return acc;
}

Scalar q_barnes(long n, const Scalar& q) {
  if (n < 1) throw InputError("q_barnes requires n >= 1");
  reject_rational_one(q);
  Scalar acc(1);
  for (long j = 2; j <= n - 1; ++j) acc *= q_gamma(j, q);
  return acc;
}

Scalar q_binomial(long a, long b, const Scalar& q) {
  reject_rational_one(q);
  if (b < 0) return Scalar(0);
  if (b == 0) return Scalar(1);
  if (a >= 0) {
    if (b > a) return Scalar(0);
    return q_gamma(a + 1, q) / (q_gamma(b + 1, q) * q_gamma(a - b + 1, q));
  }
  // a < 0, b >= 1: the product extension, Laurent in q.
  Scalar num(1), den(1);
  for (long i = 1; i <= b; ++i) {
    num *= Scalar(1) - q.pow(a - b + i);
    den *= Scalar(1) - q.pow(i);
  }
  return num / den;
}

Series euler_phi_series(int order) {
  if (order < 0) throw InputError("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    long g2 = k * (3 * k + 1) / 2;
    if (g1 > order) break;
    Rational s = (k % 2 == 1) ? -1 : 1;
    c[static_cast<std::size_t>(g1)] += s;
    if (g2 <= order) c[static_cast<std::size_t>(g2)] += s;
  }
  return Series::from_coeffs(std::move(c), 0, order);
}

}  // namespace toep
