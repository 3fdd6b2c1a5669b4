#include "toep/symfunc.hpp"

#include <algorithm>

#include "toep/error.hpp"
#include "toep/matrix.hpp"
#include "toep/qfunctions.hpp"

namespace toep {

namespace {

void require_series_mode(const Specialization& x, const char* what) {
  if (x.q().is_rational())
    throw InputError(std::string(what) +
                     " of the infinite principal specialization is closed-form only in series "
                     "mode; rational q supports power sums only");
}

}  // namespace

Scalar power_p(long k, const Specialization& x) {
  if (k < 1) throw InputError("power sums are indexed by k >= 1");
  if (x.is_finite()) {
    Scalar acc(0);
    for (const Scalar& v : x.values()) acc += v.pow(k);
    return acc;
  }
  const Scalar& q = x.q();
  return q.pow(x.shift() * k) / (Scalar(1) - q.pow(k));
}

Scalar complete_h(long k, const Specialization& x) {
  if (k < 0) return Scalar(0);
  if (k == 0) return Scalar(1);
  if (!x.is_finite()) {
    require_series_mode(x, "complete_h");
    const Scalar& q = x.q();
    return q.pow(x.shift() * k) / q_pochhammer(k, q);
  }
  return h_prefix(x, k)[static_cast<std::size_t>(k)];
}

Scalar elementary_e(long k, const Specialization& x) {
  if (k < 0) return Scalar(0);
  if (k == 0) return Scalar(1);
  if (!x.is_finite()) {
    require_series_mode(x, "elementary_e");
    const Scalar& q = x.q();
    return q.pow(k * (k - 1) / 2 + x.shift() * k) / q_pochhammer(k, q);
  }
  if (k > x.num_vars()) return Scalar(0);
  return e_prefix(x, k)[static_cast<std::size_t>(k)];
}

std::vector<Scalar> h_prefix(const Specialization& x, long kmax) {
  std::vector<Scalar> h(static_cast<std::size_t>(kmax) + 1, Scalar(0));
  h[0] = Scalar(1);
  if (!x.is_finite()) {
    for (long k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] = complete_h(k, x);
    return h;
  }
  std::vector<Scalar> p(static_cast<std::size_t>(kmax) + 1, Scalar(0));
  for (long k = 1; k <= kmax; ++k) p[static_cast<std::size_t>(k)] = power_p(k, x);
  for (long k = 1; k <= kmax; ++k) {
    Scalar acc(0);
    for (long i = 1; i <= k; ++i)
      acc += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
    h[static_cast<std::size_t>(k)] = acc / Scalar(Rational(k));
  }
  return h;
}

std::vector<Scalar> e_prefix(const Specialization& x, long kmax) {
  std::vector<Scalar> e(static_cast<std::size_t>(kmax) + 1, Scalar(0));
  e[0] = Scalar(1);
  if (!x.is_finite()) {
    for (long k = 1; k <= kmax; ++k) e[static_cast<std::size_t>(k)] = elementary_e(k, x);
    return e;
  }
  // coefficients of prod_i (1 + x_i z), truncated at degree kmax
  long used = 0;
  for (const Scalar& v : x.values()) {
    ++used;
    long top = std::min(kmax, used);
    for (long j = top; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  }
  return e;
}

Scalar jacobi_trudi_det(const std::vector<Scalar>& h, const Partition& mu,
                        const Partition& lambda) {
  long n = length(mu);
  if (n == 0) return Scalar(1);
  ScalarMatrix m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (long a = 1; a <= n; ++a)
    for (long b = 1; b <= n; ++b) {
      long idx = part(mu, a) - part(lambda, b) - a + b;
      if (idx < 0) {
        m[a - 1][b - 1] = Scalar(0);
      } else {
        if (idx >= static_cast<long>(h.size()))
          throw CheckError("jacobi_trudi_det: h prefix shorter than required index " +
                           std::to_string(idx));
        m[a - 1][b - 1] = h[static_cast<std::size_t>(idx)];
      }
    }
  return det_scalar(m);
}

Scalar skew_schur(const Partition& mu, const Partition& lambda, const Specialization& x,
                  SchurBasis basis) {
  if (!contains(lambda, mu)) return Scalar(0);
  long n = length(mu);
  if (n == 0) return Scalar(1);
  long kmax = part(mu, 1) + n - 1;
  std::vector<Scalar> base =
      basis == SchurBasis::H ? h_prefix(x, kmax) : e_prefix(x, kmax);
  return jacobi_trudi_det(base, mu, lambda);
}

Rational schur_at_ones(const Partition& mu, long N) {
  if (N < 0) throw InputError("schur_at_ones requires N >= 0");
  if (length(mu) > N)
    throw InputError("schur_at_ones requires N >= length(mu); " + partition_str(mu) + " has " +
                     std::to_string(length(mu)) + " parts");
  Rational num = 1;
  for (long j = 1; j <= N; ++j)
    for (long k = j + 1; k <= N; ++k) num *= Rational(part(mu, j) - part(mu, k) + k - j);
  return num / barnes_g(N + 1);
}

Rational schur_hook_content(const Partition& mu, long N) {
  if (N < 0) throw InputError("schur_hook_content requires N >= 0");
  Rational acc = 1;
  for (auto [hook, content] : hooks_and_contents(mu)) acc *= Rational(N + content) / Rational(hook);
  return acc;
}

bool cauchy_check(const Specialization& x, const Specialization& y, int D) {
  if (!x.is_graded() || !y.is_graded())
    throw InputError("cauchy_check requires graded specializations on both sides");
  for (const Specialization* s : {&x, &y})
    for (const Scalar& v : s->values())
      if (v.series().order() < D)
        throw InputError("cauchy_check: a value is tracked below the requested degree " +
                         std::to_string(D));
  Series prod_h = Series::constant(1, D);
  Series prod_e = Series::constant(1, D);
  for (const Scalar& xv : x.values())
    for (const Scalar& yv : y.values()) {
      Scalar xy = xv * yv;
      Series f = xy.as_series(D);
      prod_h = prod_h.mul(Series::constant(1, f.order()).sub(f).invert()).truncated(D);
      prod_e = prod_e.mul(Series::constant(1, f.order()).add(f)).truncated(D);
    }
  Scalar sum_h(0), sum_e(0);
  long lmax = std::min(x.num_vars(), y.num_vars());
  for (long w = 0; w <= D; ++w)
    for (const Partition& nu : partitions_of_max_length(w, x.num_vars())) {
      Partition nuc = conjugate(nu);
      if (length(nu) <= lmax) {
        Scalar sx = skew_schur(nu, {}, x, SchurBasis::H);
        Scalar sy = skew_schur(nu, {}, y, SchurBasis::H);
        sum_h += sx * sy;
      }
      if (length(nu) <= x.num_vars() && part(nu, 1) <= y.num_vars()) {
        Scalar sx = skew_schur(nu, {}, x, SchurBasis::H);
        Scalar syc = skew_schur(nuc, {}, y, SchurBasis::H);
        sum_e += sx * syc;
      }
    }
  return sum_h.as_series(D).agrees_to(prod_h, D) && sum_e.as_series(D).agrees_to(prod_e, D);
}

}  // namespace toep
