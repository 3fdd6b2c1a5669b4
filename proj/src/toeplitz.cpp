#include "toep/toeplitz.hpp"

#include "toep/error.hpp"

namespace toep {

namespace {

void check_shifts(long N, const Partition& lam, const Partition& mu) {
  if (N < 0) throw InputError("matrix size must be nonnegative");
  if (length(lam) > N || length(mu) > N)
    throw InputError("partition length exceeds the matrix size");
}

// 1-based indices kept after the striking walk: strike an initial run of
// d - p_1, then alternate keeping one line and striking p_j - p_{j+1}.
std::vector<long> kept_lines(const Partition& p, long N, long d) {
  std::vector<long> keep;
  keep.reserve(static_cast<std::size_t>(N));
  long idx = 1 + (d - part(p, 1));
  for (long j = 1; j <= N; ++j) {
    keep.push_back(idx);
    ++idx;
    idx += part(p, j) - part(p, j + 1);
  }
  return keep;
}

}  // namespace

ScalarMatrix toeplitz_matrix(const Symbol& f, long N) {
  return minor_matrix(f, N, {}, {});
}

ScalarMatrix minor_matrix(const Symbol& f, long N, const Partition& lam, const Partition& mu) {
  check_shifts(N, lam, mu);
  ScalarMatrix m(static_cast<std::size_t>(N));
  for (long j = 1; j <= N; ++j) {
    auto& row = m[static_cast<std::size_t>(j - 1)];
    row.reserve(static_cast<std::size_t>(N));
    for (long k = 1; k <= N; ++k)
      row.push_back(f.fourier_coefficient(j - part(lam, j) - k + part(mu, k)));
  }
  return m;
}

ScalarMatrix striking_minor_matrix(const Symbol& f, long N, const Partition& lam,
                                   const Partition& mu) {
  check_shifts(N, lam, mu);
  long d = std::max(part(lam, 1), part(mu, 1));
  ScalarMatrix full = toeplitz_matrix(f, N + d);
  std::vector<long> rows = kept_lines(lam, N, d);
  std::vector<long> cols = kept_lines(mu, N, d);
  ScalarMatrix m(static_cast<std::size_t>(N));
  for (long j = 0; j < N; ++j) {
    auto& row = m[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k)
      row.push_back(full[static_cast<std::size_t>(rows[static_cast<std::size_t>(j)] - 1)]
                        [static_cast<std::size_t>(cols[static_cast<std::size_t>(k)] - 1)]);
  }
  return m;
}

Scalar toeplitz_determinant(const Symbol& f, long N) {
  return det_scalar(toeplitz_matrix(f, N));
}

Scalar toeplitz_minor_det(const Symbol& f, long N, const Partition& lam, const Partition& mu) {
  return det_scalar(minor_matrix(f, N, lam, mu));
}

ScalarMatrix exact_inverse(const Symbol& f, long N) {
  if (N < 1) throw InputError("exact_inverse needs N >= 1");
  ScalarMatrix T = toeplitz_matrix(f, N);
  Scalar dN = det_scalar(T);
  ScalarMatrix inv = invert_scalar(T);
  for (long j = 1; j <= N; ++j)
    for (long k = 1; k <= N; ++k) {
      Partition lam(static_cast<std::size_t>(k - 1), 1);
      Partition mu(static_cast<std::size_t>(j - 1), 1);
      Scalar m = toeplitz_minor_det(f, N - 1, lam, mu) / dN;
      if ((j + k) % 2 != 0) m = -m;
      if (!scalar_eq(inv[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)], m))
        throw CheckError("inverse entry (" + std::to_string(j) + "," + std::to_string(k) +
                         ") disagrees with the minor identity");
    }
  return inv;
}

Scalar minor_from_inverse(const Symbol& f, long j, long k, long N) {
  if (j < 0 || k < 0 || j > N || k > N)
    throw InputError("minor_from_inverse needs 0 <= j,k <= N");
  ScalarMatrix T = toeplitz_matrix(f, N + 1);
  Scalar val = det_scalar(T) * invert_scalar(T)[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  return (j + k) % 2 == 0 ? val : -val;
}

namespace {

Symbol graded_hh_symbol(const Specialization& y, const Specialization& x, int order) {
  return Symbol::factors(
      {{true, SchurBasis::H, y}, {false, SchurBasis::H, x.scaled_by_t(order)}});
}

std::string agree_str(const Scalar& a, const Scalar& b) {
  return "lhs = " + a.str() + ", rhs = " + b.str();
}

}  // namespace

VerifyReport verify_schur_expansion(const Specialization& y, const Specialization& x, long N,
                                    int order) {
  if (N < 0) throw InputError("matrix size must be nonnegative");
  Specialization xg = x.scaled_by_t(order);
  Symbol f = graded_hh_symbol(y, x, order);
  Scalar lhs = toeplitz_determinant(f, N);
  Scalar rhs(0);
  for (long w = 0; w <= order; ++w)
    for (const auto& nu : partitions_of_max_length(w, N))
      rhs += skew_schur(nu, {}, y, SchurBasis::H) * skew_schur(nu, {}, xg, SchurBasis::H);
  VerifyReport r;
  r.identity = "schur_expansion";
  r.ok = scalar_agrees(lhs, rhs, order);
  r.detail = r.ok ? "determinant matches the Schur sum through degree " + std::to_string(order)
                  : agree_str(lhs, rhs);
  return r;
}

VerifyReport verify_stable_product(const Specialization& y, const Specialization& x, long N,
                                   int order) {
  if (!y.is_finite())
    throw InputError("the stabilized product needs finitely many y variables");
  long d = y.num_vars();
  if (N < d) throw InputError("stabilization needs N >= the number of y variables");
  Specialization xg = x.scaled_by_t(order);
  Symbol f = graded_hh_symbol(y, x, order);
  Scalar dN = toeplitz_determinant(f, N);
  Scalar dN1 = toeplitz_determinant(f, N + 1);
  Scalar prod(1);
  for (const auto& yk : y.values())
    for (const auto& xj : xg.values()) prod /= Scalar(1) - xj * yk;
  VerifyReport r;
  r.identity = "stable_product";
  bool matches = scalar_agrees(dN, prod, order);
  bool stable = scalar_agrees(dN, dN1, order);
  r.ok = matches && stable;
  if (r.ok)
    r.detail = "determinant equals the Cauchy product and is independent of N through degree " +
               std::to_string(order);
  else if (!matches)
    r.detail = agree_str(dN, prod);
  else
    r.detail = "determinant changed between N and N+1: " + agree_str(dN, dN1);
  return r;
}

VerifyReport verify_minor_factorization(const Specialization& y, const Specialization& x,
                                        const Partition& lam, const Partition& mu, long N,
                                        int order) {
  if (!y.is_finite())
    throw InputError("the stabilized product needs finitely many y variables");
  long d = y.num_vars();
  if (N < d) throw InputError("stabilization needs N >= the number of y variables");
  check_shifts(N, lam, mu);
  Specialization xg = x.scaled_by_t(order);
  Symbol f = graded_hh_symbol(y, x, order);
  Scalar direct = toeplitz_minor_det(f, N, lam, mu);

  Scalar sum(0);
  long wmax = order + weight(lam);
  for (long w = 0; w <= wmax; ++w)
    for (const auto& nu : partitions_of_max_length(w, N))
      sum += skew_schur(nu, mu, y, SchurBasis::H) * skew_schur(nu, lam, xg, SchurBasis::H);

  VerifyReport r;
  r.identity = "minor_factorization";
  r.ok = scalar_agrees(direct, sum, order);
  std::string mode = "skew sum";
  if (r.ok && N >= d + length(mu)) {
    Scalar fin(0);
    for (const auto& tau : subpartitions(lam))
      fin += skew_schur(lam, tau, y, SchurBasis::H) * skew_schur(mu, tau, xg, SchurBasis::H);
    Scalar closed = toeplitz_determinant(f, N) * fin;
    r.ok = scalar_agrees(direct, closed, order);
    mode = "skew sum and stabilized factorization";
    if (!r.ok) {
      r.detail = "stabilized factorization mismatch: " + agree_str(direct, closed);
      return r;
    }
  }
  r.detail = r.ok ? "minor determinant matches the " + mode + " through degree " +
                        std::to_string(order)
                  : agree_str(direct, sum);
  return r;
}

VerifyReport verify_dual_minor_schur(const Specialization& y, const Specialization& x,
                                     const Partition& lam, const Partition& mu, long N) {
  if (!y.is_finite() || !x.is_finite())
    throw InputError("this identity needs finite variable lists on both sides");
  long d = y.num_vars();
  if (length(mu) > N) throw InputError("this identity needs l(mu) <= N");
  check_shifts(N, lam, mu);

  std::vector<Scalar> point;
  Scalar ypow(1);
  for (const auto& v : y.values()) {
    Rational r = v.rational();
    if (r == 0) throw InputError("y values must be nonzero");
    point.emplace_back(Rational(1) / r);
    ypow *= v.pow(-N);
  }
  for (const auto& v : x.values()) point.push_back(v);

  Partition shape = plus_rectangle(mu, d, N);
  Scalar lhs = skew_schur(conjugate(shape), conjugate(lam),
                          Specialization::finite_list(std::move(point)), SchurBasis::H);

  Symbol f = Symbol::factors({{true, SchurBasis::E, y}, {false, SchurBasis::E, x}});
  Scalar via_minor = ypow * toeplitz_minor_det(f, N, lam, mu);

  Scalar sum(0);
  Partition mup = conjugate(mu), lamp = conjugate(lam);
  for (const auto& kappa : partitions_in_box(d + part(mu, 1), N))
    sum += skew_schur(kappa, mup, y, SchurBasis::H) * skew_schur(kappa, lamp, x, SchurBasis::H);
  Scalar via_sum = ypow * sum;

  VerifyReport r;
  r.identity = "dual_minor_schur";
  bool m1 = scalar_eq(lhs, via_minor);
  bool m2 = scalar_eq(lhs, via_sum);
  r.ok = m1 && m2;
  if (r.ok)
    r.detail = "skew Schur value, minor determinant, and bounded sum all equal " + lhs.str();
  else if (!m1)
    r.detail = "minor route mismatch: " + agree_str(lhs, via_minor);
  else
    r.detail = "bounded sum mismatch: " + agree_str(lhs, via_sum);
  return r;
}

}  // namespace toep
