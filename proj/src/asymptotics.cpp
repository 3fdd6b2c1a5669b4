#include "toep/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "toep/error.hpp"
#include "toep/qfunctions.hpp"
#include "toep/symfunc.hpp"
#include "toep/toeplitz.hpp"

namespace toep {

namespace {

// Beta set of lam with L slots: strictly decreasing, beta[i] = lam_i + L-1-i.
std::vector<long> beta_set(const Partition& lam, long L) {
  std::vector<long> beta(L);
  for (long i = 0; i < L; ++i) beta[i] = part(lam, i + 1) + (L - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<long>());
  long L = static_cast<long>(beta.size());
  std::vector<long> parts(L);
  for (long i = 0; i < L; ++i) parts[i] = beta[i] - (L - 1 - i);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

long character_rec(const Partition& lam, const Partition& phi);

std::map<std::pair<Partition, Partition>, long> character_memo;
std::mutex character_memo_mutex;

long character_memoized(const Partition& lam, const Partition& phi) {
  std::pair<Partition, Partition> key(lam, phi);
  {
    std::lock_guard<std::mutex> lock(character_memo_mutex);
    auto it = character_memo.find(key);
    if (it != character_memo.end()) return it->second;
  }
  long value = character_rec(lam, phi);
  {
    std::lock_guard<std::mutex> lock(character_memo_mutex);
    character_memo.emplace(std::move(key), value);
  }
  return value;
}

// Removes every border strip of size phi_1 from lam (one slot of the beta set
// dropped by phi_1, landing on a free value); the sign counts the occupied
// values jumped over.
long character_rec(const Partition& lam, const Partition& phi) {
  if (phi.empty()) return 1;
  long r = phi[0];
  Partition rest(phi.begin() + 1, phi.end());
  long L = length(lam);
  std::vector<long> beta = beta_set(lam, L);
  long total = 0;
  for (long i = 0; i < L; ++i) {
    long target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    long jumped = 0;
    for (long t = 0; t < L; ++t) {
      if (t == i) continue;
      if (beta[t] == target) occupied = true;
      if (beta[t] > target && beta[t] < beta[i]) ++jumped;
    }
    if (occupied) continue;
    std::vector<long> next = beta;
    next[i] = target;
    long term = character_memoized(partition_from_beta(std::move(next)), rest);
    total += (jumped % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

long sym_group_character(const Partition& lam, const Partition& phi) {
  Partition l = make_partition(lam, "lambda");
  Partition p = make_partition(phi, "phi");
  if (weight(l) != weight(p))
    throw InputError("character requires |lambda| == |phi|; got " + partition_str(l) + " and " +
                     partition_str(p));
  return character_memoized(l, p);
}

Scalar laguerre(long n, long a, const Scalar& t) {
  if (n < 0 || a < 0) throw InputError("laguerre needs n >= 0 and a >= 0");
  Scalar total(0);
  Scalar tpow(1);
  for (long r = 0; r <= n; ++r) {
    Rational coeff = binomial(n + a, n - r) / Rational(factorial(r));
    if (r % 2 == 1) coeff = -coeff;
    total += Scalar(coeff) * tpow;
    tpow *= t;
  }
  return total;
}

const Scalar& LogCoefficients::c_plus(long k) const {
  if (k < 1 || k > static_cast<long>(plus.size()))
    throw CheckError("log coefficient c_" + std::to_string(k) + " is outside the computed range");
  return plus[k - 1];
}

const Scalar& LogCoefficients::c_minus(long k) const {
  if (k < 1 || k > static_cast<long>(minus.size()))
    throw CheckError("log coefficient c_{-" + std::to_string(k) + "} is outside the computed range");
  return minus[k - 1];
}

LogCoefficients log_coefficients(const TwoSidedSpecs& specs, long kmax) {
  LogCoefficients c;
  c.plus.reserve(kmax);
  c.minus.reserve(kmax);
  for (long k = 1; k <= kmax; ++k) {
    Rational sign_over_k = Rational(1) / Rational(k);
    if (specs.basis == SchurBasis::E && k % 2 == 0) sign_over_k = -sign_over_k;
    c.plus.push_back(power_p(k, specs.x) * Scalar(sign_over_k));
    c.minus.push_back(power_p(k, specs.y) * Scalar(sign_over_k));
  }
  return c;
}

Scalar delta_factor(const Partition& phi, const Partition& psi, const LogCoefficients& c) {
  std::map<long, std::pair<long, long>> mult;  // part size -> (count in phi, count in psi)
  for (long k : phi) mult[k].first += 1;
  for (long k : psi) mult[k].second += 1;
  Scalar out(1);
  for (const auto& [k, nm] : mult) {
    auto [n, m] = nm;
    long lo = std::min(n, m);
    long hi = std::max(n, m);
    Scalar term(rat_pow(Rational(k), hi) * Rational(factorial(lo)));
    if (n != m) {
      const Scalar& cc = (n > m) ? c.c_minus(k) : c.c_plus(k);
      term *= cc.pow(hi - lo);
    }
    Scalar arg = Scalar(Rational(-k)) * c.c_plus(k) * c.c_minus(k);
    term *= laguerre(lo, hi - lo, arg);
    out *= term;
  }
  return out;
}

Scalar character_sum(const Partition& lam, const Partition& mu, const LogCoefficients& c) {
  Partition l = make_partition(lam, "lambda");
  Partition m = make_partition(mu, "mu");
  Scalar total(0);
  for (const Partition& phi : partitions_of(weight(l))) {
    long chl = sym_group_character(l, phi);
    if (chl == 0) continue;
    for (const Partition& psi : partitions_of(weight(m))) {
      long chm = sym_group_character(m, psi);
      if (chm == 0) continue;
      Rational w = Rational(chl) * Rational(chm) /
                   (centralizer_order(phi) * centralizer_order(psi));
      total += Scalar(w) * delta_factor(phi, psi, c);
    }
  }
  return total;
}

Scalar skew_pair_sum(const Partition& lam, const Partition& mu, const Specialization& y,
                     const Specialization& x, SchurBasis basis) {
  Partition l = make_partition(lam, "lambda");
  Partition m = make_partition(mu, "mu");
  Scalar total(0);
  for (const Partition& nu : subpartitions(l)) {
    Scalar sy = skew_schur(l, nu, y, basis);
    if (sy.is_zero()) continue;
    total += sy * skew_schur(m, nu, x, basis);
  }
  return total;
}

std::vector<Scalar> h_from_profile(const std::vector<Scalar>& c, long kmax) {
  if (kmax < 0) throw InputError("h_from_profile needs kmax >= 0");
  if (static_cast<long>(c.size()) < kmax)
    throw InputError("profile has " + std::to_string(c.size()) + " coefficients, needs " +
                     std::to_string(kmax));
  std::vector<Scalar> h(kmax + 1, Scalar(0));
  h[0] = Scalar(1);
  for (long m = 1; m <= kmax; ++m) {
    Scalar acc(0);
    for (long i = 1; i <= m; ++i) acc += Scalar(Rational(i)) * c[i - 1] * h[m - i];
    h[m] = acc * Scalar(Rational(1) / Rational(m));
  }
  return h;
}

std::vector<ConvergenceRow> convergence_table(const Symbol& f, const Partition& lam,
                                              const Partition& mu, long N_max) {
  Partition l = make_partition(lam, "lambda");
  Partition m = make_partition(mu, "mu");
  TwoSidedSpecs specs = f.two_sided_specs();
  Scalar target_s = skew_pair_sum(l, m, specs.y, specs.x, specs.basis);
  if (!target_s.is_rational())
    throw InputError("convergence table needs rational symbol data");
  Rational target = target_s.rational();
  long start = std::max<long>(2, std::max(length(l), length(m)));
  if (N_max < start)
    throw InputError("N_max must be at least " + std::to_string(start) + " for these shapes");
  std::vector<ConvergenceRow> rows;
  rows.reserve(N_max - start + 1);
  for (long N = start; N <= N_max; ++N) {
    Scalar minor_s = toeplitz_minor_det(f, N, l, m);
    Scalar det_s = toeplitz_determinant(f, N);
    if (!minor_s.is_rational() || !det_s.is_rational())
      throw InputError("convergence table needs rational symbol data");
    ConvergenceRow row;
    row.N = N;
    row.minor_value = minor_s.rational();
    row.det_value = det_s.rational();
    if (row.det_value == 0)
      throw InputError("Toeplitz determinant vanishes at N = " + std::to_string(N));
    row.ratio = row.minor_value / row.det_value;
    row.target = target;
    row.abs_error = row.ratio - target;
    if (row.abs_error < 0) row.abs_error = -row.abs_error;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace toep
