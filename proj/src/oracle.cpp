#include "toep/oracle.hpp"

#include <cstdlib>
#include <string>

#include "toep/error.hpp"

namespace toep {

long oracle_cap() {
  const char* s = std::getenv("TM_MAX_ORACLE_N");
  if (!s) return 4;
  try {
    return std::stol(s);
  } catch (...) {
    throw SchemaError("TM_MAX_ORACLE_N must be an integer");
  }
}

Rational heine_minor(long lo, const std::vector<Rational>& window, const Partition& lam,
                     const Partition& mu, long N) {
  if (N < 0) throw InputError("matrix size must be nonnegative");
  long cap = oracle_cap();
  if (N > cap)
    throw InputError("oracle size " + std::to_string(N) + " exceeds the cap " +
                     std::to_string(cap) + " (raise TM_MAX_ORACLE_N to override)");
  if (window.size() > 12) throw InputError("oracle window is wider than 12 coefficients");
  if (N == 0) return Rational(1);

  int n = static_cast<int>(N);
  LaurentPoly acc = schur_poly(mu, n).inverted_vars() * schur_poly(lam, n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      LaurentPoly::Exponents ej(static_cast<std::size_t>(n), 0), ek = ej;
      ej[static_cast<std::size_t>(j)] = 1;
      ek[static_cast<std::size_t>(k)] = 1;
      acc *= LaurentPoly::monomial(ej, Rational(1)) - LaurentPoly::monomial(ek, Rational(1));
      ej[static_cast<std::size_t>(j)] = -1;
      ek[static_cast<std::size_t>(k)] = -1;
      acc *= LaurentPoly::monomial(ej, Rational(1)) - LaurentPoly::monomial(ek, Rational(1));
    }
  for (int j = 0; j < n; ++j) acc *= laurent_embed(n, j, lo, window);
  return acc.constant_term() / Rational(factorial(N));
}

Rational heine_minor(const Symbol& f, const Partition& lam, const Partition& mu, long N) {
  auto [lo, coeffs] = f.as_laurent();
  std::vector<Rational> window;
  window.reserve(coeffs.size());
  for (const auto& c : coeffs) window.push_back(c.rational());
  return heine_minor(lo, window, lam, mu, N);
}

Rational morris_value(long gamma, long delta, const Partition& lam, const Partition& mu,
                      long N) {
  return heine_minor(Symbol::pure_fh(gamma, delta), lam, mu, N);
}

Scalar pairing_value(const Symbol& f, const std::vector<Scalar>& p_coeffs,
                     const std::vector<Scalar>& q_coeffs) {
  Scalar acc(0);
  for (std::size_t r = 0; r < p_coeffs.size(); ++r)
    for (std::size_t s = 0; s < q_coeffs.size(); ++s)
      acc += p_coeffs[r] * q_coeffs[s] *
             f.fourier_coefficient(static_cast<long>(r) - static_cast<long>(s));
  return acc;
}

}  // namespace toep
