#include "toep/matrix.hpp"

#include <algorithm>
#include <optional>

#include "toep/error.hpp"

namespace toep {

namespace {

template <typename M>
std::size_t checked_size(const M& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw CheckError("determinant requires a square matrix");
  return m.size();
}

Series cofactor_det(const SeriesMatrix& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::optional<Series> acc;
  for (std::size_t i = 0; i < n; ++i) {
    SeriesMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Series> row(m[r].begin() + 1, m[r].end());
      minor.push_back(std::move(row));
    }
    Series term = m[i][0].mul(cofactor_det(minor));
    if (i % 2 == 1) term = term.neg();
    acc = acc ? acc->add(term) : term;
  }
  return *acc;
}

}  // namespace

Rational det_rational(const RationalMatrix& m) {
  std::size_t n = checked_size(m);
  if (n == 0) return 1;
  // Clear denominators row by row so Bareiss runs over integers.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rational prefactor = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(m[i][j]));
    prefactor /= Rational(l);
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = m[i][j] * Rational(l);
      a[i][j] = numerator(scaled);
    }
  }
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return prefactor * Rational(sign) * Rational(a[n - 1][n - 1]);
}

Series det_series(const SeriesMatrix& m0) {
  std::size_t n = checked_size(m0);
  if (n == 0) return Series::constant(1, 0);
  SeriesMatrix m = m0;
  int sign = 1;
  std::vector<Series> pivots;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot on the smallest valuation not above zero; deeper valuations would
    // silently cost tracked precision, so such columns go to cofactors.
    std::optional<std::size_t> best;
    int best_val = 1;
    for (std::size_t r = k; r < n; ++r) {
      auto v = m[r][k].valuation();
      if (v && *v <= 0 && (!best || *v < best_val)) {
        best = r;
        best_val = *v;
      }
    }
    if (!best) {
      std::size_t rem = n - k;
      if (rem > 6)
        throw InputError("series determinant: no unit pivot and the remaining block of size " +
                         std::to_string(rem) + " exceeds the cofactor fallback limit of 6");
      SeriesMatrix block(rem, std::vector<Series>(rem));
      for (std::size_t i = 0; i < rem; ++i)
        for (std::size_t j = 0; j < rem; ++j) block[i][j] = m[k + i][k + j];
      Series det = cofactor_det(block);
      for (const Series& p : pivots) det = det.mul(p);
      return sign < 0 ? det.neg() : det;
    }
    if (*best != k) {
      std::swap(m[k], m[*best]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Series factor = m[i][k].div(m[k][k]);
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j].sub(factor.mul(m[k][j]));
      m[i][k] = Series::constant(0, m[i][k].order());
    }
    pivots.push_back(m[k][k]);
  }
  Series det = m[n - 1][n - 1];
  for (const Series& p : pivots) det = det.mul(p);
  return sign < 0 ? det.neg() : det;
}

namespace {

bool all_rational(const ScalarMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_rational()) return false;
  return true;
}

int common_order(const ScalarMatrix& m) {
  int ord = 0;
  for (const auto& row : m)
    for (const auto& x : row)
      if (x.is_series()) ord = std::max(ord, x.series().order());
  return ord;
}

SeriesMatrix to_series_matrix(const ScalarMatrix& m) {
  int ord = common_order(m);
  SeriesMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(x.as_series(ord));
  return out;
}

}  // namespace

Scalar det_scalar(const ScalarMatrix& m) {
  std::size_t n = checked_size(m);
  if (n == 0) return Scalar(Rational(1));
  if (all_rational(m)) {
    RationalMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : m[i]) r[i].push_back(x.rational());
    return Scalar(det_rational(r));
  }
  return Scalar(det_series(to_series_matrix(m)));
}

RationalMatrix invert_rational(const RationalMatrix& m) {
  std::size_t n = checked_size(m);
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r][k] == 0) ++r;
    if (r == n) throw InputError("matrix is singular");
    if (r != k) {
      std::swap(a[k], a[r]);
      std::swap(inv[k], inv[r]);
    }
    Rational p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

SeriesMatrix invert_series(const SeriesMatrix& m) {
  std::size_t n = checked_size(m);
  Series det = det_series(m);
  if (det.tracked_zero()) throw InputError("matrix determinant has no tracked nonzero coefficient");
  SeriesMatrix inv(n, std::vector<Series>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        inv[0][0] = Series::constant(1, det.order()).div(det);
        break;
      }
      SeriesMatrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Series> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Series cof = det_series(minor);
      if ((i + j) % 2 == 1) cof = cof.neg();
      inv[i][j] = cof.div(det);
    }
  return inv;
}

ScalarMatrix invert_scalar(const ScalarMatrix& m) {
  std::size_t n = checked_size(m);
  ScalarMatrix out(n);
  if (all_rational(m)) {
    RationalMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : m[i]) r[i].push_back(x.rational());
    RationalMatrix inv = invert_rational(r);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : inv[i]) out[i].push_back(Scalar(x));
    return out;
  }
  SeriesMatrix inv = invert_series(to_series_matrix(m));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : inv[i]) out[i].push_back(Scalar(x));
  return out;
}

}  // namespace toep
