#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toep/rational.hpp"

namespace toep {

// Truncated Laurent series in one formal variable. Coefficients for exponents
// in [lo, order] are tracked exactly, coefficients below lo are exactly zero,
// and coefficients above order are unknown. After normalization
// lo <= min(order, 0), so whenever order >= 0 the constant term is inside the
// tracked window.
//
// Binary operations track precision per operand: the result order is the
// largest exponent whose coefficient is fully determined by the tracked
// windows (valuations sharpen the bound for products).
class Series {
 public:
  Series() : Series(constant(0, 0)) {}

  static Series constant(const Rational& c, int order);
  static Series monomial(const Rational& c, int exp, int order);
  // c[i] is the coefficient of exponent lo + i; c.size() == order - lo + 1.
  static Series from_coeffs(std::vector<Rational> c, int lo, int order);

  int lo() const { return lo_; }
  int order() const { return ord_; }
  const Rational& coeff(int exp) const;
  // Smallest exponent with a nonzero tracked coefficient.
  std::optional<int> valuation() const;
  // Every tracked coefficient is zero (the series may still be nonzero beyond
  // the tracked order).
  bool tracked_zero() const { return !valuation().has_value(); }

  Series add(const Series& b) const;
  Series sub(const Series& b) const;
  Series mul(const Series& b) const;
  Series invert() const;
  Series div(const Series& b) const;
  Series pow(long e) const;
  Series neg() const;

  Series scale(const Rational& c) const;  // requires c != 0
  Series add_const(const Rational& c) const;
  Series shift(int k) const;  // multiply by var^k
  Series truncated(int new_order) const;

  bool eq_window(const Series& b) const;
  // True when coefficients agree for every exponent <= k; CheckError when
  // either side does not track through k.
  bool agrees_to(const Series& b, int k) const;
  bool is_zero_to(int k) const;

  std::string str(const std::string& var = "q") const;

 private:
  int lo_ = 0;
  int ord_ = 0;
  std::vector<Rational> c_;

  Series(int lo, int ord, std::vector<Rational> c);
  void normalize();
};

// Public strict entry point: "add" and "mul" require both operands to share
// one order; "invert-a" inverts a alone and requires a nonzero constant term
// with no lower-order terms.
Series series_arith(const Series& a, const Series& b, const std::string& op);

}  // namespace toep
