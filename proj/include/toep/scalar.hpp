#pragma once

#include <string>
#include <variant>

#include "toep/rational.hpp"
#include "toep/series.hpp"

namespace toep {

// Exact value: either a rational or a truncated series. Rationals are exact to
// every order, so mixed arithmetic promotes them losslessly; multiplying by an
// exact zero collapses back to the rational zero.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(Series s) : v_(std::move(s)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(int n) : v_(Rational(n)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_series() const { return std::holds_alternative<Series>(v_); }
  const Rational& rational() const;
  const Series& series() const;
  // Rationals widen to an exact constant at the given order.
  Series as_series(int order) const;

  Scalar operator-() const;
  Scalar pow(long e) const;
  // Zero means: rational zero, or a series all of whose tracked coefficients
  // vanish.
  bool is_zero() const;

  std::string str(const std::string& var = "q") const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

 private:
  std::variant<Rational, Series> v_;
};

// Exact equality for rationals; windowed agreement through `order` for series
// (either side may be rational, compared as an exact constant).
bool scalar_agrees(const Scalar& a, const Scalar& b, int order);
// Strict: rationals compare exactly; series compare through the smaller of
// the two orders.
bool scalar_eq(const Scalar& a, const Scalar& b);

}  // namespace toep
