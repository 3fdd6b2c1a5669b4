#include "toep/scalar.hpp"

#include <algorithm>

#include "toep/error.hpp"

namespace toep {

const Rational& Scalar::rational() const {
  if (!is_rational()) throw CheckError("expected a rational value, found a series");
  return std::get<Rational>(v_);
}

const Series& Scalar::series() const {
  if (!is_series()) throw CheckError("expected a series value, found a rational");
  return std::get<Series>(v_);
}

Series Scalar::as_series(int order) const {
  if (is_series()) return series();
  return Series::constant(rational(), order);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  return Scalar(series().neg());
}

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  return series().tracked_zero();
}

Scalar Scalar::pow(long e) const {
  if (is_rational()) return Scalar(rat_pow(rational(), e));
  return Scalar(series().pow(e));
}

std::string Scalar::str(const std::string& var) const {
  if (is_rational()) return rat_str(rational());
  return series().str(var);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
  if (a.is_rational()) return Scalar(b.series().add_const(a.rational()));
  if (b.is_rational()) return Scalar(a.series().add_const(b.rational()));
  return Scalar(a.series().add(b.series()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
  if (a.is_rational()) {
    if (a.rational() == 0) return Scalar(Rational(0));
    return Scalar(b.series().scale(a.rational()));
  }
  if (b.is_rational()) {
    if (b.rational() == 0) return Scalar(Rational(0));
    return Scalar(a.series().scale(b.rational()));
  }
  return Scalar(a.series().mul(b.series()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_rational()) {
    if (b.rational() == 0) throw InputError("division by zero");
    if (a.is_rational()) return Scalar(Rational(a.rational() / b.rational()));
    return Scalar(a.series().scale(Rational(1) / b.rational()));
  }
  if (a.is_rational()) {
    if (a.rational() == 0) return Scalar(Rational(0));
    return Scalar(b.series().invert().scale(a.rational()));
  }
  return Scalar(a.series().div(b.series()));
}

bool scalar_agrees(const Scalar& a, const Scalar& b, int order) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return a.as_series(order).agrees_to(b.as_series(order), order);
}

bool scalar_eq(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  int order = std::min(a.is_series() ? a.series().order() : b.series().order(),
                       b.is_series() ? b.series().order() : a.series().order());
  return scalar_agrees(a, b, order);
}

}  // namespace toep
