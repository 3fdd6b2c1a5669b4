#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toep/specialization.hpp"
#include "toep/symfunc.hpp"

namespace toep {

enum class SymbolKind { PureFH, ThetaGD, ThetaD, Tridiagonal, Factors };

// One generating-function factor of a symbol: H or E series evaluated at a
// specialization, in the variable z or z^{-1}.
struct SymbolFactor {
  bool zinv;
  SchurBasis basis;
  Specialization spec;
};

struct TwoSidedSpecs {
  Specialization y;  // pairs with the z^{-1} side
  Specialization x;  // pairs with the z side
  SchurBasis basis;
};

// A Toeplitz symbol: one of the builtin families with closed-form Fourier
// coefficients, or a general product of generating-function factors whose
// coefficients are computed by window convolution.
class Symbol {
 public:
  static Symbol pure_fh(long gamma, long delta);
  static Symbol theta_gd(long gamma, long delta, const Scalar& q);
  static Symbol theta_d(long delta, const Scalar& q);
  static Symbol tridiagonal(const Rational& x, const Rational& y);
  static Symbol factors(std::vector<SymbolFactor> fs);

  SymbolKind kind() const { return kind_; }
  long gamma() const;
  long delta() const;
  const Scalar& q() const;
  const Rational& x_param() const;
  const Rational& y_param() const;
  const std::vector<SymbolFactor>& factor_list() const;

  Scalar fourier_coefficient(long k) const;
  std::vector<Scalar> fourier_window(long lo, long hi) const;

  // True when the symbol has finitely many exactly-known nonzero coefficients.
  bool is_laurent_finite() const;
  // Full coefficient window (lo, coefficients); Laurent-finite symbols only.
  std::pair<long, std::vector<Scalar>> as_laurent() const;

  // f(1), computed from the parameters rather than the coefficients.
  Scalar value_at_one() const;

  // The two specializations whose pairing reproduces this symbol.
  TwoSidedSpecs two_sided_specs() const;

  std::string str() const;

 private:
  Symbol() = default;
  SymbolKind kind_ = SymbolKind::Factors;
  long gamma_ = 0, delta_ = 0;
  Scalar q_;
  Rational x_, y_;
  std::vector<SymbolFactor> factors_;

  Scalar fold_coefficient(long k) const;
};

}  // namespace toep
