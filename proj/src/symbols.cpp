#include "toep/symbols.hpp"

#include <limits>

#include "toep/error.hpp"
#include "toep/qfunctions.hpp"

namespace toep {

Symbol Symbol::pure_fh(long gamma, long delta) {
  if (gamma < 0 || delta < 0) throw InputError("pure_fh needs gamma >= 0 and delta >= 0");
  Symbol s;
  s.kind_ = SymbolKind::PureFH;
  s.gamma_ = gamma;
  s.delta_ = delta;
  return s;
}

Symbol Symbol::theta_gd(long gamma, long delta, const Scalar& q) {
  if (gamma < 1 || delta < 1) throw InputError("theta_gd needs gamma >= 1 and delta >= 1");
  Symbol s;
  s.kind_ = SymbolKind::ThetaGD;
  s.gamma_ = gamma;
  s.delta_ = delta;
  s.q_ = q;
  return s;
}

Symbol Symbol::theta_d(long delta, const Scalar& q) {
  if (delta < 1) throw InputError("theta_d needs delta >= 1");
  Symbol s;
  s.kind_ = SymbolKind::ThetaD;
  s.delta_ = delta;
  s.q_ = q;
  return s;
}

Symbol Symbol::tridiagonal(const Rational& x, const Rational& y) {
  Symbol s;
  s.kind_ = SymbolKind::Tridiagonal;
  s.x_ = x;
  s.y_ = y;
  return s;
}

Symbol Symbol::factors(std::vector<SymbolFactor> fs) {
  Symbol s;
  s.kind_ = SymbolKind::Factors;
  s.factors_ = std::move(fs);
  return s;
}

long Symbol::gamma() const {
  if (kind_ != SymbolKind::PureFH && kind_ != SymbolKind::ThetaGD)
    throw CheckError("symbol has no gamma parameter");
  return gamma_;
}

long Symbol::delta() const {
  if (kind_ == SymbolKind::Tridiagonal || kind_ == SymbolKind::Factors)
    throw CheckError("symbol has no delta parameter");
  return delta_;
}

const Scalar& Symbol::q() const {
  if (kind_ != SymbolKind::ThetaGD && kind_ != SymbolKind::ThetaD)
    throw CheckError("symbol has no q parameter");
  return q_;
}

const Rational& Symbol::x_param() const {
  if (kind_ != SymbolKind::Tridiagonal) throw CheckError("symbol has no x parameter");
  return x_;
}

const Rational& Symbol::y_param() const {
  if (kind_ != SymbolKind::Tridiagonal) throw CheckError("symbol has no y parameter");
  return y_;
}

const std::vector<SymbolFactor>& Symbol::factor_list() const {
  if (kind_ != SymbolKind::Factors) throw CheckError("symbol is not in factor form");
  return factors_;
}

namespace {

// Coefficient of the factor at Fourier index m (orientation applied).
Scalar factor_coeff(const SymbolFactor& f, long m) {
  long k = f.zinv ? -m : m;
  return f.basis == SchurBasis::H ? complete_h(k, f.spec) : elementary_e(k, f.spec);
}

// Upper bound on indices with exactly representable nonzero coefficients, in
// the factor's own orientation; -1 when the support is infinite.  For graded
// and principal-series factors the bound is where valuations pass the tracked
// order, so only tracked-zero coefficients are dropped.
long factor_bound(const SymbolFactor& f) {
  const Specialization& s = f.spec;
  if (s.is_finite()) {
    if (f.basis == SchurBasis::E) return s.num_vars();
    if (s.num_vars() == 0) return 0;
    if (s.is_graded()) {
      int ord = std::numeric_limits<int>::max();
      for (const auto& v : s.values())
        if (v.is_series()) ord = std::min(ord, v.series().order());
      return ord == std::numeric_limits<int>::max() ? 0 : ord;
    }
    return -1;
  }
  if (!s.q().is_series()) return -1;
  long ord = s.q().series().order();
  long sh = s.shift();
  if (f.basis == SchurBasis::H) {
    if (sh <= 0) return -1;
    return ord / sh;
  }
  long k = 0;
  while (k * (k - 1) / 2 + sh * k <= ord) ++k;
  return k - 1;
}

// Exact-zero support bound; only factors with hard windows are Laurent finite.
long hard_bound(const SymbolFactor& f) {
  const Specialization& s = f.spec;
  if (s.is_finite() && f.basis == SchurBasis::E) return s.num_vars();
  if (s.is_finite() && s.num_vars() == 0) return 0;
  return -1;
}

struct Window {
  long lo = 0;
  std::vector<Scalar> c;
};

Window factor_window(const SymbolFactor& f, long bound) {
  Window w;
  w.lo = f.zinv ? -bound : 0;
  long hi = f.zinv ? 0 : bound;
  for (long m = w.lo; m <= hi; ++m) w.c.push_back(factor_coeff(f, m));
  return w;
}

Window convolve(const Window& a, const Window& b) {
  Window out;
  out.lo = a.lo + b.lo;
  out.c.assign(a.c.size() + b.c.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

}  // namespace

Scalar Symbol::fold_coefficient(long k) const {
  std::vector<Window> bounded;
  const SymbolFactor* unbounded = nullptr;
  for (const auto& f : factors_) {
    long b = factor_bound(f);
    if (b >= 0) {
      bounded.push_back(factor_window(f, b));
    } else if (unbounded) {
      throw InputError(
          "more than one factor has infinite Fourier support; coefficients of the product are "
          "not computable");
    } else {
      unbounded = &f;
    }
  }
  Window w;
  w.c = {Scalar(1)};
  for (const auto& fw : bounded) w = convolve(w, fw);
  if (!unbounded) {
    long idx = k - w.lo;
    if (idx < 0 || idx >= static_cast<long>(w.c.size())) return Scalar(0);
    return w.c[static_cast<std::size_t>(idx)];
  }
  Scalar acc(0);
  for (std::size_t j = 0; j < w.c.size(); ++j)
    acc += w.c[j] * factor_coeff(*unbounded, k - w.lo - static_cast<long>(j));
  return acc;
}

Scalar Symbol::fourier_coefficient(long k) const {
  switch (kind_) {
    case SymbolKind::PureFH:
      return Scalar(binomial(gamma_ + delta_, delta_ + k));
    case SymbolKind::ThetaGD:
      return q_binomial(gamma_ + delta_, delta_ + k, q_) * q_.pow(k * (k + 1) / 2);
    case SymbolKind::ThetaD: {
      if (k < -delta_) return Scalar(0);
      Scalar num = q_.pow(k * delta_ + k * (k - 1) / 2);
      return num / q_pochhammer(delta_ + k, q_);
    }
    case SymbolKind::Tridiagonal:
      if (k == -1) return Scalar(y_);
      if (k == 0) return Scalar(Rational(1) + x_ * y_);
      if (k == 1) return Scalar(x_);
      return Scalar(0);
    case SymbolKind::Factors:
      return fold_coefficient(k);
  }
  throw CheckError("unreachable symbol kind");
}

std::vector<Scalar> Symbol::fourier_window(long lo, long hi) const {
  if (lo > hi) throw InputError("fourier_window needs lo <= hi");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) out.push_back(fourier_coefficient(k));
  return out;
}

bool Symbol::is_laurent_finite() const {
  switch (kind_) {
    case SymbolKind::PureFH:
    case SymbolKind::ThetaGD:
    case SymbolKind::Tridiagonal:
      return true;
    case SymbolKind::ThetaD:
      return false;
    case SymbolKind::Factors:
      for (const auto& f : factors_)
        if (hard_bound(f) < 0) return false;
      return true;
  }
  throw CheckError("unreachable symbol kind");
}

std::pair<long, std::vector<Scalar>> Symbol::as_laurent() const {
  if (!is_laurent_finite())
    throw InputError("symbol " + str() + " is not Laurent finite");
  long lo = 0, hi = 0;
  switch (kind_) {
    case SymbolKind::PureFH:
    case SymbolKind::ThetaGD:
      lo = -delta_;
      hi = gamma_;
      break;
    case SymbolKind::Tridiagonal:
      lo = -1;
      hi = 1;
      break;
    case SymbolKind::Factors:
      for (const auto& f : factors_) {
        long b = hard_bound(f);
        if (f.zinv)
          lo -= b;
        else
          hi += b;
      }
      break;
    case SymbolKind::ThetaD:
      throw CheckError("unreachable");
  }
  return {lo, fourier_window(lo, hi)};
}

Scalar Symbol::value_at_one() const {
  switch (kind_) {
    case SymbolKind::PureFH:
      return Scalar(rat_pow(Rational(2), gamma_ + delta_));
    case SymbolKind::ThetaGD: {
      Scalar acc(1);
      for (long i = 0; i < delta_; ++i) acc *= Scalar(1) + q_.pow(i);
      for (long j = 1; j <= gamma_; ++j) acc *= Scalar(1) + q_.pow(j);
      return acc;
    }
    case SymbolKind::Tridiagonal:
      return Scalar((Rational(1) + x_) * (Rational(1) + y_));
    case SymbolKind::ThetaD:
      throw InputError("value_at_one is an infinite product for this symbol");
    case SymbolKind::Factors: {
      Scalar acc(1);
      for (const auto& f : factors_) {
        if (!f.spec.is_finite())
          throw InputError("value_at_one is an infinite product for this symbol");
        for (const auto& v : f.spec.values())
          acc = f.basis == SchurBasis::E ? acc * (Scalar(1) + v) : acc / (Scalar(1) - v);
      }
      return acc;
    }
  }
  throw CheckError("unreachable symbol kind");
}

TwoSidedSpecs Symbol::two_sided_specs() const {
  switch (kind_) {
    case SymbolKind::PureFH: {
      std::vector<Scalar> ys(static_cast<std::size_t>(delta_), Scalar(1));
      std::vector<Scalar> xs(static_cast<std::size_t>(gamma_), Scalar(1));
      return {Specialization::finite_list(std::move(ys)),
              Specialization::finite_list(std::move(xs)), SchurBasis::E};
    }
    case SymbolKind::ThetaGD:
      return {Specialization::principal(q_, delta_),
              Specialization::principal_shifted(q_, 1, gamma_), SchurBasis::E};
    case SymbolKind::Tridiagonal:
      return {Specialization::finite_list({Scalar(y_)}),
              Specialization::finite_list({Scalar(x_)}), SchurBasis::E};
    case SymbolKind::ThetaD:
      throw InputError("symbol " + str() + " has no two-sided factorization");
    case SymbolKind::Factors: {
      if (factors_.size() != 2 || factors_[0].zinv == factors_[1].zinv ||
          factors_[0].basis != factors_[1].basis)
        throw InputError(
            "factor symbols need exactly one z factor and one z^-1 factor of the same kind "
            "for a two-sided factorization");
      const SymbolFactor& fy = factors_[0].zinv ? factors_[0] : factors_[1];
      const SymbolFactor& fx = factors_[0].zinv ? factors_[1] : factors_[0];
      return {fy.spec, fx.spec, fy.basis};
    }
  }
  throw CheckError("unreachable symbol kind");
}

std::string Symbol::str() const {
  switch (kind_) {
    case SymbolKind::PureFH:
      return "PureFH(gamma=" + std::to_string(gamma_) + ", delta=" + std::to_string(delta_) + ")";
    case SymbolKind::ThetaGD:
      return "ThetaGD(gamma=" + std::to_string(gamma_) + ", delta=" + std::to_string(delta_) +
             ", q=" + q_.str() + ")";
    case SymbolKind::ThetaD:
      return "ThetaD(delta=" + std::to_string(delta_) + ", q=" + q_.str() + ")";
    case SymbolKind::Tridiagonal:
      return "Tridiagonal(x=" + rat_str(x_) + ", y=" + rat_str(y_) + ")";
    case SymbolKind::Factors:
      return "Factors(" + std::to_string(factors_.size()) + " factors)";
  }
  throw CheckError("unreachable symbol kind");
}

}  // namespace toep
