#include "toep/specialization.hpp"

#include "toep/error.hpp"

namespace toep {

Specialization Specialization::finite_list(std::vector<Scalar> values) {
  Specialization s;
  s.kind_ = SpecKind::FiniteList;
  s.values_ = std::move(values);
  return s;
}

Specialization Specialization::principal(const Scalar& q, long count) {
  if (count < 0) throw InputError("principal specialization requires count >= 0");
  Specialization s;
  s.kind_ = SpecKind::PrincipalFinite;
  s.q_ = q;
  Scalar p(1);
  for (long i = 0; i < count; ++i) {
    s.values_.push_back(p);
    p *= q;
  }
  return s;
}

Specialization Specialization::principal_shifted(const Scalar& q, long start, long count) {
  if (count < 0) throw InputError("principal specialization requires count >= 0");
  Specialization s;
  s.kind_ = SpecKind::PrincipalShiftedFinite;
  s.q_ = q;
  for (long i = 0; i < count; ++i) s.values_.push_back(q.pow(start + i));
  return s;
}

Specialization Specialization::principal_infinite(const Scalar& q) {
  return principal_infinite_shifted(q, 0);
}

Specialization Specialization::principal_infinite_shifted(const Scalar& q, long shift) {
  if (q.is_rational()) {
    Rational r = q.rational();
    if (r >= 1 || r <= -1)
      throw InputError("principal_infinite requires |q| < 1 for convergence; got " + rat_str(r));
  }
  if (shift < 0) throw InputError("principal_infinite shift must be non-negative");
  Specialization s;
  s.kind_ = SpecKind::PrincipalInfinite;
  s.q_ = q;
  s.shift_ = shift;
  return s;
}

long Specialization::num_vars() const {
  if (!is_finite()) throw CheckError("num_vars on an infinite specialization");
  return static_cast<long>(values_.size());
}

const std::vector<Scalar>& Specialization::values() const {
  if (!is_finite()) throw CheckError("values of an infinite specialization are not materializable");
  return values_;
}

const Scalar& Specialization::q() const {
  if (kind_ == SpecKind::FiniteList) throw CheckError("finite_list has no q parameter");
  return q_;
}

long Specialization::shift() const { return shift_; }

Specialization Specialization::scaled_by_t(int order) const {
  if (!is_finite())
    throw InputError("graded mode requires finitely many variables");
  std::vector<Scalar> scaled;
  for (const Scalar& v : values_) {
    if (v.is_rational()) {
      if (v.rational() == 0)
        scaled.push_back(Scalar(Series::constant(0, order)));
      else
        scaled.push_back(Scalar(Series::monomial(v.rational(), 1, order)));
    } else {
      scaled.push_back(Scalar(v.series().shift(1)));
    }
  }
  return finite_list(std::move(scaled));
}

bool Specialization::is_graded() const {
  if (!is_finite()) return false;
  for (const Scalar& v : values_) {
    if (!v.is_series()) return false;
    auto val = v.series().valuation();
    if (val && *val < 1) return false;
  }
  return true;
}

}  // namespace toep
