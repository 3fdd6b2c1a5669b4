#pragma once

#include <vector>

#include "toep/scalar.hpp"

namespace toep {

enum class SpecKind { FiniteList, PrincipalFinite, PrincipalShiftedFinite, PrincipalInfinite };

// A point where symmetric functions are evaluated: an explicit finite value
// list, a finite geometric run of q-powers, or the infinite principal
// specialization 1, q, q^2, ... (optionally shifted to start at q^shift).
// Finite kinds materialize their values; the infinite kind stays symbolic and
// only supports closed-form power sums (rational q) or closed-form h/e/p
// (series q).
class Specialization {
 public:
  static Specialization finite_list(std::vector<Scalar> values);
  static Specialization principal(const Scalar& q, long count);
  static Specialization principal_shifted(const Scalar& q, long start, long count);
  // Rational q requires |q| < 1; series q is formal.
  static Specialization principal_infinite(const Scalar& q);
  static Specialization principal_infinite_shifted(const Scalar& q, long shift);

  SpecKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != SpecKind::PrincipalInfinite; }
  long num_vars() const;                     // finite kinds only
  const std::vector<Scalar>& values() const;  // finite kinds only
  const Scalar& q() const;                   // principal kinds only
  long shift() const;                        // infinite kind only

  // Every variable multiplied by the grading variable t, as series tracked to
  // `order`. Finite kinds only.
  Specialization scaled_by_t(int order) const;
  // Finite, with every value a series of valuation >= 1 (or tracked-zero).
  bool is_graded() const;

 private:
  SpecKind kind_;
  std::vector<Scalar> values_;
  Scalar q_;
  long shift_ = 0;
};

}  // namespace toep
