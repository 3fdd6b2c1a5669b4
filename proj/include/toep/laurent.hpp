#pragma once

#include <map>
#include <vector>

#include "toep/partitions.hpp"
#include "toep/rational.hpp"

namespace toep {

// Multivariate Laurent polynomial with exact rational coefficients.
// Every exponent vector has the same fixed length.
class LaurentPoly {
 public:
  using Exponents = std::vector<long>;
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPoly(int nvars);
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(Exponents exps, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly scaled(const Rational& c) const;

  // z_j -> z_j^{-1} simultaneously in every variable
  LaurentPoly inverted_vars() const;

  // Values must be nonzero wherever a negative exponent touches them.
  Rational evaluate(const std::vector<Rational>& values) const;

 private:
  int nvars_;
  TermMap terms_;
  void check_same(const LaurentPoly& o) const;
};

// Univariate window embedded into variable `var`: window[i] becomes the
// coefficient of exponent lo + i.
LaurentPoly laurent_embed(int nvars, int var, long lo, const std::vector<Rational>& window);

// Schur polynomial in nvars variables via tableau enumeration.  Zero when
// the shape has more rows than variables.
LaurentPoly schur_poly(const Partition& lam, int nvars);

}  // namespace toep
