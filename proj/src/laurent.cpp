#include "toep/laurent.hpp"

#include "toep/error.hpp"

namespace toep {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw InputError("LaurentPoly needs a nonnegative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Rational& c) {
  LaurentPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw CheckError("exponent vector length does not match the variable count");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw CheckError("exponent vector length does not match the variable count");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const {
  return coefficient(Exponents(static_cast<std::size_t>(nvars_), 0));
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_)
    throw CheckError("Laurent polynomials live in different variable counts");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly out(nvars_);
  Exponents sum(static_cast<std::size_t>(nvars_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

LaurentPoly LaurentPoly::inverted_vars() const {
  LaurentPoly out(nvars_);
  Exponents neg(static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -e[i];
    out.add_term(neg, c);
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw InputError("evaluation point has the wrong number of coordinates");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= rat_pow(values[i], e[i]);
    acc += term;
  }
  return acc;
}

LaurentPoly laurent_embed(int nvars, int var, long lo, const std::vector<Rational>& window) {
  if (var < 0 || var >= nvars) throw InputError("embedding variable index out of range");
  LaurentPoly out(nvars);
  LaurentPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
  for (std::size_t i = 0; i < window.size(); ++i) {
    e[static_cast<std::size_t>(var)] = lo + static_cast<long>(i);
    out.add_term(e, window[i]);
  }
  return out;
}

namespace {

// Row-major tableau fill; rows weakly increase, columns strictly increase.
void schur_fill(const Partition& lam, int nvars, long i, long j,
                std::vector<std::vector<long>>& tab, LaurentPoly::Exponents& counts,
                LaurentPoly& out) {
  if (i > length(lam)) {
    out.add_term(counts, Rational(1));
    return;
  }
  if (j > part(lam, i)) {
    schur_fill(lam, nvars, i + 1, 1, tab, counts, out);
    return;
  }
  long lowest = 1;
  if (j >= 2) lowest = std::max(lowest, tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]);
  if (i >= 2 && j <= part(lam, i - 1))
    lowest = std::max(lowest, tab[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1);
  for (long v = lowest; v <= nvars; ++v) {
    tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    ++counts[static_cast<std::size_t>(v - 1)];
    schur_fill(lam, nvars, i, j + 1, tab, counts, out);
    --counts[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

LaurentPoly schur_poly(const Partition& lam, int nvars) {
  LaurentPoly out(nvars);
  if (length(lam) > nvars) return out;
  if (length(lam) == 0) return LaurentPoly::constant(nvars, Rational(1));
  std::vector<std::vector<long>> tab(static_cast<std::size_t>(length(lam)));
  for (long i = 1; i <= length(lam); ++i)
    tab[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(part(lam, i)), 0);
  LaurentPoly::Exponents counts(static_cast<std::size_t>(nvars), 0);
  schur_fill(lam, nvars, 1, 1, tab, counts, out);
  return out;
}

}  // namespace toep
