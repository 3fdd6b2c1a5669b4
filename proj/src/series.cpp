#include "toep/series.hpp"

#include <algorithm>
#include <utility>

#include "toep/error.hpp"

namespace toep {

namespace {
const Rational kZero = 0;
}

Series::Series(int lo, int ord, std::vector<Rational> c) : lo_(lo), ord_(ord), c_(std::move(c)) {
  if (ord_ < lo_ || c_.size() != static_cast<std::size_t>(ord_ - lo_ + 1))
    throw CheckError("series window is inconsistent with its coefficient count");
  normalize();
}

void Series::normalize() {
  // Coefficients below lo are exact zeros, so widening the window downward is
  // always sound; never keep lo above min(order, 0).
  while (lo_ > std::min(0, ord_)) {
    c_.insert(c_.begin(), 0);
    --lo_;
  }
  int limit = std::min(0, ord_);
  while (lo_ < limit && c_.front() == 0) {
    c_.erase(c_.begin());
    ++lo_;
  }
}

Series Series::constant(const Rational& c, int order) {
  if (order < 0) throw InputError("series order must be non-negative");
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1, 0);
  v[0] = c;
  return Series(0, order, std::move(v));
}

Series Series::monomial(const Rational& c, int exp, int order) {
  if (order < 0) throw InputError("series order must be non-negative");
  if (exp > order) throw InputError("monomial exponent exceeds the series order");
  int lo = std::min(exp, 0);
  std::vector<Rational> v(static_cast<std::size_t>(order - lo) + 1, 0);
  v[static_cast<std::size_t>(exp - lo)] = c;
  return Series(lo, order, std::move(v));
}

Series Series::from_coeffs(std::vector<Rational> c, int lo, int order) {
  return Series(lo, order, std::move(c));
}

const Rational& Series::coeff(int exp) const {
  if (exp < lo_) return kZero;
  if (exp > ord_) throw CheckError("coefficient requested above the tracked order");
  return c_[static_cast<std::size_t>(exp - lo_)];
}

std::optional<int> Series::valuation() const {
  for (int e = lo_; e <= ord_; ++e)
    if (coeff(e) != 0) return e;
  return std::nullopt;
}

Series Series::add(const Series& b) const {
  int lo = std::min(lo_, b.lo_);
  int ord = std::min(ord_, b.ord_);
  std::vector<Rational> c(static_cast<std::size_t>(ord - lo) + 1);
  for (int e = lo; e <= ord; ++e) c[static_cast<std::size_t>(e - lo)] = coeff(e) + b.coeff(e);
  return Series(lo, ord, std::move(c));
}

Series Series::neg() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return Series(lo_, ord_, std::move(c));
}

Series Series::sub(const Series& b) const { return add(b.neg()); }

Series Series::mul(const Series& b) const {
  // The coefficient at e is determined only when every split touching an
  // untracked factor coefficient meets an exact zero on the other side, which
  // the valuations bound.
  int va = valuation().value_or(ord_ + 1);
  int vb = b.valuation().value_or(b.ord_ + 1);
  int ord = std::min(ord_ + vb, b.ord_ + va);
  int lo = lo_ + b.lo_;
  std::vector<Rational> c(static_cast<std::size_t>(ord - lo) + 1, 0);
  for (int e = lo; e <= ord; ++e) {
    Rational acc = 0;
    int i0 = std::max(lo_, e - b.ord_);
    int i1 = std::min(ord_, e - b.lo_);
    for (int i = i0; i <= i1; ++i) acc += c_[static_cast<std::size_t>(i - lo_)] * b.coeff(e - i);
    c[static_cast<std::size_t>(e - lo)] = acc;
  }
  return Series(lo, ord, std::move(c));
}

Series Series::invert() const {
  auto v = valuation();
  if (!v) throw InputError("cannot invert a series with no nonzero tracked coefficient");
  int val = *v;
  int prec = ord_ - val;  // unit-part coefficients known through this index
  const Rational& u0 = coeff(val);
  std::vector<Rational> b(static_cast<std::size_t>(prec) + 1, 0);
  b[0] = Rational(1) / u0;
  for (int m = 1; m <= prec; ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m; ++i) acc += coeff(val + i) * b[static_cast<std::size_t>(m - i)];
    b[static_cast<std::size_t>(m)] = -acc / u0;
  }
  return Series(-val, ord_ - 2 * val, std::move(b));
}

Series Series::div(const Series& b) const { return mul(b.invert()); }

Series Series::pow(long e) const {
  if (e < 0) return invert().pow(-e);
  Series acc = Series::constant(1, ord_);
  Series base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1ul) acc = acc.mul(base);
    base = n > 1 ? base.mul(base) : base;
    n >>= 1;
  }
  return acc;
}

Series Series::scale(const Rational& c) const {
  if (c == 0) throw CheckError("series scale by zero loses exactness; handled by the caller");
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= c;
  return Series(lo_, ord_, std::move(v));
}

Series Series::add_const(const Rational& c) const {
  if (ord_ < 0) return *this;  // the constant term is beyond the tracked window
  std::vector<Rational> v = c_;
  v[static_cast<std::size_t>(0 - lo_)] += c;
  return Series(lo_, ord_, std::move(v));
}

Series Series::shift(int k) const {
  std::vector<Rational> v = c_;
  return Series(lo_ + k, ord_ + k, std::move(v));
}

Series Series::truncated(int new_order) const {
  if (new_order > ord_) throw CheckError("cannot extend a series order by truncation");
  if (new_order < lo_) throw CheckError("truncation order below the series window");
  std::vector<Rational> v(c_.begin(), c_.begin() + (new_order - lo_ + 1));
  return Series(lo_, new_order, std::move(v));
}

bool Series::eq_window(const Series& b) const {
  return lo_ == b.lo_ && ord_ == b.ord_ && c_ == b.c_;
}

bool Series::agrees_to(const Series& b, int k) const {
  if (ord_ < k || b.ord_ < k)
    throw CheckError("series comparison beyond a tracked order");
  for (int e = std::min(lo_, b.lo_); e <= k; ++e)
    if (coeff(e) != b.coeff(e)) return false;
  return true;
}

bool Series::is_zero_to(int k) const {
  if (ord_ < k) throw CheckError("series comparison beyond a tracked order");
  for (int e = lo_; e <= k; ++e)
    if (coeff(e) != 0) return false;
  return true;
}

std::string Series::str(const std::string& var) const {
  std::string out;
  for (int e = lo_; e <= ord_; ++e) {
    const Rational& c = coeff(e);
    if (c == 0) continue;
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mag = rat_str(a);
    if (e == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  if (out.empty()) out = "0";
  out += " + O(" + var + "^" + std::to_string(ord_ + 1) + ")";
  return out;
}

Series series_arith(const Series& a, const Series& b, const std::string& op) {
  if (op == "add" || op == "mul") {
    if (a.order() != b.order())
      throw InputError("series operands must share one order (got " +
                       std::to_string(a.order()) + " and " + std::to_string(b.order()) + ")");
    return op == "add" ? a.add(b) : a.mul(b);
  }
  if (op == "invert-a") {
    auto v = a.valuation();
    if (!v || *v != 0)
      throw InputError("invert-a requires a nonzero constant term");
    return a.invert();
  }
  throw SchemaError("unknown series op '" + op + "' (expected add, mul, or invert-a)");
}

}  // namespace toep
