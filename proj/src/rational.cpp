#include "toep/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <cstddef>

#include "toep/error.hpp"

namespace toep {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto scan_int = [&](const char* what) -> std::string {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    std::size_t digits_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == digits_start)
      throw SchemaError("expected an integer " + std::string(what) + " in rational '" + text + "'");
    return (neg ? "-" : "") + text.substr(digits_start, i - digits_start);
  };
  std::string num = scan_int("numerator");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int("denominator");
  }
  if (i != text.size()) throw SchemaError("trailing characters in rational '" + text + "'");
  Int d(den);
  if (d == 0) throw SchemaError("zero denominator in rational '" + text + "'");
  if (d < 0) throw SchemaError("negative denominator in rational '" + text + "'");
  return Rational(Int(num), d);
}

std::string rat_str(const Rational& r) {
  return r.str();
}

std::string rat_decimal(const Rational& r, int digits) {
  Int num = numerator(r);
  Int den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int whole = num / den;
  Int scaled = (num % den) * scale;
  Int frac = scaled / den;
  Int rem = scaled % den;
  // round half to even on the last kept digit
  if (2 * rem > den || (2 * rem == den && frac % 2 == 1)) {
    frac += 1;
    if (frac == scale) {
      frac = 0;
      whole += 1;
    }
  }
  std::string f = frac.str();
  while (static_cast<int>(f.size()) < digits) f.insert(f.begin(), '0');
  std::string out = whole.str();
  if (digits > 0) out += "." + f;
  if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw InputError("zero raised to a negative power");
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  Rational acc = 1;
  Rational b = base;
  while (n > 0) {
    if (n & 1ul) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) acc = Rational(1) / acc;
  return acc;
}

Int factorial(long n) {
  if (n < 0) throw InputError("factorial of a negative integer");
  Int acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

long to_long(const Int& v) {
  if (v > LONG_MAX || v < LONG_MIN) throw InputError("integer out of range");
  return static_cast<long>(v);
}

}  // namespace toep
