#include "doctest.h"

#include <cstdlib>
#include <vector>

#include "toep/error.hpp"
#include "toep/oracle.hpp"
#include "toep/toeplitz.hpp"

using namespace toep;

namespace {
Rational R(const std::string& s) { return parse_rational(s); }
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("binomial window minor example") {
  CHECK_EQ(morris_value(1, 1, {}, {1}, 2), R("2"));
  CHECK_EQ(morris_value(1, 1, {}, {}, 2), R("3"));
  CHECK_EQ(morris_value(1, 1, {}, {}, 0), R("1"));
}

TEST_CASE("concordance with minor determinants") {
  std::vector<Symbol> symbols = {Symbol::pure_fh(1, 1), Symbol::pure_fh(1, 2),
                                 Symbol::pure_fh(2, 1), Symbol::theta_gd(1, 1, Scalar(R("1/2"))),
                                 Symbol::tridiagonal(R("1/2"), R("1/3"))};
  std::vector<Partition> shapes = {{}, {1}, {2}, {1, 1}};
  for (const auto& f : symbols)
    for (long N = 1; N <= 3; ++N)
      for (const auto& lam : shapes) {
        if (length(lam) > N) continue;
        for (const auto& mu : shapes) {
          if (length(mu) > N) continue;
          CHECK_EQ(heine_minor(f, lam, mu, N), toeplitz_minor_det(f, N, lam, mu).rational());
        }
      }
}

TEST_CASE("reflecting the window swaps the shapes") {
  auto [lo, coeffs] = Symbol::pure_fh(2, 1).as_laurent();
  std::vector<Rational> w;
  for (const auto& c : coeffs) w.push_back(c.rational());
  std::vector<Rational> rev(w.rbegin(), w.rend());
  long rlo = -(lo + static_cast<long>(w.size()) - 1);
  for (const Partition& lam : {Partition{}, Partition{2}, Partition{1, 1}})
    for (const Partition& mu : {Partition{}, Partition{1}, Partition{2, 1}})
      CHECK_EQ(heine_minor(lo, w, lam, mu, 3), heine_minor(rlo, rev, mu, lam, 3));
}

TEST_CASE("size and width limits") {
  Symbol f = Symbol::pure_fh(1, 1);
  CHECK_THROWS_AS(heine_minor(f, {}, {}, 5), InputError);
  CHECK_THROWS_AS(heine_minor(Symbol::pure_fh(8, 8), {}, {}, 2), InputError);

  setenv("TM_MAX_ORACLE_N", "2", 1);
  CHECK_THROWS_AS(heine_minor(f, {}, {}, 3), InputError);
  CHECK_EQ(heine_minor(f, {}, {}, 2), R("3"));
  setenv("TM_MAX_ORACLE_N", "junk", 1);
  CHECK_THROWS_AS(heine_minor(f, {}, {}, 1), SchemaError);
  unsetenv("TM_MAX_ORACLE_N");
  CHECK_EQ(oracle_cap(), 4);
}

TEST_CASE("pairing against explicit coefficients") {
  Symbol f = Symbol::pure_fh(1, 1);
  CHECK_EQ(pairing_value(f, {Scalar(1)}, {Scalar(1)}).rational(), R("2"));
  CHECK_EQ(pairing_value(f, {Scalar(0), Scalar(1)}, {Scalar(1)}).rational(), R("1"));
  CHECK_EQ(pairing_value(f, {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1)}).rational(), R("2"));

  Symbol thd = Symbol::theta_d(1, Scalar(R("1/2")));
  CHECK_EQ(pairing_value(thd, {Scalar(1)}, {Scalar(1)}).rational(), R("2"));
  CHECK_EQ(pairing_value(thd, {Scalar(0), Scalar(1)}, {Scalar(1)}).rational(), R("4/3"));

  // series symbols pair to series values
  Symbol thq = Symbol::theta_d(1, Scalar(Series::monomial(R("1"), 1, 5)));
  Scalar v = pairing_value(thq, {Scalar(1)}, {Scalar(1)});
  REQUIRE(v.is_series());
  CHECK_EQ(v.series().coeff(0), R("1"));
  CHECK_EQ(v.series().coeff(3), R("1"));
}

TEST_CASE("gram determinant equals the toeplitz determinant") {
  Symbol f = Symbol::pure_fh(1, 2);
  for (long N = 1; N <= 3; ++N) {
    ScalarMatrix gram(static_cast<std::size_t>(N));
    for (long r = 0; r < N; ++r)
      for (long s = 0; s < N; ++s) {
        std::vector<Scalar> p(static_cast<std::size_t>(r) + 1, Scalar(0));
        std::vector<Scalar> q(static_cast<std::size_t>(s) + 1, Scalar(0));
        p.back() = Scalar(1);
        q.back() = Scalar(1);
        gram[static_cast<std::size_t>(r)].push_back(pairing_value(f, p, q));
      }
    CHECK_EQ(det_scalar(gram).rational(), toeplitz_determinant(f, N).rational());
  }
}

}  // TEST_SUITE
