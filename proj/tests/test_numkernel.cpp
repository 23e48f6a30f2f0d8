#include <doctest.h>

#include <random>

#include "atlas/error.hpp"
#include "atlas/poly.hpp"
#include "atlas/rational.hpp"
#include "atlas/series.hpp"
#include "oracle.hpp"

using namespace atlas;

namespace {

GaussRational q(long p, long d = 1) { return Rational(p, d); }

TruncSeries geometric(int order) { return TruncSeries(std::vector<GaussRational>(order + 1, q(1)), order); }

TruncSeries random_series(std::mt19937& rng, int order, bool nonzero_constant) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<GaussRational> c;
  for (int k = 0; k <= order; ++k) c.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  if (nonzero_constant && c[0].is_zero()) c[0] = q(1);
  return {c, order};
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 7).denominator() == "1");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(3, 2).is_half_integer());
  CHECK_FALSE(Rational(1, 3).is_half_integer());
}

TEST_CASE("gaussian rationals") {
  const GaussRational z = GaussRational::parse("1/2-3/4 i");
  CHECK(z.re() == Rational(1, 2));
  CHECK(z.im() == Rational(-3, 4));
  CHECK(z.conj().conj() == z);
  CHECK(GaussRational::parse("2 i") == GaussRational(0, 2));
  CHECK(GaussRational::parse("i") == GaussRational::i());
  CHECK(GaussRational::i() * GaussRational::i() == q(-1));
  CHECK(z * (q(1) / z) == q(1));
  CHECK(z.norm() == Rational(13, 16));
  CHECK(GaussRational::parse(z.str()) == z);
  CHECK(pow(GaussRational::i(), 7) == -GaussRational::i());
}

TEST_CASE("series_add") {
  const int n = 8;
  CHECK(series_add(TruncSeries({1, 1}, n), TruncSeries({1, -1}, n)) == TruncSeries::constant(2, n));
  CHECK(geometric(n) + TruncSeries(n) == geometric(n));
  // z/(1-z)^2 + z/(1-z) has coefficients n+1 (n >= 1)
  const auto k = series_mul(TruncSeries::identity(n), oracle::to_series(oracle::inverse_power(2, 1, n), n));
  const auto l = series_mul(TruncSeries::identity(n), geometric(n));
  const auto sum = k + l;
  for (int j = 1; j <= n; ++j) CHECK(sum[j] == q(j + 1));
  CHECK(series_add(TruncSeries(3), TruncSeries(5)).order() == 3);
}

TEST_CASE("series_mul") {
  const int n = 12;
  CHECK(series_mul(TruncSeries({1, -1}, n), geometric(n)) == TruncSeries::constant(1, n));
  CHECK(series_mul(TruncSeries::identity(n), TruncSeries::identity(n)) == TruncSeries({0, 0, 1}, n));
  const auto phi = oracle::to_series(oracle::long_division({0, 1}, {1, -1, 1}, n), n);
  CHECK(series_mul(TruncSeries({1, -1, 1}, n), phi) == TruncSeries::identity(n));
}

TEST_CASE("series_reciprocal") {
  const int n = 20;
  CHECK(series_reciprocal(TruncSeries({1, -1}, n)) == geometric(n));
  const auto r = series_reciprocal(TruncSeries({1, 2, 1}, n));
  for (int j = 0; j <= n; ++j) CHECK(r[j] == q((j % 2 == 0 ? 1 : -1) * (j + 1)));
  // phi = z/(1-z+z^2): phi' = (1-z^2)/(1-z+z^2)^2 and 1/phi' = (1-z+z^2)^2/(1-z^2)
  const auto dphi = oracle::long_division({1, 0, -1}, {1, -2, 3, -2, 1}, n);
  CHECK(dphi[1] == 2);
  CHECK(dphi[2] == 0);
  CHECK(dphi[3] == -4);
  const auto recip = series_reciprocal(oracle::to_series(dphi, n));
  CHECK(oracle::equals(recip, oracle::long_division({1, -2, 3, -2, 1}, {1, 0, -1}, n)));
  CHECK(recip[0] == q(1));
  CHECK(recip[1] == q(-2));
  CHECK(recip[2] == q(4));
  CHECK(recip[3] == q(-4));
  try {
    series_reciprocal(TruncSeries::identity(n));
    FAIL("expected ZeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroConstantTerm);
  }
}

TEST_CASE("series_derivative and antiderivative") {
  const int n = 16;
  CHECK(series_derivative(TruncSeries({0, 1, q(-1, 2)}, n)) == TruncSeries({1, -1}, n - 1));
  CHECK(series_derivative(TruncSeries::constant(5, n)).is_zero());
  CHECK(series_antiderivative(TruncSeries::constant(1, n)) == TruncSeries::identity(n + 1));

  // integral of 1/(1-t) is -log(1-z) = sum z^k/k
  const auto log_series = series_antiderivative(geometric(n));
  for (int k = 1; k <= n + 1; ++k) CHECK(log_series[k] == q(1, k));

  // integral of 1/(1-t)^3 is ((1-z)^-2 - 1)/2, and its derivative is 1/(1-z)^3
  const auto cube = oracle::to_series(oracle::inverse_power(3, 1, n), n);
  const auto h = series_antiderivative(cube);
  auto expected = oracle::inverse_power(2, 1, n + 1);
  expected[0] -= 1;
  for (auto& c : expected) c /= 2;
  CHECK(oracle::equals(h, expected));
  CHECK(series_derivative(h) == cube);
}

TEST_CASE("series_compose_linear") {
  const int n = 18;
  const auto phi = oracle::to_series(oracle::long_division({0, 1}, {1, -1, 1}, n), n);
  const auto reflected = -series_compose_linear(phi, q(-1));
  CHECK(oracle::equals(reflected, oracle::long_division({0, 1}, {1, 1, 1}, n)));

  const auto z1pz2 = oracle::to_series(oracle::long_division({0, 1}, {1, 0, 1}, n), n);
  const auto rotated = series_scale(series_compose_linear(z1pz2, GaussRational::i()), -GaussRational::i());
  CHECK(oracle::equals(rotated, oracle::long_division({0, 1}, {1, 0, -1}, n)));
  CHECK(series_compose_linear(phi, q(1)) == phi);
}

TEST_CASE("ring laws and reciprocal identity on random series") {
  std::mt19937 rng(20240531);
  const int n = 10;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, n, false);
    const auto b = random_series(rng, n, false);
    const auto c = random_series(rng, n, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(series_derivative(series_antiderivative(a)) == a);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, n, true);
    CHECK(series_mul(a, series_reciprocal(a)) == TruncSeries::constant(1, n));
  }
}

TEST_CASE("mixed orders truncate to the minimum") {
  const auto a = geometric(4);
  const auto b = geometric(9);
  CHECK((a * b).order() == 4);
  CHECK((a - b).order() == 4);
  CHECK(series_derivative(TruncSeries(0)).order() == 0);
}

TEST_CASE("coefficient strings") {
  const auto s = TruncSeries({0, q(3, 2), GaussRational(Rational(1), Rational(-2))}, 2);
  const auto strs = coefficient_strings(s);
  REQUIRE(strs.size() == 3);
  CHECK(strs[0] == "0");
  CHECK(strs[1] == "3/2");
  CHECK(GaussRational::parse(strs[2]) == s[2]);
}

TEST_CASE("poly gcd, squarefree part and roots") {
  const Poly a{q(1), q(-2), q(1)};  // (1-z)^2
  const Poly b{q(1), q(0), q(-1)};  // (1-z)(1+z)
  const Poly g = gcd(a, b);
  CHECK(g == Poly{q(-1), q(1)});
  CHECK(squarefree_part(a) == Poly{q(-1), q(1)});
  const auto [quot, rem] = divmod(a * b, b);
  CHECK(quot == a);
  CHECK(rem.is_zero());
  const auto roots = poly_roots(Poly{q(1), q(-1), q(1)});
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
  CHECK(Poly{q(1), q(-1), q(1)}.infix_str() == "1-z+z^2");
  CHECK_THROWS_AS(divmod(a, Poly{}), Error);
}
