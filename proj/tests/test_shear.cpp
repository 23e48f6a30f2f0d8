#include <doctest.h>

#include <cmath>
#include <numbers>

#include "atlas/error.hpp"
#include "atlas/shear.hpp"
#include "oracle.hpp"

using namespace atlas;

namespace {

GaussRational q(long p, long d = 1) { return Rational(p, d); }
AnalyticExpr E(const char* s) { return parse_expr(s); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Config;
}

}  // namespace

TEST_CASE("shear_real of z/(1-z) with omega = z gives half-integer f3") {
  const HarmonicMap F = shear_real(E("z/(1-z)"), E("z"));
  REQUIRE(F.order() == 64);
  for (int n = 1; n <= 64; ++n) {
    CHECK(F.h[n] == q(n + 1, 2));
    CHECK(F.g[n] == q(n - 1, 2));
  }
  CHECK(F.h[0] == q(0));
  CHECK(dilatation_check(F));
  CHECK(F.h - F.g == expr_series(E("z/(1-z)"), 64));
}

TEST_CASE("shear_real spot coefficients") {
  const HarmonicMap F = shear_real(E("z - z^2/2"), E("z"), 12);
  CHECK(F.h == TruncSeries({0, 1}, 12));
  CHECK(F.g == TruncSeries({0, 0, q(1, 2)}, 12));

  CHECK(shear_real(E("z/(1-z+z^2)"), E("z"), 8).h[4] == q(-1, 4));
  CHECK(shear_real(E("z/(1-z+z^2)"), E("-z"), 8).h[4] == q(-3, 4));
  CHECK(shear_real(E("z(2+z^2)/(2(1+z^2))"), E("z"), 8).h[3] == q(-1, 6));
  CHECK(shear_real(E("z(2+z^2)/(2(1+z^2))"), E("-z"), 8).h[3] == q(-1, 6));
  CHECK(shear_real(E("z(2-z)/(2(1-z)^2)"), E("z"), 8).h[3] == q(10, 3));
}

TEST_CASE("shear_imag examples") {
  const HarmonicMap F = shear_imag(E("z/(1-z)"), E("-z"));
  for (int n = 1; n <= 64; ++n) {
    CHECK(F.h[n] == q(n + 1, 2));
    CHECK(F.g[n] == q(1 - n, 2));
  }
  CHECK(F.h + F.g == expr_series(E("z/(1-z)"), 64));

  CHECK(shear_imag(E("z/(1-z^2)"), E("z"), 6).h[3] == q(4, 3));
  CHECK(shear_imag(E("z/(1-z^2)"), E("-z"), 6).h[3] == q(4, 3));

  // h = log(1+z): coefficients (-1)^{n+1}/n
  const HarmonicMap L = shear_imag(E("z"), E("z"), 20);
  for (int n = 1; n <= 20; ++n) CHECK(L.h[n] == q(n % 2 ? 1 : -1, n));
  // f = 2i arg(1+z) + conj(z)
  const cplx z{0.3, -0.5};
  const cplx f = harmonic_eval(L, z);
  CHECK(std::abs(f - (cplx(0, 2 * std::arg(1.0 + z)) + std::conj(z))) < 1e-9);
}

TEST_CASE("shear preconditions") {
  CHECK(code_of([] { shear_real(E("2z"), E("z")); }) == Errc::NotNormalized);
  CHECK(code_of([] { shear_real(E("z+z^2"), E("1/2+z")); }) == Errc::NotNormalized);
  CHECK(code_of([] { shear_imag(E("z"), E("2z")); }) == Errc::DilatationTooLarge);
}

TEST_CASE("dilatation_check") {
  CHECK(dilatation_check(make_harmonic(E("z"), E("z^2/2"), E("z"), 10)));
  CHECK_FALSE(dilatation_check(make_harmonic(E("z"), E("z^3/3"), E("z"), 10)));
  CHECK(dilatation_check(shear_imag(E("z/(1+z)^2"), E("-z"), 30)));
}

TEST_CASE("harmonic_eval") {
  const cplx z0{0.3, 0.4};
  CHECK(std::abs(harmonic_eval(make_conformal(E("z")), z0) - z0) < 1e-15);
  const HarmonicMap P = make_harmonic(E("z"), E("z^2/2"), E("z"));
  CHECK(std::abs(harmonic_eval(P, cplx(0, 1 - 1e-12)) - cplx(-0.5, 1.0)) < 1e-9);

  const HarmonicMap F3 = shear_real(E("z/(1-z)"), E("z"));
  for (double t = -3.0; t < 3.1; t += 0.5) {
    const cplx z = std::polar(0.5, t);
    const cplx f = harmonic_eval(F3, z);
    CHECK(std::abs(f.real() - (z / ((1.0 - z) * (1.0 - z))).real()) < 1e-10);
    CHECK(std::abs(f.imag() - (z / (1.0 - z)).imag()) < 1e-10);
  }
}

TEST_CASE("quadrature evaluation agrees with the series inside the disk") {
  const HarmonicMap F = shear_real(E("z/(1-z+z^2)"), E("z"));
  REQUIRE_FALSE(F.h_expr.has_value());
  for (double t = 0.1; t < 6.2; t += 0.7) {
    const cplx z = std::polar(0.6, t);
    const cplx series = F.h.eval(z) + std::conj(F.g.eval(z));
    CHECK(std::abs(harmonic_eval(F, z) - series) < 1e-10);
    CHECK(std::abs(eval_h(F, z) - eval_g(F, z) - expr_eval(E("z/(1-z+z^2)"), z)) < 1e-10);
  }
}

TEST_CASE("reflection symmetry of the shear") {
  const HarmonicMap F = shear_real(E("z/(1-z)"), E("z"), 30);
  const HarmonicMap G = shear_real(E("z/(1+z)"), E("-z"), 30);
  const HarmonicMap R = harmonic_neg_reflect(F);
  CHECK(R.h == G.h);
  CHECK(R.g == G.g);
  CHECK(dilatation_check(R));
}

TEST_CASE("closed forms must agree with the integrated series") {
  const HarmonicMap F = shear_real(E("z - z^2/2"), E("-z"), 40);
  const HarmonicMap C = with_closed_form(F, E("2log(1+z) - z"), E("2log(1+z) - 2z + z^2/2"));
  CHECK(C.h_expr.has_value());
  CHECK(code_of([&] { with_closed_form(F, E("log(1+z)"), E("z^2")); }) == Errc::SeriesMismatch);
}
