#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "atlas/catalog.hpp"
#include "atlas/error.hpp"
#include "atlas/geomtest.hpp"

using namespace atlas;

namespace {

constexpr double kPi = std::numbers::pi;
AnalyticExpr E(const char* s) { return parse_expr(s); }
HarmonicMap entry(const char* id) { return entry_map(catalog_lookup(id)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Config;
}

// 100 random points in |z| < 0.999.
std::vector<cplx> random_points() {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> rad(0.0, 0.999), ang(0.0, 2 * kPi);
  std::vector<cplx> out;
  for (int k = 0; k < 100; ++k) out.push_back(std::polar(rad(rng), ang(rng)));
  return out;
}

}  // namespace

TEST_CASE("jacobian_min") {
  const Grid grid = Grid::uniform();
  CHECK(jacobian_min(make_conformal(E("z")), grid).margin == doctest::Approx(1.0));

  const HarmonicMap F3 = entry("f3_cv1");
  const Certificate c = jacobian_min(F3, grid);
  double oracle = std::numeric_limits<double>::infinity();
  for (cplx z : grid.points()) {
    const cplx dh = 1.0 / std::pow(1.0 - z, 3);  // h' for f3
    oracle = std::min(oracle, std::norm(dh) * (1 - std::norm(z)));
  }
  CHECK(c.margin > 0.0);
  CHECK(c.margin == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(c.kind == CertKind::Jacobian);

  CHECK(jacobian_min(make_harmonic(E("z"), E("2z"), E("2")), grid).margin == doctest::Approx(-3.0));
}

TEST_CASE("Royster-Ziegler certificates and reduced forms") {
  const Grid grid = Grid::uniform();
  const auto pts = random_points();

  struct Case {
    const char* phi;
    RZParams p;
    Axis axis;
    std::function<double(cplx)> reduced;
  };
  const std::vector<Case> cases = {
      {"z/(1+z^2)", {0, kPi / 2}, Axis::Real, [](cplx z) { return ((1.0 - z * z) / (1.0 + z * z)).real(); }},
      {"z-z^2/2", {0, 2 * kPi / 3}, Axis::Real, [](cplx z) { return (1.0 - z * z * z).real(); }},
      {"z(2-z)/(2(1-z))", {kPi / 2, kPi / 2}, Axis::Imag,
       [](cplx z) { return 0.5 * (1.0 - z * z + (1.0 + z) / (1.0 - z)).real(); }},
  };
  for (const Case& c : cases) {
    CAPTURE(c.phi);
    const AnalyticExpr phi = E(c.phi);
    const AnalyticExpr dphi = expr_derivative(phi);
    const Certificate cert = rz_certificate(phi, c.p, c.axis, grid);
    CHECK(cert.holds());
    CHECK(cert.margin >= -1e-9);
    for (cplx z : pts) CHECK(std::abs(rz_value(expr_eval(dphi, z), z, c.p, c.axis).real() - c.reduced(z)) < 1e-12);
  }
  const Certificate cube = rz_certificate(E("z-z^2/2"), {0, 2 * kPi / 3}, Axis::Real, grid);
  CHECK(cube.margin == doctest::Approx(1 - std::pow(0.999, 3)).epsilon(1e-9));
}

TEST_CASE("rz_search") {
  const Grid grid = Grid::uniform();
  const auto c = rz_search(E("z/(1-z+z^2)"), Axis::Real, grid);
  REQUIRE(c);
  CHECK(c->params->mu == doctest::Approx(0.0));
  CHECK(rz_certificate(E("z/(1-z+z^2)"), *c->params, Axis::Real, grid).holds());
  CHECK_FALSE(rz_search(E("z/(1-z^2)"), Axis::Real, grid));
  CHECK(rz_search(E("z"), Axis::Real, grid));
  CHECK(rz_search(E("z"), Axis::Imag, grid));
}

TEST_CASE("direction_convexity_probe") {
  CHECK_FALSE(direction_convexity_probe(entry("phi1"), Axis::Imag).convex);
  CHECK_FALSE(direction_convexity_probe(entry("phi3"), Axis::Real).convex);
  CHECK_FALSE(direction_convexity_probe(entry("z_1mz2"), Axis::Real).convex);
  CHECK(direction_convexity_probe(entry("koebe"), Axis::Real).convex);
  CHECK(direction_convexity_probe(make_conformal(E("z")), Axis::Imag).convex);
  CHECK(code_of([] { direction_convexity_probe(make_conformal(E("z")), Axis::Real, 0.5); }) == Errc::Config);
}

TEST_CASE("starlike_derivative") {
  const HarmonicMap id = make_conformal(E("z"));
  for (double t : {-2.0, 0.0, 1.0, 3.0}) CHECK(starlike_derivative(id, t, 0.9) == doctest::Approx(1.0));

  const double r = 0.999;
  const double oracle = ((1.0 - r) / (1.0 + r));
  CHECK(starlike_derivative(entry("koebe"), kPi, r) == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(starlike_derivative(entry("koebe"), kPi, r) > 0.0);

  const HarmonicMap f3 = entry("f3_cv1");
  for (double t = -kPi / 2 + 0.1; t < kPi / 2 - 0.1; t += 0.2) {
    const double v = starlike_derivative(f3, t, 0.9999);
    CHECK(v < 0.0);
    CHECK(std::abs(v - 2 * std::cos(t) / (-3 + std::cos(2 * t))) < 1e-3);
  }
}

TEST_CASE("u_class_margin") {
  const Grid grid = Grid::uniform();
  CHECK(u_class_margin(E("z"), grid).margin == doctest::Approx(1.0));
  for (const CatalogEntry* e : catalog_family(Family::S_Z)) {
    CAPTURE(e->id);
    CHECK(u_class_margin(*e->h, grid).margin >= -1e-9);
  }
  CHECK(u_class_margin(*catalog_lookup("f_plus").h, grid).margin < 0.0);
  CHECK(u_class_margin(*catalog_lookup("f_minus").h, grid).margin < 0.0);
}

TEST_CASE("m_theta_check") {
  const Grid grid = Grid::uniform();
  CHECK(m_theta_check(entry("f9_cv1"), kPi, grid).margin > 0.0);
  CHECK(m_theta_check(entry("f3_cv1"), 0.0, grid).margin > 0.0);
  CHECK(code_of([&] { m_theta_check(make_conformal(E("z")), 0.0, grid); }) == Errc::SeriesMismatch);
}

TEST_CASE("boundary traces") {
  const int n = 4000;
  const auto p3 = boundary_trace(entry("phi3"), 0.9999, n);
  REQUIRE(p3.size() == n);
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    if (std::abs(std::sin(t)) < 0.1) continue;
    const cplx limit(std::cos(t) / 2, std::sin(t) / 2 + 1 / (4 * std::sin(t)));
    CHECK(std::abs(p3[k] - limit) < 1e-2);
  }

  const auto p4 = boundary_trace(entry("phi4"), 0.9999, n);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    if (std::abs(std::sin(t)) < 0.1) continue;
    CHECK(std::abs(p4[k].real() - 0.25) < 1e-2);
    min_gap = std::min(min_gap, std::abs(p4[k].imag()));
  }
  CHECK(min_gap >= std::sqrt(3.0) / 4 - 1e-2);

  // Away from the point at infinity the trace hugs the parabola.
  const auto p5 = boundary_trace(entry("phi5"), 0.9999, n);
  for (int k = 0; k < n; ++k) {
    const double t = std::remainder(2 * kPi * k / n, 2 * kPi);
    if (std::abs(t) < 0.7) continue;
    const cplx w = p5[k];
    CHECK(std::abs(8 * w.real() + 16 * w.imag() * w.imag() + 3) <= 1e-2);
  }
}
