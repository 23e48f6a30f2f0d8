#include "atlas/shear.hpp"

#include <array>
#include <cmath>

#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr double kDilatationLimit = 1.0 - 1e-9;

void require_normalized(const AnalyticExpr& f, const AnalyticExpr& omega, const char* name) {
  const TruncSeries s = expr_series(f, 2);
  if (!s[0].is_zero() || s[1] != GaussRational(1)) {
    throw Error(Errc::NotNormalized, std::string(name) + " must satisfy f(0) = 0 and f'(0) = 1");
  }
  if (!expr_series(omega, 0)[0].is_zero()) throw Error(Errc::NotNormalized, "dilatation must vanish at 0");
  if (omega.has_logs()) throw Error(Errc::Unsupported, "dilatation must be a rational function");
  for (const cplx& z : Grid::uniform().points()) {
    if (std::abs(expr_eval(omega, z)) >= kDilatationLimit) {
      throw Error(Errc::DilatationTooLarge, "|omega| reaches 1 on the disk");
    }
  }
}

// sign = -1 builds the real-direction shear, +1 the imaginary one.
HarmonicMap shear(const AnalyticExpr& f, const AnalyticExpr& omega, int order, int sign, const char* name) {
  if (order < 1) throw Error(Errc::Config, "shear order must be at least 1");
  require_normalized(f, omega, name);
  const AnalyticExpr df = expr_derivative(f);
  const AnalyticExpr one = AnalyticExpr::polynomial(Poly{GaussRational(1)});
  const AnalyticExpr denom = sign < 0 ? one - omega : one + omega;

  HarmonicMap F;
  const TruncSeries dh = series_mul(expr_series(df, order - 1), series_reciprocal(expr_series(denom, order - 1)));
  F.h = series_antiderivative(dh);
  const TruncSeries fs = expr_series(f, order);
  F.g = sign < 0 ? F.h - fs : fs - F.h;
  F.omega = omega;
  F.dh = expr_divide(df, denom);
  F.dg = expr_multiply(F.dh, omega);
  return F;
}

// 16-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                          0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                          0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kWeights = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                            0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                            0.0622535239386479, 0.0271524594117541};

// Integral of e along the segment [0, z]. Panels are graded geometrically
// towards z, since singularities of e sit on the unit circle beyond z.
cplx integrate_ray(const AnalyticExpr& e, cplx z) {
  const double gap = std::max(1.0 - std::abs(z), 1e-12);
  cplx acc{0.0, 0.0};
  double a = 0.0;
  while (a < 1.0) {
    const double remaining = 1.0 - a;
    double b = remaining * std::abs(z) <= 4.0 * gap ? 1.0 : a + 0.5 * remaining;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx panel{0.0, 0.0};
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      panel += kWeights[k] * (expr_eval(e, (mid + half * kNodes[k]) * z) + expr_eval(e, (mid - half * kNodes[k]) * z));
    }
    acc += half * panel;
    a = b;
  }
  return acc * z;
}

}  // namespace

HarmonicMap make_conformal(const AnalyticExpr& f, int order) {
  HarmonicMap F;
  F.h = expr_series(f, order);
  F.g = TruncSeries(order);
  F.h_expr = f;
  F.g_expr = AnalyticExpr{};
  F.dh = expr_derivative(f);
  return F;
}

HarmonicMap make_harmonic(const AnalyticExpr& h, const AnalyticExpr& g, const AnalyticExpr& omega, int order) {
  HarmonicMap F;
  F.h = expr_series(h, order);
  F.g = expr_series(g, order);
  F.h_expr = h;
  F.g_expr = g;
  F.omega = omega;
  F.dh = expr_derivative(h);
  F.dg = expr_derivative(g);
  return F;
}

HarmonicMap shear_real(const AnalyticExpr& phi, const AnalyticExpr& omega, int order) {
  return shear(phi, omega, order, -1, "phi");
}

HarmonicMap shear_imag(const AnalyticExpr& psi, const AnalyticExpr& omega, int order) {
  return shear(psi, omega, order, +1, "psi");
}

HarmonicMap with_closed_form(HarmonicMap F, const AnalyticExpr& h, const AnalyticExpr& g) {
  if (expr_series(h, F.h.order()) != F.h) throw Error(Errc::SeriesMismatch, "closed form of h disagrees with its series");
  if (expr_series(g, F.g.order()) != F.g) throw Error(Errc::SeriesMismatch, "closed form of g disagrees with its series");
  F.h_expr = h;
  F.g_expr = g;
  return F;
}

cplx eval_h(const HarmonicMap& F, cplx z) {
  if (F.h_expr) return expr_eval(*F.h_expr, z);
  if (std::abs(z) >= 1.0) throw Error(Errc::OutsideDisk, "evaluation point outside the open unit disk");
  return integrate_ray(F.dh, z);
}

cplx eval_g(const HarmonicMap& F, cplx z) {
  if (F.g_expr) return expr_eval(*F.g_expr, z);
  if (std::abs(z) >= 1.0) throw Error(Errc::OutsideDisk, "evaluation point outside the open unit disk");
  return integrate_ray(F.dg, z);
}

cplx harmonic_eval(const HarmonicMap& F, cplx z) { return eval_h(F, z) + std::conj(eval_g(F, z)); }

bool dilatation_check(const HarmonicMap& F) {
  const int n = F.order() - 1;
  if (n < 0) return true;
  const TruncSeries dg = series_derivative(F.g).truncated(n);
  const TruncSeries dh = series_derivative(F.h).truncated(n);
  return (dg - series_mul(expr_series(F.omega, n), dh)).is_zero();
}

HarmonicMap harmonic_neg_reflect(const HarmonicMap& F) {
  HarmonicMap out;
  out.h = -series_compose_linear(F.h, GaussRational(-1));
  out.g = -series_compose_linear(F.g, GaussRational(-1));
  if (F.h_expr) out.h_expr = expr_transform(*F.h_expr, Transform::NegReflect);
  if (F.g_expr) out.g_expr = expr_transform(*F.g_expr, Transform::NegReflect);
  // omega(z) -> omega(-z); the derivatives of -h(-z) are h'(-z).
  const auto reflect_arg = [](const AnalyticExpr& e) { return -expr_transform(e, Transform::NegReflect); };
  out.omega = reflect_arg(F.omega);
  out.dh = reflect_arg(F.dh);
  out.dg = reflect_arg(F.dg);
  return out;
}

}  // namespace atlas
