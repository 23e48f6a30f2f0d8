#pragma once

#include <optional>

#include "atlas/analytic.hpp"
#include "atlas/grid.hpp"
#include "atlas/series.hpp"

namespace atlas {

/// f = h + conj(g) with dilatation omega = g'/h'.
///
/// The series are always present. Closed forms for h and g are optional; the
/// derivative expressions dh and dg always exist, and when a closed form is
/// missing harmonic_eval integrates the derivative along the ray [0, z].
struct HarmonicMap {
  TruncSeries h;
  TruncSeries g;
  std::optional<AnalyticExpr> h_expr;
  std::optional<AnalyticExpr> g_expr;
  AnalyticExpr omega;
  AnalyticExpr dh;
  AnalyticExpr dg;

  int order() const { return std::min(h.order(), g.order()); }
  bool is_conformal() const { return g.is_zero(); }
};

/// Analytic f viewed as the harmonic map f + conj(0).
HarmonicMap make_conformal(const AnalyticExpr& f, int order = kDefaultOrder);

/// Harmonic map from closed forms; omega is g'/h' as authored by the caller.
HarmonicMap make_harmonic(const AnalyticExpr& h, const AnalyticExpr& g, const AnalyticExpr& omega,
                          int order = kDefaultOrder);

/// h = integral of phi'/(1 - omega), g = h - phi.
/// Throws NotNormalized unless phi(0) = 0, phi'(0) = 1, omega(0) = 0, and
/// DilatationTooLarge if |omega| reaches 1 - 1e-9 on the standard grid.
HarmonicMap shear_real(const AnalyticExpr& phi, const AnalyticExpr& omega, int order = kDefaultOrder);

/// h = integral of psi'/(1 + omega), g = psi - h.
HarmonicMap shear_imag(const AnalyticExpr& psi, const AnalyticExpr& omega, int order = kDefaultOrder);

/// Attaches closed forms after checking them against the series exactly;
/// throws SeriesMismatch otherwise.
HarmonicMap with_closed_form(HarmonicMap F, const AnalyticExpr& h, const AnalyticExpr& g);

std::complex<double> eval_h(const HarmonicMap& F, std::complex<double> z);
std::complex<double> eval_g(const HarmonicMap& F, std::complex<double> z);
/// h(z) + conj(g(z)).
std::complex<double> harmonic_eval(const HarmonicMap& F, std::complex<double> z);

/// Exact test of g' = omega h' on the truncated series.
bool dilatation_check(const HarmonicMap& F);

/// -F(-z) as a harmonic map (h and g both reflected).
HarmonicMap harmonic_neg_reflect(const HarmonicMap& F);

}  // namespace atlas
