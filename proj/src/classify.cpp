#include "atlas/classify.hpp"

#include <algorithm>
#include <limits>

#include "atlas/error.hpp"

namespace atlas {

std::string_view coeff_class_name(CoeffClass c) {
  switch (c) {
    case CoeffClass::Integer: return "integer";
    case CoeffClass::HalfInteger: return "half_integer";
    case CoeffClass::Neither: return "neither";
  }
  return "neither";
}

CoeffClassReport coeff_class(const TruncSeries& s, int upto) {
  CoeffClassReport report;
  const int last = std::min(upto, s.order());
  for (int n = 0; n <= last; ++n) {
    const GaussRational& c = s[n];
    if (!c.is_real() || !c.re().is_half_integer()) {
      report.cls = CoeffClass::Neither;
      report.first_violation = CoeffViolation{n, c};
      return report;
    }
    if (!c.re().is_integer()) report.cls = CoeffClass::HalfInteger;
  }
  return report;
}

std::pair<CoeffClassReport, CoeffClassReport> classify_harmonic(const HarmonicMap& F, int upto) {
  return {coeff_class(F.h, upto), coeff_class(F.g, upto)};
}

bool is_half_integer_map(const HarmonicMap& F, int upto) {
  const auto [h, g] = classify_harmonic(F, upto);
  return h.half_integer() && g.half_integer();
}

Rational b2_bound_check(const HarmonicMap& F) {
  if (F.g.order() < 2) throw Error(Errc::Config, "series order too low to read b_2");
  return F.g[2].norm();
}

double halfplane_subordination_margin(const AnalyticExpr& g, const AnalyticExpr& phi, const Grid& grid) {
  const AnalyticExpr dg = expr_derivative(g);
  const AnalyticExpr dphi = expr_derivative(phi);
  double margin = std::numeric_limits<double>::infinity();
  for (const cplx& z : grid.points()) {
    const cplx d = expr_eval(dphi, z);
    if (std::abs(d) < 1e-300) throw Error(Errc::ZeroValue, "phi' vanishes on the grid");
    margin = std::min(margin, (expr_eval(dg, z) / d).real() + 0.5);
  }
  return margin;
}

Rational rogosinski_coeff_bound(const TruncSeries& s) {
  Rational best(0);
  for (int n = 1; n <= s.order(); ++n) best = std::max(best, s[n].norm());
  return best;
}

}  // namespace atlas
