#include "atlas/geomtest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeadband = 1e-8;

Certificate min_over_grid(CertKind kind, const Grid& grid, auto&& quantity) {
  Certificate c{kind, std::numeric_limits<double>::infinity(), std::nullopt, std::nullopt};
  for (const cplx& z : grid.points()) {
    const double v = quantity(z);
    if (v < c.margin) {
      c.margin = v;
      c.witness = z;
    }
  }
  return c;
}

}  // namespace

std::string_view axis_name(Axis a) { return a == Axis::Real ? "real" : "imag"; }

std::string_view cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::RzReal: return "rz_real";
    case CertKind::RzImag: return "rz_imag";
    case CertKind::Jacobian: return "jacobian";
    case CertKind::Starlike: return "starlike";
    case CertKind::UClass: return "u_class";
    case CertKind::MTheta: return "m_theta";
  }
  return "unknown";
}

Certificate jacobian_min(const HarmonicMap& F, const Grid& grid) {
  return min_over_grid(CertKind::Jacobian, grid, [&](cplx z) {
    return std::norm(expr_eval(F.dh, z)) - std::norm(expr_eval(F.dg, z));
  });
}

namespace {

// Per-parameter constants of the Royster-Ziegler factor.
struct RzFactor {
  cplx lead;
  cplx lin;
  cplx quad;

  RzFactor(RZParams p, Axis axis) {
    const cplx rot = std::polar(1.0, -p.mu);
    lead = axis == Axis::Real ? std::polar(1.0, p.mu) : cplx(0.0, -1.0) * std::polar(1.0, p.mu);
    lin = -2.0 * rot * std::cos(p.nu);
    quad = rot * rot;
  }

  cplx operator()(cplx dphi, cplx z) const { return lead * (1.0 + z * (lin + z * quad)) * dphi; }
};

}  // namespace

cplx rz_value(cplx dphi, cplx z, RZParams p, Axis axis) { return RzFactor(p, axis)(dphi, z); }

Certificate rz_certificate(const AnalyticExpr& phi, RZParams p, Axis axis, const Grid& grid) {
  const AnalyticExpr dphi = expr_derivative(phi);
  Certificate c = min_over_grid(axis == Axis::Real ? CertKind::RzReal : CertKind::RzImag, grid,
                                [&](cplx z) { return rz_value(expr_eval(dphi, z), z, p, axis).real(); });
  c.params = p;
  return c;
}

std::optional<Certificate> rz_search(const AnalyticExpr& phi, Axis axis, const Grid& grid, int mu_steps,
                                     int nu_steps) {
  const AnalyticExpr dphi = expr_derivative(phi);
  const std::vector<cplx> pts = grid.points();
  std::vector<cplx> dvals(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) dvals[k] = expr_eval(dphi, pts[k]);

  // Visit the outermost ring first: violations almost always show up there,
  // which lets the scan abandon a parameter pair early.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;

  std::optional<Certificate> best;
  for (int j = 0; j < mu_steps; ++j) {
    for (int k = 0; k <= nu_steps; ++k) {
      const RZParams p{2.0 * kPi * j / mu_steps, kPi * k / nu_steps};
      const RzFactor factor(p, axis);
      const double floor = best ? best->margin : -kMarginTol;
      double margin = std::numeric_limits<double>::infinity();
      cplx witness;
      for (std::size_t idx : order) {
        const double v = factor(dvals[idx], pts[idx]).real();
        if (v < margin) {
          margin = v;
          witness = pts[idx];
          if (margin < floor) break;
        }
      }
      if (best ? margin > best->margin : margin >= floor) {
        best = Certificate{axis == Axis::Real ? CertKind::RzReal : CertKind::RzImag, margin, witness, p};
      }
    }
  }
  return best;
}

ProbeResult direction_convexity_probe(const HarmonicMap& F, Axis direction, double r, int lines, int samples) {
  if (!(r >= 0.9 && r < 1.0)) throw Error(Errc::Config, "probe radius must lie in [0.9, 1)");
  std::vector<double> coord;
  coord.reserve(samples);
  for (const cplx& w : boundary_trace(F, r, samples)) coord.push_back(direction == Axis::Real ? w.imag() : w.real());

  std::vector<double> sorted = coord;
  std::sort(sorted.begin(), sorted.end());
  ProbeResult result{true, 0, 0.0};
  std::vector<int> signs;
  signs.reserve(samples);
  for (int l = 0; l < lines; ++l) {
    // linear-interpolated quantile at (l + 1/2)/lines
    const double pos = (l + 0.5) / lines * (samples - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double level = sorted[lo] + (pos - lo) * (sorted[hi] - sorted[lo]);

    signs.clear();
    for (double c : coord) {
      const double d = c - level;
      if (d > kDeadband) signs.push_back(1);
      else if (d < -kDeadband) signs.push_back(-1);
    }
    int crossings = 0;
    for (std::size_t k = 0; k < signs.size(); ++k) {
      if (signs[k] != signs[(k + signs.size() - 1) % signs.size()]) ++crossings;
    }
    if (crossings > result.max_crossings) {
      result.max_crossings = crossings;
      result.worst_line = level;
    }
  }
  result.convex = result.max_crossings <= 2;
  return result;
}

double starlike_derivative(const HarmonicMap& F, double t, double r) {
  const cplx z = std::polar(r, t);
  const cplx f = harmonic_eval(F, z);
  if (std::abs(f) < 1e-12) throw Error(Errc::ZeroValue, "F vanishes at the sample point");
  const cplx Df = z * expr_eval(F.dh, z) - std::conj(z * expr_eval(F.dg, z));
  return (Df / f).real();
}

Certificate u_class_margin(const AnalyticExpr& f, const Grid& grid) {
  const AnalyticExpr df = expr_derivative(f);
  return min_over_grid(CertKind::UClass, grid, [&](cplx z) {
    const cplx fz = expr_eval(f, z);
    if (std::abs(fz) < 1e-12) throw Error(Errc::ZeroValue, "f vanishes away from the origin");
    const cplx ratio = z / fz;
    return 1.0 - std::abs(expr_eval(df, z) * ratio * ratio - 1.0);
  });
}

Certificate m_theta_check(const HarmonicMap& F, double theta, const Grid& grid) {
  const int n = F.order() - 1;
  const TruncSeries dh = series_derivative(F.h).truncated(n);
  const TruncSeries dg = series_derivative(F.g).truncated(n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const bool exact = std::abs(s) < 1e-15 && std::abs(std::abs(c) - 1.0) < 1e-15;
  for (int k = 0; k <= n; ++k) {
    const GaussRational expected_scale = k == 0 ? GaussRational(0) : dh[k - 1];
    bool ok;
    if (exact) {
      ok = dg[k] == (c > 0 ? expected_scale : -expected_scale);
    } else {
      ok = std::abs(dg[k].to_complex() - std::polar(1.0, theta) * expected_scale.to_complex()) <= 1e-12;
    }
    if (!ok) {
      throw Error(Errc::SeriesMismatch, "g' differs from e^{i theta} z h' at coefficient " + std::to_string(k));
    }
  }
  const AnalyticExpr d2h = expr_derivative(F.dh);
  return min_over_grid(CertKind::MTheta, grid, [&](cplx z) {
    return (1.0 + z * expr_eval(d2h, z) / expr_eval(F.dh, z)).real() + 0.5;
  });
}

std::vector<cplx> boundary_trace(const HarmonicMap& F, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(Errc::OutsideDisk, "trace radius must lie in (0, 1)");
  std::vector<cplx> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) out.push_back(harmonic_eval(F, std::polar(r, 2.0 * kPi * k / samples)));
  return out;
}

}  // namespace atlas
