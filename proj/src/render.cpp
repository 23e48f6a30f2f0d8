#include "atlas/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "atlas/error.hpp"

namespace atlas {

namespace {

using Curve = std::vector<std::optional<cplx>>;

struct Polyline {
  Curve pts;
  bool closed;
  bool boundary;
};

std::optional<cplx> sample(const HarmonicMap& F, cplx z) {
  try {
    const cplx w = harmonic_eval(F, z);
    if (std::isfinite(w.real()) && std::isfinite(w.imag())) return w;
  } catch (const Error& e) {
    if (e.code() != Errc::NearPole) throw;
  }
  return std::nullopt;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

double percentile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * (v.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - lo) * (v[hi] - v[lo]);
}

}  // namespace

std::string render_svg(const HarmonicMap& F, const RenderOptions& opts) {
  if (opts.circles < 1 || opts.rays < 1 || opts.samples_per_curve < 2 || !(opts.r_max > 0.0 && opts.r_max < 1.0) ||
      !(opts.boundary_r > 0.0 && opts.boundary_r < 1.0)) {
    throw Error(Errc::Config, "render needs circles, rays >= 1, samples >= 2 and radii in (0, 1)");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const int n = opts.samples_per_curve;
  std::vector<Polyline> curves;
  for (int c = 1; c <= opts.circles; ++c) {
    const double r = opts.r_max * c / opts.circles;
    Curve pts;
    for (int k = 0; k < n; ++k) pts.push_back(sample(F, std::polar(r, kTwoPi * k / n)));
    curves.push_back({std::move(pts), true, false});
  }
  for (int j = 0; j < opts.rays; ++j) {
    const double t = kTwoPi * j / opts.rays;
    Curve pts;
    for (int k = 0; k <= n; ++k) pts.push_back(sample(F, std::polar(opts.r_max * k / n, t)));
    curves.push_back({std::move(pts), false, false});
  }
  {
    Curve pts;
    for (int k = 0; k < n; ++k) pts.push_back(sample(F, std::polar(opts.boundary_r, kTwoPi * k / n)));
    curves.push_back({std::move(pts), true, true});
  }

  std::array<double, 4> vp{};
  if (opts.viewport) {
    vp = *opts.viewport;
  } else {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& c : curves) {
      for (const auto& p : c.pts) {
        if (p) {
          xs.push_back(p->real());
          ys.push_back(p->imag());
        }
      }
    }
    if (xs.empty()) throw Error(Errc::NearPole, "no sample of the map could be evaluated");
    vp = {percentile(xs, 0.01), percentile(ys, 0.01), percentile(xs, 0.99), percentile(ys, 0.99)};
    const double span = std::max({vp[2] - vp[0], vp[3] - vp[1], 1e-9});
    const double pad = 0.05 * span;
    vp = {vp[0] - pad, vp[1] - pad, vp[2] + pad, vp[3] + pad};
  }
  const double w = vp[2] - vp[0];
  const double h = vp[3] - vp[1];
  if (!(w > 0.0 && h > 0.0)) throw Error(Errc::Config, "empty render viewport");
  // Points this far outside the viewport break the curve (poles, slits).
  const auto far = [&](cplx p) {
    return p.real() < vp[0] - 2 * w || p.real() > vp[2] + 2 * w || p.imag() < vp[1] - 2 * h || p.imag() > vp[3] + 2 * h;
  };
  const double scale = opts.pixels / std::max(w, h);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w * scale) << "\" height=\""
     << fmt(h * scale) << "\" viewBox=\"" << fmt(vp[0]) << ' ' << fmt(-vp[3]) << ' ' << fmt(w) << ' ' << fmt(h)
     << "\">\n";
  os << "<rect x=\"" << fmt(vp[0]) << "\" y=\"" << fmt(-vp[3]) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
     << "\" fill=\"white\"/>\n";
  for (const auto& c : curves) {
    std::string d;
    bool pen_down = false;
    bool gap = false;
    for (const auto& p : c.pts) {
      if (!p || far(*p)) {
        pen_down = false;
        gap = true;
        continue;
      }
      d += pen_down ? " L" : (d.empty() ? "M" : " M");
      d += fmt(p->real()) + ',' + fmt(-p->imag());
      pen_down = true;
    }
    if (d.empty()) continue;
    if (c.closed && !gap) d += " Z";
    const double stroke = (c.boundary ? opts.boundary_stroke : opts.grid_stroke) / scale;
    os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << (c.boundary ? "black" : "#3366aa")
       << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace atlas
