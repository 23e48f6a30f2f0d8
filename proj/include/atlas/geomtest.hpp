#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "atlas/analytic.hpp"
#include "atlas/grid.hpp"
#include "atlas/shear.hpp"

namespace atlas {

// Every check here samples finitely many points. A positive margin is
// evidence on the sample, never a proof.

inline constexpr double kMarginTol = 1e-9;

enum class Axis { Real, Imag };
std::string_view axis_name(Axis a);

struct RZParams {
  double mu = 0.0;  // [0, 2pi)
  double nu = 0.0;  // [0, pi]
};

enum class CertKind { RzReal, RzImag, Jacobian, Starlike, UClass, MTheta };
std::string_view cert_kind_name(CertKind k);

struct Certificate {
  CertKind kind;
  double margin;
  std::optional<cplx> witness;
  std::optional<RZParams> params;
  double tol = kMarginTol;

  bool holds() const { return margin >= -tol; }
};

/// min |h'|^2 - |g'|^2 over the grid.
Certificate jacobian_min(const HarmonicMap& F, const Grid& grid);

/// The Royster-Ziegler quantity at one point, before taking the real part:
/// e^{i mu}(1 - 2 z e^{-i mu} cos nu + z^2 e^{-2 i mu}) phi'(z), with an
/// extra factor -i for the imaginary axis.
cplx rz_value(cplx dphi, cplx z, RZParams p, Axis axis);

Certificate rz_certificate(const AnalyticExpr& phi, RZParams p, Axis axis, const Grid& grid);

/// Scans mu = 2 pi j / mu_steps, nu = pi k / nu_steps (k = 0..nu_steps) and
/// returns the best certificate if its margin clears -tol.
std::optional<Certificate> rz_search(const AnalyticExpr& phi, Axis axis, const Grid& grid, int mu_steps = 96,
                                     int nu_steps = 48);

struct ProbeResult {
  bool convex;
  int max_crossings;
  double worst_line;  // orthogonal coordinate of the worst test line
};

/// Falsifier for convexity in a direction: traces F(r e^{it}) and counts
/// sign changes of the orthogonal coordinate against `lines` test lines
/// placed at quantiles. More than two crossings on any line means false.
ProbeResult direction_convexity_probe(const HarmonicMap& F, Axis direction, double r = 0.999, int lines = 64,
                                      int samples = 20000);

/// Re{Df/f} at z = r e^{it}, where Df = z h' - conj(z g').
double starlike_derivative(const HarmonicMap& F, double t, double r);

/// min over the grid of 1 - |f'(z) (z/f(z))^2 - 1|.
Certificate u_class_margin(const AnalyticExpr& f, const Grid& grid);

/// Checks g' = e^{i theta} z h' on the series (exactly for theta = 0 or pi,
/// else to 1e-12 per coefficient), then reports min Re(1 + z h''/h') + 1/2.
/// Throws SeriesMismatch when the identity fails.
Certificate m_theta_check(const HarmonicMap& F, double theta, const Grid& grid);

/// F(r e^{2 pi i k/samples}) for k = 0..samples-1.
std::vector<cplx> boundary_trace(const HarmonicMap& F, double r, int samples);

}  // namespace atlas
