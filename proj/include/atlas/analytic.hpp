#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atlas/poly.hpp"
#include "atlas/rational.hpp"
#include "atlas/series.hpp"

namespace atlas {

using cplx = std::complex<double>;

inline constexpr double kPoleEps = 1e-6;

/// coeff * num(z) / den(z)
struct RationalTerm {
  GaussRational coeff;
  Poly num;
  Poly den;
  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

/// coeff * Log(arg(z)), principal branch.
struct LogTerm {
  GaussRational coeff;
  Poly arg;
  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

using Term = std::variant<RationalTerm, LogTerm>;

/// Finite sum of rational and logarithmic terms, analytic on the open unit
/// disk. Construction rejects denominators or log arguments with zeros inside
/// the disk, a pole at the origin, and log arguments whose image meets the
/// negative real axis (checked on a sampling grid). Terms are kept as
/// authored; equality of two expressions is decided on their series.
class AnalyticExpr {
 public:
  AnalyticExpr() = default;
  explicit AnalyticExpr(std::vector<Term> terms);

  static AnalyticExpr rational(GaussRational coeff, Poly num, Poly den);
  static AnalyticExpr polynomial(Poly p) { return rational(GaussRational(1), std::move(p), Poly{GaussRational(1)}); }
  static AnalyticExpr log(GaussRational coeff, Poly arg);

  std::span<const Term> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool has_logs() const;
  /// Zeros of denominators and log arguments (numeric, squarefree parts).
  const std::vector<cplx>& singular_points() const { return singular_; }

  friend AnalyticExpr operator+(const AnalyticExpr& a, const AnalyticExpr& b);
  friend AnalyticExpr operator-(const AnalyticExpr& a, const AnalyticExpr& b);
  friend AnalyticExpr operator*(const GaussRational& c, const AnalyticExpr& e);
  friend AnalyticExpr operator-(const AnalyticExpr& e) { return GaussRational(-1) * e; }

 private:
  std::vector<Term> terms_;
  std::vector<cplx> singular_;
};

/// Numeric value at z, |z| < 1. Throws NearPole within `pole_eps` of a
/// singular point and OutsideDisk for |z| >= 1.
cplx expr_eval(const AnalyticExpr& e, cplx z, double pole_eps = kPoleEps);

/// Termwise d/dz; log terms become L'/L. Common factors are cancelled.
AnalyticExpr expr_derivative(const AnalyticExpr& e);

/// Exact Taylor coefficients up to z^order.
TruncSeries expr_series(const AnalyticExpr& e, int order);

enum class Transform { NegReflect, RotIConj };

/// NegReflect: -e(-z). RotIConj: -i e(i z).
AnalyticExpr expr_transform(const AnalyticExpr& e, Transform kind);

/// Divides an expression by a purely rational one, e.g. phi'/(1 - omega).
/// Both inputs must be free of log terms.
AnalyticExpr expr_divide(const AnalyticExpr& num, const AnalyticExpr& den);
AnalyticExpr expr_multiply(const AnalyticExpr& a, const AnalyticExpr& b);
/// Collapses a log-free expression into a single reduced rational term.
RationalTerm expr_as_rational(const AnalyticExpr& e);

/// Term syntax: `rat(c; p0,p1,...; q0,q1,...) + log(c; l0,l1,...)`, "0" for
/// the empty sum. Coefficients use GaussRational::parse literals.
std::string to_term_text(const AnalyticExpr& e);
/// Human-readable infix form (not guaranteed to re-parse to identical terms).
std::string to_infix(const AnalyticExpr& e);

/// Parses either the term syntax (recognised by a ';') or an infix formula
/// over z such as "z(2-z)/(2(1-z)^2)" or "5/8 log(1+z) - 1/8 log(1-z)".
AnalyticExpr parse_expr(std::string_view text);

}  // namespace atlas
