#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atlas/rational.hpp"
#include "atlas/series.hpp"

namespace atlas {

/// Polynomial over the Gaussian rationals, coefficients in ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<GaussRational> coeffs);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<GaussRational> coeffs) : Poly(std::vector<GaussRational>(coeffs)) {}

  static Poly constant(const GaussRational& c) { return Poly({c}); }
  static Poly z() { return Poly({GaussRational(0), GaussRational(1)}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const GaussRational> coeffs() const { return coeffs_; }
  GaussRational coeff(int k) const;
  const GaussRational& leading() const { return coeffs_.back(); }
  GaussRational at_zero() const { return coeff(0); }

  std::complex<double> eval(std::complex<double> z) const;
  Poly derivative() const;
  /// p(c z).
  Poly compose_linear(const GaussRational& c) const;
  /// Number of leading zero coefficients (the multiplicity of the root at 0).
  int low_order() const;
  /// p / z^k, exact; k must not exceed low_order().
  Poly shift_down(int k) const;
  Poly monic() const;
  TruncSeries to_series(int order) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRational& c, const Poly& a);
  friend Poly operator-(const Poly& a) { return GaussRational(-1) * a; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Comma-separated coefficient list, lowest degree first ("0" for zero).
  std::string list_str() const;
  /// Infix rendering such as "1-z+z^2".
  std::string infix_str() const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;
};

/// Quotient and remainder of a / b; throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
/// Numeric roots of the squarefree part, via companion-matrix eigenvalues.
std::vector<std::complex<double>> poly_roots(const Poly& p);

}  // namespace atlas
