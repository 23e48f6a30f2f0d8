#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "atlas/rational.hpp"

namespace atlas {

inline constexpr int kDefaultOrder = 64;

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N over the Gaussian
/// rationals. Binary operations truncate to the smaller order of their
/// operands; nothing ever silently extends the order.
class TruncSeries {
 public:
  /// Zero series of the given order.
  explicit TruncSeries(int order = kDefaultOrder);
  /// Coefficients c_0..c_N; padded with zeros (or truncated) to `order`.
  TruncSeries(std::vector<GaussRational> coeffs, int order);
  TruncSeries(std::initializer_list<GaussRational> coeffs, int order)
      : TruncSeries(std::vector<GaussRational>(coeffs), order) {}

  static TruncSeries constant(const GaussRational& c, int order);
  /// The monomial z.
  static TruncSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GaussRational& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const GaussRational> coeffs() const { return coeffs_; }

  TruncSeries truncated(int order) const;
  bool is_zero() const;

  std::complex<double> eval(std::complex<double> z) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<GaussRational> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const GaussRational& c);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Throws Error(ZeroConstantTerm) when c_0 = 0.
TruncSeries series_reciprocal(const TruncSeries& a);
/// Order drops by one.
TruncSeries series_derivative(const TruncSeries& a);
/// Constant term 0; order rises by one.
TruncSeries series_antiderivative(const TruncSeries& a);
/// Substitution z -> c z.
TruncSeries series_compose_linear(const TruncSeries& a, const GaussRational& c);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return series_add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return series_sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
inline TruncSeries operator*(const GaussRational& c, const TruncSeries& a) { return series_scale(a, c); }
inline TruncSeries operator-(const TruncSeries& a) { return series_scale(a, GaussRational(-1)); }

/// Coefficients as "p/q" strings, c_0 first.
std::vector<std::string> coefficient_strings(const TruncSeries& s);

}  // namespace atlas
