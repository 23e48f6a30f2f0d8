#include "atlas/series.hpp"

#include <algorithm>

#include "atlas/error.hpp"

namespace atlas {

TruncSeries::TruncSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

TruncSeries::TruncSeries(std::vector<GaussRational> coeffs, int order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
}

TruncSeries TruncSeries::constant(const GaussRational& c, int order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::identity(int order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = GaussRational(1);
  return s;
}

TruncSeries TruncSeries::truncated(int order) const {
  return TruncSeries(std::vector<GaussRational>(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                                                 order + 1, std::ssize(coeffs_))),
                     std::min(order, this->order()));
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussRational& c) { return c.is_zero(); });
}

std::complex<double> TruncSeries::eval(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
  return {std::move(out), n};
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
  return {std::move(out), n};
}

TruncSeries series_scale(const TruncSeries& a, const GaussRational& c) {
  std::vector<GaussRational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return {std::move(out), a.order()};
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return {std::move(out), n};
}

TruncSeries series_reciprocal(const TruncSeries& a) {
  if (a[0].is_zero()) throw Error(Errc::ZeroConstantTerm, "reciprocal of a series with zero constant term");
  const int n = a.order();
  const GaussRational inv0 = GaussRational(1) / a[0];
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  out[0] = inv0;
  // a * out = 1  =>  out_k = -(sum_{j=1..k} a_j out_{k-j}) / a_0
  for (int k = 1; k <= n; ++k) {
    GaussRational acc;
    for (int j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) acc += a[j] * out[k - j];
    }
    out[k] = -acc * inv0;
  }
  return {std::move(out), n};
}

TruncSeries series_derivative(const TruncSeries& a) {
  const int n = std::max(a.order() - 1, 0);
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= a.order(); ++k) out[k - 1] = a[k] * GaussRational(k);
  return {std::move(out), n};
}

TruncSeries series_antiderivative(const TruncSeries& a) {
  const int n = a.order() + 1;
  std::vector<GaussRational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= a.order(); ++k) out[k + 1] = a[k] / GaussRational(k + 1);
  return {std::move(out), n};
}

TruncSeries series_compose_linear(const TruncSeries& a, const GaussRational& c) {
  std::vector<GaussRational> out(a.coeffs().begin(), a.coeffs().end());
  GaussRational power(1);
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return {std::move(out), a.order()};
}

std::vector<std::string> coefficient_strings(const TruncSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace atlas
