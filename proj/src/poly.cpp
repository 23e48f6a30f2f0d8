#include "atlas/poly.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "atlas/error.hpp"

namespace atlas {

Poly::Poly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return GaussRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<GaussRational> out;
  for (int k = 1; k <= degree(); ++k) out.push_back(coeffs_[k] * GaussRational(k));
  return Poly(std::move(out));
}

Poly Poly::compose_linear(const GaussRational& c) const {
  std::vector<GaussRational> out = coeffs_;
  GaussRational power(1);
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return Poly(std::move(out));
}

int Poly::low_order() const {
  int k = 0;
  while (k <= degree() && coeffs_[k].is_zero()) ++k;
  return k;
}

Poly Poly::shift_down(int k) const {
  if (k > low_order()) throw Error(Errc::Unsupported, "shift_down past a nonzero coefficient");
  return Poly(std::vector<GaussRational>(coeffs_.begin() + std::min<std::ptrdiff_t>(k, std::ssize(coeffs_)),
                                         coeffs_.end()));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (GaussRational(1) / leading()) * *this;
}

TruncSeries Poly::to_series(int order) const {
  std::vector<GaussRational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, std::ssize(coeffs_)));
  return TruncSeries(std::move(c), order);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const GaussRational& c, const Poly& a) {
  std::vector<GaussRational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

std::string Poly::list_str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k].str();
  return os.str();
}

std::string Poly::infix_str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const GaussRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string cs;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational mag = abs(c.re());
      if (!(mag == Rational(1) && k > 0)) cs = mag.str();
    } else {
      cs = "(" + c.str() + ")";
    }
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    if (!cs.empty() && !mono.empty()) os << cs << "*" << mono;
    else os << cs << mono;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<GaussRational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Poly{}, a};
  std::vector<GaussRational> quo(static_cast<std::size_t>(dq) + 1);
  const GaussRational inv_lead = GaussRational(1) / b.leading();
  for (int k = dq; k >= 0; --k) {
    const GaussRational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  const Poly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  const Poly q = squarefree_part(p);
  const int n = q.degree();
  if (n <= 0) return {};
  if (n == 1) return {-(q.coeff(0).to_complex())};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -q.coeff(k).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace atlas
