#include "atlas/analytic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr double kRootTol = 1e-9;
constexpr double kBranchRadius = 1.0 - 1e-6;
constexpr int kBranchRadii = 32;
constexpr int kBranchAngles = 256;

struct Reduced {
  Poly num;
  Poly den;
};

// Cancels gcd(num, den) and scales so that den(0) = 1 (or den is monic when
// den(0) = 0); the scale is pushed into num.
Reduced reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (num.is_zero()) return {Poly{}, Poly{GaussRational(1)}};
  const Poly g = gcd(num, den);
  Poly n = divmod(num, g).first;
  Poly d = divmod(den, g).first;
  const GaussRational scale = d.at_zero().is_zero() ? d.leading() : d.at_zero();
  const GaussRational inv = GaussRational(1) / scale;
  return {inv * n, inv * d};
}

void check_zero_free(const Poly& p, const char* what, std::vector<cplx>& singular) {
  for (const cplx& root : poly_roots(p)) {
    if (std::abs(root) < 1.0 - kRootTol) {
      std::ostringstream os;
      os << what << " " << p.infix_str() << " vanishes at " << root << " inside the unit disk";
      throw Error(Errc::PoleInDisk, os.str());
    }
    singular.push_back(root);
  }
}

// Samples arg(z) over a polar grid and rejects any crossing of the
// principal-branch cut (the negative real axis) between neighbouring samples.
void check_branch(const Poly& arg) {
  auto crosses_cut = [](cplx a, cplx b) {
    if (a.imag() == 0.0 && a.real() < 0.0) return true;
    if ((a.imag() < 0.0) == (b.imag() < 0.0) || a.imag() == 0.0 || b.imag() == 0.0) return false;
    const double t = a.imag() / (a.imag() - b.imag());
    return a.real() + t * (b.real() - a.real()) < 0.0;
  };
  std::vector<cplx> prev_ring;
  for (int i = 1; i <= kBranchRadii; ++i) {
    const double r = kBranchRadius * i / kBranchRadii;
    std::vector<cplx> ring(kBranchAngles);
    for (int j = 0; j < kBranchAngles; ++j) {
      ring[j] = arg.eval(std::polar(r, 2.0 * std::numbers::pi * j / kBranchAngles));
    }
    for (int j = 0; j < kBranchAngles; ++j) {
      const bool bad = crosses_cut(ring[j], ring[(j + 1) % kBranchAngles]) ||
                       (!prev_ring.empty() && crosses_cut(prev_ring[j], ring[j]));
      if (bad) throw Error(Errc::BranchCut, "log argument " + arg.infix_str() + " crosses the negative real axis on the disk");
    }
    prev_ring = std::move(ring);
  }
  if (crosses_cut(arg.eval(0.0), arg.eval(0.0))) {
    throw Error(Errc::BranchCut, "log argument " + arg.infix_str() + " is negative at the origin");
  }
}

std::vector<cplx> validate(const Term& term) {
  std::vector<cplx> singular;
  if (const auto* rt = std::get_if<RationalTerm>(&term)) {
    const Reduced r = reduce(rt->num, rt->den);
    if (r.den.at_zero().is_zero()) throw Error(Errc::PoleAtOrigin, "rational term has a pole at z = 0");
    check_zero_free(r.den, "denominator", singular);
  } else {
    const auto& lt = std::get<LogTerm>(term);
    if (lt.arg.is_zero()) throw Error(Errc::PoleInDisk, "log of the zero polynomial");
    if (lt.arg.at_zero().is_zero()) throw Error(Errc::PoleAtOrigin, "log argument vanishes at z = 0");
    check_zero_free(lt.arg, "log argument", singular);
    check_branch(lt.arg);
  }
  return singular;
}

}  // namespace

AnalyticExpr::AnalyticExpr(std::vector<Term> terms) {
  for (auto& term : terms) {
    const GaussRational& c = std::visit([](const auto& t) -> const GaussRational& { return t.coeff; }, term);
    if (c.is_zero()) continue;
    if (const auto* rt = std::get_if<RationalTerm>(&term); rt && rt->num.is_zero()) continue;
    auto pts = validate(term);
    singular_.insert(singular_.end(), pts.begin(), pts.end());
    terms_.push_back(std::move(term));
  }
}

AnalyticExpr AnalyticExpr::rational(GaussRational coeff, Poly num, Poly den) {
  return AnalyticExpr({RationalTerm{std::move(coeff), std::move(num), std::move(den)}});
}

AnalyticExpr AnalyticExpr::log(GaussRational coeff, Poly arg) {
  return AnalyticExpr({LogTerm{std::move(coeff), std::move(arg)}});
}

bool AnalyticExpr::has_logs() const {
  for (const auto& t : terms_) {
    if (std::holds_alternative<LogTerm>(t)) return true;
  }
  return false;
}

AnalyticExpr operator+(const AnalyticExpr& a, const AnalyticExpr& b) {
  AnalyticExpr out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  out.singular_.insert(out.singular_.end(), b.singular_.begin(), b.singular_.end());
  return out;
}

AnalyticExpr operator-(const AnalyticExpr& a, const AnalyticExpr& b) { return a + (-b); }

AnalyticExpr operator*(const GaussRational& c, const AnalyticExpr& e) {
  if (c.is_zero()) return {};
  AnalyticExpr out = e;
  for (auto& t : out.terms_) std::visit([&](auto& term) { term.coeff = c * term.coeff; }, t);
  return out;
}

cplx expr_eval(const AnalyticExpr& e, cplx z, double pole_eps) {
  if (std::abs(z) >= 1.0) throw Error(Errc::OutsideDisk, "evaluation point outside the open unit disk");
  for (const cplx& s : e.singular_points()) {
    if (std::abs(z - s) < pole_eps) {
      std::ostringstream os;
      os << "z = " << z << " lies within " << pole_eps << " of singular point " << s;
      throw Error(Errc::NearPole, os.str());
    }
  }
  cplx acc{0.0, 0.0};
  for (const auto& term : e.terms()) {
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      acc += rt->coeff.to_complex() * rt->num.eval(z) / rt->den.eval(z);
    } else {
      const auto& lt = std::get<LogTerm>(term);
      acc += lt.coeff.to_complex() * std::log(lt.arg.eval(z));
    }
  }
  return acc;
}

AnalyticExpr expr_derivative(const AnalyticExpr& e) {
  std::vector<Term> out;
  for (const auto& term : e.terms()) {
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      const Reduced r = reduce(rt->num, rt->den);
      const Poly num = r.num.derivative() * r.den - r.num * r.den.derivative();
      const Reduced d = reduce(num, r.den * r.den);
      out.emplace_back(RationalTerm{rt->coeff, d.num, d.den});
    } else {
      const auto& lt = std::get<LogTerm>(term);
      const Reduced d = reduce(lt.arg.derivative(), lt.arg);
      out.emplace_back(RationalTerm{lt.coeff, d.num, d.den});
    }
  }
  return AnalyticExpr(std::move(out));
}

TruncSeries expr_series(const AnalyticExpr& e, int order) {
  TruncSeries acc(order);
  for (const auto& term : e.terms()) {
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      Poly num = rt->num;
      Poly den = rt->den;
      const int k = den.low_order();
      if (k > 0) {
        if (num.low_order() < k) throw Error(Errc::PoleAtOrigin, "rational term has a pole at z = 0");
        num = num.shift_down(k);
        den = den.shift_down(k);
      }
      const TruncSeries s = series_mul(num.to_series(order), series_reciprocal(den.to_series(order)));
      acc = acc + series_scale(s, rt->coeff);
    } else {
      const auto& lt = std::get<LogTerm>(term);
      if (lt.arg.at_zero() != GaussRational(1)) {
        throw Error(Errc::LogConstant, "log argument must equal 1 at z = 0 for an exact expansion, got " +
                                           lt.arg.at_zero().str());
      }
      if (order == 0) continue;
      const TruncSeries ratio =
          series_mul(lt.arg.derivative().to_series(order - 1), series_reciprocal(lt.arg.to_series(order - 1)));
      acc = acc + series_scale(series_antiderivative(ratio), lt.coeff);
    }
  }
  return acc;
}

AnalyticExpr expr_transform(const AnalyticExpr& e, Transform kind) {
  const GaussRational inner = kind == Transform::NegReflect ? GaussRational(-1) : GaussRational::i();
  const GaussRational outer = kind == Transform::NegReflect ? GaussRational(-1) : -GaussRational::i();
  std::vector<Term> out;
  for (const auto& term : e.terms()) {
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      out.emplace_back(RationalTerm{outer * rt->coeff, rt->num.compose_linear(inner), rt->den.compose_linear(inner)});
    } else {
      const auto& lt = std::get<LogTerm>(term);
      out.emplace_back(LogTerm{outer * lt.coeff, lt.arg.compose_linear(inner)});
    }
  }
  return AnalyticExpr(std::move(out));
}

RationalTerm expr_as_rational(const AnalyticExpr& e) {
  Poly num;
  Poly den{GaussRational(1)};
  for (const auto& term : e.terms()) {
    const auto* rt = std::get_if<RationalTerm>(&term);
    if (rt == nullptr) throw Error(Errc::Unsupported, "expression with log terms is not a rational function");
    num = num * rt->den + (rt->coeff * rt->num) * den;
    den = den * rt->den;
    const Reduced r = reduce(num, den);
    num = r.num;
    den = r.den;
  }
  return {GaussRational(1), num, den};
}

AnalyticExpr expr_multiply(const AnalyticExpr& a, const AnalyticExpr& b) {
  const RationalTerm w = expr_as_rational(b);
  std::vector<Term> out;
  for (const auto& term : a.terms()) {
    const auto* rt = std::get_if<RationalTerm>(&term);
    if (rt == nullptr) throw Error(Errc::Unsupported, "cannot multiply a log term by a rational function");
    const Reduced r = reduce(rt->num * w.num, rt->den * w.den);
    out.emplace_back(RationalTerm{rt->coeff, r.num, r.den});
  }
  return AnalyticExpr(std::move(out));
}

AnalyticExpr expr_divide(const AnalyticExpr& num, const AnalyticExpr& den) {
  const RationalTerm w = expr_as_rational(den);
  if (w.num.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero expression");
  std::vector<Term> out;
  for (const auto& term : num.terms()) {
    const auto* rt = std::get_if<RationalTerm>(&term);
    if (rt == nullptr) throw Error(Errc::Unsupported, "cannot divide a log term by a rational function");
    const Reduced r = reduce(rt->num * w.den, rt->den * w.num);
    out.emplace_back(RationalTerm{rt->coeff, r.num, r.den});
  }
  return AnalyticExpr(std::move(out));
}

std::string to_term_text(const AnalyticExpr& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : e.terms()) {
    if (!first) os << " + ";
    first = false;
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      os << "rat(" << rt->coeff.str() << "; " << rt->num.list_str() << "; " << rt->den.list_str() << ")";
    } else {
      const auto& lt = std::get<LogTerm>(term);
      os << "log(" << lt.coeff.str() << "; " << lt.arg.list_str() << ")";
    }
  }
  return os.str();
}

std::string to_infix(const AnalyticExpr& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : e.terms()) {
    if (!first) os << " + ";
    first = false;
    if (const auto* rt = std::get_if<RationalTerm>(&term)) {
      if (rt->coeff != GaussRational(1)) os << "(" << rt->coeff.str() << ")*";
      os << "(" << rt->num.infix_str() << ")";
      if (rt->den != Poly{GaussRational(1)}) os << "/(" << rt->den.infix_str() << ")";
    } else {
      const auto& lt = std::get<LogTerm>(term);
      if (lt.coeff != GaussRational(1)) os << "(" << lt.coeff.str() << ")*";
      os << "log(" << lt.arg.infix_str() << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  return parts;
}

Poly parse_coeff_list(std::string_view s) {
  std::vector<GaussRational> c;
  for (const auto& part : split(s, ',')) c.push_back(GaussRational::parse(part));
  return Poly(std::move(c));
}

AnalyticExpr parse_term_text(std::string_view text) {
  const std::string s = trim(text);
  if (s == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    const bool is_rat = s.compare(pos, 4, "rat(") == 0;
    const bool is_log = s.compare(pos, 4, "log(") == 0;
    if (!is_rat && !is_log) throw Error(Errc::Parse, "expected rat( or log( at offset " + std::to_string(pos));
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw Error(Errc::Parse, "unterminated term");
    const auto fields = split(std::string_view(s).substr(pos + 4, close - pos - 4), ';');
    if (is_rat) {
      if (fields.size() != 3) throw Error(Errc::Parse, "rat(c; P; Q) takes three fields");
      terms.emplace_back(RationalTerm{GaussRational::parse(fields[0]), parse_coeff_list(fields[1]), parse_coeff_list(fields[2])});
    } else {
      if (fields.size() != 2) throw Error(Errc::Parse, "log(c; L) takes two fields");
      terms.emplace_back(LogTerm{GaussRational::parse(fields[0]), parse_coeff_list(fields[1])});
    }
    pos = close + 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == s.size()) break;
    if (s[pos] != '+') throw Error(Errc::Parse, "expected '+' between terms");
    ++pos;
  }
  return AnalyticExpr(std::move(terms));
}

// Value of an infix subexpression: a reduced rational function plus a list
// of (coefficient, argument) log terms.
struct Value {
  Poly num;
  Poly den{GaussRational(1)};
  std::vector<LogTerm> logs;

  bool is_constant() const { return logs.empty() && num.is_constant() && den.is_constant(); }
  GaussRational constant() const { return num.at_zero() / den.at_zero(); }
};

Value make_rational(const Poly& n, const Poly& d) {
  const Reduced r = reduce(n, d);
  return {r.num, r.den, {}};
}

Value add(const Value& a, const Value& b) {
  Value out = make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
  out.logs = a.logs;
  out.logs.insert(out.logs.end(), b.logs.begin(), b.logs.end());
  return out;
}

Value scale(const Value& a, const GaussRational& c) {
  Value out = a;
  out.num = c * out.num;
  for (auto& l : out.logs) l.coeff = c * l.coeff;
  return out;
}

Value mul(const Value& a, const Value& b) {
  if (a.is_constant()) return scale(b, a.constant());
  if (b.is_constant()) return scale(a, b.constant());
  if (!a.logs.empty() || !b.logs.empty()) throw Error(Errc::Unsupported, "product of a log term with a non-constant");
  return make_rational(a.num * b.num, a.den * b.den);
}

Value div(const Value& a, const Value& b) {
  if (!b.logs.empty()) throw Error(Errc::Unsupported, "division by a log term");
  if (b.num.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in expression");
  if (b.is_constant()) return scale(a, GaussRational(1) / b.constant());
  if (!a.logs.empty()) throw Error(Errc::Unsupported, "log term divided by a non-constant");
  return make_rational(a.num * b.den, a.den * b.num);
}

Value power(const Value& base, long exponent) {
  if (!base.logs.empty()) throw Error(Errc::Unsupported, "power of a log term");
  Value result = make_rational(Poly{GaussRational(1)}, Poly{GaussRational(1)});
  const long n = exponent < 0 ? -exponent : exponent;
  for (long k = 0; k < n; ++k) result = mul(result, base);
  if (exponent < 0) result = div(make_rational(Poly{GaussRational(1)}, Poly{GaussRational(1)}), result);
  return result;
}

Value take_log(const Value& x) {
  if (!x.logs.empty()) throw Error(Errc::Unsupported, "log of a log term");
  if (x.num.at_zero().is_zero() || x.den.at_zero().is_zero()) {
    throw Error(Errc::PoleAtOrigin, "log argument vanishes or is singular at z = 0");
  }
  if (x.num.at_zero() / x.den.at_zero() != GaussRational(1)) {
    throw Error(Errc::LogConstant, "log argument must equal 1 at z = 0");
  }
  Value out;
  const GaussRational n0 = x.num.at_zero();
  const GaussRational d0 = x.den.at_zero();
  if (!x.num.is_constant()) out.logs.push_back({GaussRational(1), (GaussRational(1) / n0) * x.num});
  if (!x.den.is_constant()) out.logs.push_back({GaussRational(-1), (GaussRational(1) / d0) * x.den});
  return out;
}

class InfixParser {
 public:
  explicit InfixParser(std::string_view text) : s_(text) {}

  Value parse() {
    Value v = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return c == '(' || c == 'z' || c == 'i' || c == 'l' || std::isdigit(static_cast<unsigned char>(c));
  }

  Value expression() {
    Value v;
    bool first = true;
    while (true) {
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Value t = term();
        v = add(v, c == '-' ? scale(t, GaussRational(-1)) : t);
      } else if (first) {
        v = term();
      } else {
        break;
      }
      first = false;
    }
    return v;
  }

  Value term() {
    Value v = unary();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = mul(v, unary());
      } else if (c == '/') {
        ++pos_;
        v = div(v, unary());
      } else if (starts_primary()) {
        v = mul(v, unary());
      } else {
        break;
      }
    }
    return v;
  }

  Value unary() {
    if (peek() == '-') {
      ++pos_;
      return scale(unary(), GaussRational(-1));
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    Value base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      const long e = integer();
      base = power(base, negative ? -e : e);
    }
    return base;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Value primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'z') {
      ++pos_;
      return make_rational(Poly::z(), Poly{GaussRational(1)});
    }
    if (c == 'i') {
      ++pos_;
      return make_rational(Poly{GaussRational::i()}, Poly{GaussRational(1)});
    }
    if (s_.compare(pos_, 3, "log") == 0) {
      pos_ += 3;
      if (peek() != '(') fail("expected '(' after log");
      ++pos_;
      Value arg = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return take_log(arg);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return make_rational(Poly{GaussRational(Rational::parse(s_.substr(start, pos_ - start)))}, Poly{GaussRational(1)});
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

AnalyticExpr parse_expr(std::string_view text) {
  if (text.find(';') != std::string_view::npos || trim(text) == "0") return parse_term_text(text);
  const Value v = InfixParser(text).parse();
  std::vector<Term> terms;
  if (!v.num.is_zero()) terms.emplace_back(RationalTerm{GaussRational(1), v.num, v.den});
  for (const auto& l : v.logs) terms.emplace_back(l);
  return AnalyticExpr(std::move(terms));
}

}  // namespace atlas
