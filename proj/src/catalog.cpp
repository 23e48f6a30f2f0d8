#include "atlas/catalog.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "atlas/error.hpp"

namespace atlas {

namespace {

struct Shape {
  const char* id;
  const char* formula;
};

// The integer-coefficient functions.
constexpr Shape kSZ[] = {
    {"identity", "z"},
    {"z_1mz", "z/(1-z)"},
    {"z_1pz", "z/(1+z)"},
    {"z_1mz2", "z/(1-z^2)"},
    {"z_1pz2", "z/(1+z^2)"},
    {"koebe", "z/(1-z)^2"},
    {"koebe_neg", "z/(1+z)^2"},
    {"z_1mzz2", "z/(1-z+z^2)"},
    {"z_1pzz2", "z/(1+z+z^2)"},
};

// The half-integer-coefficient functions beyond the integer ones.
constexpr Shape kT1[] = {
    {"phi1", "z-z^2/2"},
    {"psi1", "z+z^2/2"},
    {"phi2", "z(2-z)/(2(1-z))"},
    {"psi2", "z(2+z)/(2(1+z))"},
    {"phi3", "z(2-z^2)/(2(1-z^2))"},
    {"psi3", "z(2+z^2)/(2(1+z^2))"},
    {"phi4", "z(2-z)/(2(1-z^2))"},
    {"psi4", "z(2+z)/(2(1-z^2))"},
    {"phi5", "z(2-z)/(2(1-z)^2)"},
    {"psi5", "z(2+z)/(2(1+z)^2)"},
};

constexpr Shape kT2[] = {
    {"f_plus", "z(2-z+z^2)/(2(1-z+z^2))"},
    {"f_minus", "z(2+z+z^2)/(2(1+z+z^2))"},
};

struct ProofCase {
  const char* shape;    // id in kSZ or kT1
  const char* h_plus;   // closed form of h for omega = z, or nullptr
  const char* h_minus;  // closed form of h for omega = -z, or nullptr
  const char* g_plus = nullptr;  // g when it is simpler to state directly
  const char* g_minus = nullptr;
};

// Shears in the real direction, in the order of the case analysis.
const ProofCase kCV1[] = {
    {"identity", "-log(1-z)", "log(1+z)"},
    {"z_1mz", "1/2 (1/(1-z)^2 - 1)", "z/(2(1-z)) + 1/4 log((1+z)/(1-z))"},
    {"z_1pz", "z/(2(1+z)) + 1/4 log((1+z)/(1-z))", "1/2 (z/(1+z) + z/(1+z)^2)"},
    {"z_1pz2", "z^2/(2(1+z^2)) + z/(2(1+z^2)) - i/4 log((1+iz)/(1-iz))",
     "-z^2/(2(1+z^2)) + z/(2(1+z^2)) - i/4 log((1+iz)/(1-iz))"},
    {"koebe", "(z - z^2/2 + z^3/6)/(1-z)^3", "z(2-z)/(2(1-z)^2)", "(z^2/2 + z^3/6)/(1-z)^3", "-z^2/(2(1-z)^2)"},
    {"koebe_neg", "z(2+z)/(2(1+z)^2)", "(z + z^2/2 + z^3/6)/(1+z)^3", "z^2/(2(1+z)^2)", "(-z^2/2 + z^3/6)/(1+z)^3"},
    {"z_1mzz2", nullptr, nullptr},
    {"z_1pzz2", nullptr, nullptr},
    {"phi1", "z", "2 log(1+z) - z", "z^2/2", nullptr},
    {"psi1", "-2 log(1-z) - z", "z", nullptr, "-z^2/2"},
    {"phi2", "-1/2 log(1-z) + 1/(4(1-z)^2) - 1/4", "5/8 log(1+z) - 1/8 log(1-z) + 1/(4(1-z)) - 1/4"},
    {"psi2", "1/8 log(1+z) - 5/8 log(1-z) + z/(4(1+z))", "1/2 log(1+z) - 1/4 (1/(1+z)^2 - 1)"},
    {"psi3", nullptr, nullptr},
    {"phi5", "1/3 (1/(1-z)^3 - 1)", "1/(4(1-z)^2) + 1/(4(1-z)) - 1/2 + 1/8 log((1+z)/(1-z))"},
    {"psi5", "-1/(4(1+z)^2) - 1/(4(1+z)) + 1/2 + 1/8 log((1+z)/(1-z))", "-1/3 (1/(1+z)^3 - 1)"},
};

// Shears in the imaginary direction.
const ProofCase kCVI[] = {
    {"identity", "log(1+z)", "-log(1-z)"},
    {"z_1mz", "z/(2(1-z)) + 1/4 log((1+z)/(1-z))", "1/(2(1-z)^2) - 1/2"},
    {"z_1pz", "-1/(2(1+z)^2) + 1/2", "z/(2(1+z)) + 1/4 log((1+z)/(1-z))"},
    {"z_1mz2", nullptr, nullptr},
    {"phi2", "5/8 log(1+z) - 1/8 log(1-z) + z/(4(1-z))", "1/(4(1-z)^2) - 1/2 log(1-z) - 1/4"},
    {"psi2", "-1/(4(1+z)^2) + 1/2 log(1+z) + 1/4", "1/8 log(1+z) - 5/8 log(1-z) + z/(4(1+z))"},
    {"phi3", "-1/(8(1+z)^2) + 1/(8(1-z)) - 1/16 log(1-z) + 9/16 log(1+z)",
     "1/(8(1-z)^2) - 1/(8(1+z)) + 1/16 log(1+z) - 9/16 log(1-z)"},
    {"phi4", "1/16 log((1+z)/(1-z)) + 1/(8(1-z)) - 3/(8(1+z)^2) + 1/4",
     "3/16 log((1+z)/(1-z)) + 1/(8(1-z)^2) - 3/(8(1+z)) + 1/4"},
    {"psi4", "3/16 log((1+z)/(1-z)) - 1/(8(1+z)^2) + 3/(8(1-z)) - 1/4",
     "1/16 log((1+z)/(1-z)) + 3/(8(1-z)^2) - 1/(8(1+z)) - 1/4"},
};

// Proof outputs with half-integer coefficients: (shape, omega sign).
bool cv1_half_integer(std::string_view shape, int sign) {
  return (shape == "z_1mz" && sign > 0) || (shape == "z_1pz" && sign < 0) || (shape == "koebe" && sign < 0) ||
         (shape == "koebe_neg" && sign > 0) || (shape == "phi1" && sign > 0) || (shape == "psi1" && sign < 0);
}

bool cvi_half_integer(std::string_view shape, int sign) {
  return (shape == "z_1mz" && sign < 0) || (shape == "z_1pz" && sign > 0);
}

const AnalyticExpr& shape_expr(std::string_view id) {
  static const std::map<std::string, AnalyticExpr, std::less<>> shapes = [] {
    std::map<std::string, AnalyticExpr, std::less<>> m;
    for (const Shape& s : kSZ) m.emplace(s.id, parse_expr(s.formula));
    for (const Shape& s : kT1) m.emplace(s.id, parse_expr(s.formula));
    for (const Shape& s : kT2) m.emplace(s.id, parse_expr(s.formula));
    return m;
  }();
  return shapes.find(id)->second;
}

const char* shape_formula(std::string_view id) {
  for (const Shape& s : kSZ) {
    if (id == s.id) return s.formula;
  }
  for (const Shape& s : kT1) {
    if (id == s.id) return s.formula;
  }
  return "";
}

QuadSurd qs(long an, long ad, long bn = 0, long bd = 1) { return {Rational(an, ad), Rational(bn, bd)}; }

BoundaryDescriptor slit(std::vector<QuadSurd> params, std::string note) {
  return {BoundaryDescriptor::Kind::SlitLines, std::move(params), std::move(note)};
}

FlagSet conformal_flags(std::string_view id) {
  FlagSet f;
  const bool in_sz = [&] {
    for (const Shape& s : kSZ) {
      if (id == s.id) return true;
    }
    return false;
  }();
  f.integer_coeffs = in_sz;
  f.half_integer_coeffs = true;
  if (in_sz) {
    f.starlike = true;
    const bool convex = id == "identity" || id == "z_1mz" || id == "z_1pz";
    f.cv_real = id != "z_1mz2";
    f.cv_imag = convex || id == "z_1mz2";
  } else if (id == "f_plus" || id == "f_minus") {
    f.cv_real = false;
    f.cv_imag = false;
  } else {
    const bool both = id == "phi2" || id == "psi2";
    const bool imag_only = id == "phi3" || id == "phi4" || id == "psi4";
    f.cv_real = !imag_only;
    f.cv_imag = both || imag_only;
  }

  if (id == "z_1pz2") f.boundary = slit({qs(1, 2)}, "y = 0, |x| >= 1/2");
  if (id == "z_1mz2") f.boundary = slit({qs(1, 2)}, "x = 0, |y| >= 1/2");
  if (id == "koebe") f.boundary = slit({qs(-1, 4)}, "y = 0, x <= -1/4");
  if (id == "koebe_neg") f.boundary = slit({qs(1, 4)}, "y = 0, x >= 1/4");
  if (id == "z_1mzz2") f.boundary = slit({qs(-1, 3), qs(1, 1)}, "y = 0, x <= -1/3 and x >= 1");
  if (id == "z_1pzz2") f.boundary = slit({qs(1, 3), qs(-1, 1)}, "y = 0, x >= 1/3 and x <= -1");
  if (id == "phi3") {
    f.boundary = BoundaryDescriptor{BoundaryDescriptor::Kind::Curve, {qs(1, 2), qs(1, 4)},
                                    "cos t/2 + i (sin t/2 + 1/(4 sin t))"};
  }
  if (id == "phi4") f.boundary = slit({qs(1, 4), qs(0, 1, 1, 4)}, "x = 1/4, |y| >= sqrt(3)/4");
  if (id == "psi4") f.boundary = slit({qs(-1, 4), qs(0, 1, 1, 4)}, "x = -1/4, |y| >= sqrt(3)/4");
  if (id == "phi5") {
    f.boundary = BoundaryDescriptor{BoundaryDescriptor::Kind::Parabola, {qs(8, 1), qs(16, 1), qs(3, 1)},
                                    "8u + 16v^2 + 3 = 0"};
  }
  return f;
}

CatalogEntry conformal(std::string id, std::string_view shape, Family family) {
  CatalogEntry e;
  e.id = std::move(id);
  e.family = family;
  e.formula = [&] {
    for (const Shape& s : kT2) {
      if (shape == s.id) return std::string(s.formula);
    }
    return std::string(shape_formula(shape));
  }();
  e.h = shape_expr(shape);
  e.g = AnalyticExpr{};
  e.expected = conformal_flags(shape);
  return e;
}

AnalyticExpr plus_z() { return parse_expr("z"); }
AnalyticExpr minus_z() { return parse_expr("-z"); }

CatalogEntry harmonic(std::string id, Family family, std::string formula, const char* h, const char* g, int sign,
                      bool cv_imag) {
  CatalogEntry e;
  e.id = std::move(id);
  e.family = family;
  e.formula = std::move(formula);
  e.h = parse_expr(h);
  e.g = parse_expr(g);
  e.omega = sign > 0 ? plus_z() : minus_z();
  e.expected.half_integer_coeffs = true;
  e.expected.cv_real = family == Family::T4 ? std::optional<bool>(true) : std::nullopt;
  e.expected.cv_imag = cv_imag;
  return e;
}

void add_proof_cases(std::vector<CatalogEntry>& out, std::span<const ProofCase> cases, Axis axis) {
  const char* prefix = axis == Axis::Real ? "cv1_" : "cvi_";
  int n = 0;
  for (const ProofCase& c : cases) {
    for (int sign : {+1, -1}) {
      ++n;
      CatalogEntry e;
      e.id = std::string(prefix) + (n < 10 ? "0" : "") + std::to_string(n);
      e.family = axis == Axis::Real ? Family::PROOF_CV1 : Family::PROOF_CVI;
      e.source = shape_expr(c.shape);
      e.shear_axis = axis;
      e.omega = sign > 0 ? plus_z() : minus_z();
      e.formula = std::string(axis == Axis::Real ? "shear_real(" : "shear_imag(") + shape_formula(c.shape) +
                  (sign > 0 ? ", z)" : ", -z)");
      const char* h = sign > 0 ? c.h_plus : c.h_minus;
      const char* g = sign > 0 ? c.g_plus : c.g_minus;
      if (h != nullptr) {
        e.h = parse_expr(h);
        if (g != nullptr) {
          e.g = parse_expr(g);
        } else {
          e.g = axis == Axis::Real ? *e.h - *e.source : *e.source - *e.h;
        }
      }
      const bool half = axis == Axis::Real ? cv1_half_integer(c.shape, sign) : cvi_half_integer(c.shape, sign);
      e.expected.half_integer_coeffs = half;
      if (axis == Axis::Real) {
        e.expected.cv_real = true;
      } else {
        e.expected.cv_imag = true;
      }
      out.push_back(std::move(e));
    }
  }
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (const Shape& s : kSZ) out.push_back(conformal(s.id, s.id, Family::S_Z));
  for (const Shape& s : kT1) out.push_back(conformal(s.id, s.id, Family::T1));
  for (const Shape& s : kT2) out.push_back(conformal(s.id, s.id, Family::T2));
  for (const Shape& s : kSZ) {
    if (std::string_view(s.id) != "z_1mz2") out.push_back(conformal(std::string("s1_") + s.id, s.id, Family::S1));
  }
  for (const char* id : {"phi1", "psi1", "phi2", "psi2", "psi3", "phi5", "psi5"}) {
    out.push_back(conformal(std::string("t3_") + id, id, Family::T3));
  }
  for (const char* id : {"identity", "z_1mz", "z_1pz", "z_1mz2", "phi2", "psi2", "phi3", "phi4", "psi4"}) {
    out.push_back(conformal(std::string("t5_") + id, id, Family::T5));
  }

  // k = z/(1-z)^2, l = z/(1-z); k-, l- the reflected versions.
  out.push_back(harmonic("f3_cv1", Family::T4, "Re(z/(1-z)^2) + i Im(z/(1-z))", "1/2 (z/(1-z)^2 + z/(1-z))",
                         "1/2 (z/(1-z)^2 - z/(1-z))", +1, false));
  out.back().expected.starlike = false;
  out.push_back(harmonic("f6_cv1", Family::T4, "Re(z/(1+z)^2) + i Im(z/(1+z))", "1/2 (z/(1+z)^2 + z/(1+z))",
                         "1/2 (z/(1+z)^2 - z/(1+z))", -1, false));
  out.push_back(harmonic("f9_cv1", Family::T4, "Re(z/(1-z)) + i Im(z/(1-z)^2)", "1/2 (z/(1-z) + z/(1-z)^2)",
                         "1/2 (z/(1-z) - z/(1-z)^2)", -1, true));
  out.push_back(harmonic("f11_cv1", Family::T4, "Re(z/(1+z)) + i Im(z/(1+z)^2)", "1/2 (z/(1+z) + z/(1+z)^2)",
                         "1/2 (z/(1+z) - z/(1+z)^2)", +1, true));
  out.push_back(harmonic("f17_cv1", Family::T4, "z + conj(z^2/2)", "z", "z^2/2", +1, false));
  out.push_back(harmonic("f20_cv1", Family::T4, "z - conj(z^2/2)", "z", "-z^2/2", -1, false));

  out.push_back(harmonic("f4_cvi", Family::T6, "Re(z/(1-z)) + i Im(z/(1-z)^2)", "1/2 (z/(1-z) + z/(1-z)^2)",
                         "1/2 (z/(1-z) - z/(1-z)^2)", -1, true));
  out.push_back(harmonic("f5_cvi", Family::T6, "Re(z/(1+z)) + i Im(z/(1+z)^2)", "1/2 (z/(1+z) + z/(1+z)^2)",
                         "1/2 (z/(1+z) - z/(1+z)^2)", +1, true));

  add_proof_cases(out, kCV1, Axis::Real);
  add_proof_cases(out, kCVI, Axis::Imag);
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::S_Z: return "S_Z";
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::T3: return "T3";
    case Family::T4: return "T4";
    case Family::T5: return "T5";
    case Family::T6: return "T6";
    case Family::S1: return "S1";
    case Family::PROOF_CV1: return "PROOF_CV1";
    case Family::PROOF_CVI: return "PROOF_CVI";
  }
  return "?";
}

std::string_view boundary_kind_name(BoundaryDescriptor::Kind k) {
  switch (k) {
    case BoundaryDescriptor::Kind::SlitLines: return "slit_lines";
    case BoundaryDescriptor::Kind::Parabola: return "parabola";
    case BoundaryDescriptor::Kind::Cusped: return "cusped";
    case BoundaryDescriptor::Kind::Curve: return "curve";
  }
  return "curve";
}

double QuadSurd::value() const { return a.to_double() + b.to_double() * std::sqrt(3.0); }

std::string QuadSurd::str() const {
  if (b.is_zero()) return a.str();
  const std::string surd = (b == Rational(1) ? "" : b.str() + "*") + "sqrt(3)";
  return a.is_zero() ? surd : a.str() + "+" + surd;
}

const std::vector<CatalogEntry>& catalog_build() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view id) {
  if (id == "harmonic_koebe") id = "cv1_09";
  for (const CatalogEntry& e : catalog_build()) {
    if (e.id == id) return e;
  }
  throw Error(Errc::UnknownId, "no catalog entry named '" + std::string(id) + "'");
}

std::vector<const CatalogEntry*> catalog_family(Family f) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog_build()) {
    if (e.family == f) out.push_back(&e);
  }
  return out;
}

HarmonicMap entry_map(const CatalogEntry& e, int order) {
  if (e.source) {
    HarmonicMap F = *e.shear_axis == Axis::Real ? shear_real(*e.source, *e.omega, order)
                                                : shear_imag(*e.source, *e.omega, order);
    if (e.h) F = with_closed_form(std::move(F), *e.h, *e.g);
    return F;
  }
  if (e.omega) return make_harmonic(*e.h, *e.g, *e.omega, order);
  return make_conformal(*e.h, order);
}

const AnalyticExpr& entry_function(const CatalogEntry& e) {
  if (e.harmonic() || !e.h) throw Error(Errc::Unsupported, "entry '" + e.id + "' is not a conformal map");
  return *e.h;
}

}  // namespace atlas
