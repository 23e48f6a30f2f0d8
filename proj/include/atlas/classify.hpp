#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "atlas/analytic.hpp"
#include "atlas/grid.hpp"
#include "atlas/rational.hpp"
#include "atlas/series.hpp"
#include "atlas/shear.hpp"

namespace atlas {

enum class CoeffClass { Integer, HalfInteger, Neither };

std::string_view coeff_class_name(CoeffClass c);

struct CoeffViolation {
  int index;
  GaussRational value;
};

struct CoeffClassReport {
  CoeffClass cls = CoeffClass::Integer;
  /// First coefficient that is not a real half-integer; set iff cls == Neither.
  std::optional<CoeffViolation> first_violation;

  bool half_integer() const { return cls != CoeffClass::Neither; }
};

/// Exact classification of c_0..c_upto.
CoeffClassReport coeff_class(const TruncSeries& s, int upto);

/// Reports for h and g. F has half-integer coefficients iff both do.
std::pair<CoeffClassReport, CoeffClassReport> classify_harmonic(const HarmonicMap& F, int upto);
bool is_half_integer_map(const HarmonicMap& F, int upto);

/// |b_2|^2, exact.
Rational b2_bound_check(const HarmonicMap& F);

/// min over the grid of Re{g'/phi'} + 1/2.
double halfplane_subordination_margin(const AnalyticExpr& g, const AnalyticExpr& phi, const Grid& grid);

/// max over 1 <= n <= N of |c_n|^2, exact.
Rational rogosinski_coeff_bound(const TruncSeries& s);

}  // namespace atlas
