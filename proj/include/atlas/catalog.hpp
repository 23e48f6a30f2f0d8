#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/analytic.hpp"
#include "atlas/geomtest.hpp"
#include "atlas/rational.hpp"
#include "atlas/shear.hpp"

namespace atlas {

enum class Family { S_Z, T1, T2, T3, T4, T5, T6, S1, PROOF_CV1, PROOF_CVI };

std::string_view family_name(Family f);

/// a + b*sqrt(3)
struct QuadSurd {
  Rational a;
  Rational b;
  double value() const;
  std::string str() const;
};

struct BoundaryDescriptor {
  enum class Kind { SlitLines, Parabola, Cusped, Curve };
  Kind kind;
  std::vector<QuadSurd> params;
  std::string note;
};

std::string_view boundary_kind_name(BoundaryDescriptor::Kind k);

/// Expected classification. Optional members are unknown when unset and are
/// never asserted against.
struct FlagSet {
  bool integer_coeffs = false;
  bool half_integer_coeffs = false;
  std::optional<bool> cv_real;
  std::optional<bool> cv_imag;
  std::optional<bool> starlike;
  std::optional<BoundaryDescriptor> boundary;
};

struct CatalogEntry {
  std::string id;
  Family family;
  std::string formula;
  /// Closed forms. Proof entries whose h has no authored closed form leave
  /// both unset and are built by shearing `source`.
  std::optional<AnalyticExpr> h;
  std::optional<AnalyticExpr> g;
  std::optional<AnalyticExpr> omega;
  FlagSet expected;
  /// phi (real axis) or psi (imaginary axis) for proof entries.
  std::optional<AnalyticExpr> source;
  std::optional<Axis> shear_axis;

  bool harmonic() const { return omega.has_value(); }
};

/// All entries, built on first use and shared afterwards.
const std::vector<CatalogEntry>& catalog_build();

/// Throws UnknownId. Accepts the alias "harmonic_koebe".
const CatalogEntry& catalog_lookup(std::string_view id);

std::vector<const CatalogEntry*> catalog_family(Family f);

/// The harmonic map of an entry at the given series order.
HarmonicMap entry_map(const CatalogEntry& e, int order = kDefaultOrder);

/// The analytic function of a conformal entry (h); throws Unsupported for
/// harmonic entries.
const AnalyticExpr& entry_function(const CatalogEntry& e);

}  // namespace atlas
