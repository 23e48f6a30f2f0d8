#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "atlas/catalog.hpp"
#include "atlas/classify.hpp"
#include "atlas/geomtest.hpp"
#include "atlas/grid.hpp"

namespace atlas {

struct VerifyConfig {
  int order = kDefaultOrder;
  int grid_radii = 64;
  int grid_angles = 256;
  double tol = kMarginTol;
  double r_max = 0.999;

  Grid grid() const { return Grid::uniform(grid_radii, grid_angles, r_max); }
};

/// key = value lines; '#' starts a comment. Keys: order, grid.radii,
/// grid.angles, tol, r_max. Throws Config on unknown keys or bad values.
void apply_config_text(VerifyConfig& cfg, std::string_view text);
void validate(const VerifyConfig& cfg);

enum class Theorem { T31, T32, T41, T42, LEM42, REMARK };
std::string_view theorem_name(Theorem t);
/// Throws Config for unknown names.
Theorem parse_theorem(std::string_view name);

struct VerifyRow {
  std::string id;
  nlohmann::json computed;
  nlohmann::json expected;
  bool match = false;
  /// Claims listed for transparency but not checked numerically.
  bool asserted = false;
};

struct VerifyReport {
  Theorem theorem;
  std::vector<VerifyRow> rows;  // sorted by id
  int total = 0;                // non-asserted rows
  int matched = 0;

  bool ok() const { return matched == total; }
};

VerifyReport run_verify(Theorem t, const VerifyConfig& cfg);

nlohmann::json to_json(const VerifyReport& r, const VerifyConfig& cfg);
nlohmann::json to_json(const CoeffClassReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CatalogEntry& e);
/// Versioned export of the whole catalog.
nlohmann::json catalog_json();

}  // namespace atlas
