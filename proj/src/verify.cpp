#include "atlas/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

using nlohmann::json;

namespace {

constexpr int kSchema = 1;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw Error(Errc::Config, "bad value '" + value + "' for " + key);
  return out;
}

json coeff_json(const GaussRational& c) { return c.str(); }

struct Ctx {
  const VerifyConfig& cfg;
  Grid grid;
  std::vector<VerifyRow> rows;

  void add(std::string id, json computed, json expected, bool match) {
    rows.push_back({std::move(id), std::move(computed), std::move(expected), match, false});
  }
  void assert_only(std::string id, json claim) {
    rows.push_back({std::move(id), json(nullptr), std::move(claim), true, true});
  }
};

// Convexity in one direction, certified (expected true) or falsified
// (expected false) on the sample.
json direction_evidence(const HarmonicMap& F, const AnalyticExpr* conformal_part, Axis axis, bool expected,
                        const Ctx& ctx, bool& match) {
  json j;
  if (expected) {
    if (conformal_part == nullptr) throw Error(Errc::Unsupported, "no conformal part to certify");
    const auto cert = rz_search(*conformal_part, axis, ctx.grid);
    j["method"] = "rz_search";
    j["certificate"] = cert ? to_json(*cert) : json(nullptr);
    match = cert && cert->margin >= -ctx.cfg.tol;
  } else {
    const ProbeResult p = direction_convexity_probe(F, axis, ctx.cfg.r_max);
    j["method"] = "direction_convexity_probe";
    j["max_crossings"] = p.max_crossings;
    match = !p.convex;
  }
  j["convex"] = match ? expected : !expected;
  return j;
}

void check_directions(Ctx& ctx, const CatalogEntry& e, const AnalyticExpr* conformal_part,
                      std::optional<bool> cv_real, std::optional<bool> cv_imag) {
  const HarmonicMap F = entry_map(e, ctx.cfg.order);
  for (Axis axis : {Axis::Real, Axis::Imag}) {
    const auto& flag = axis == Axis::Real ? cv_real : cv_imag;
    if (!flag) continue;
    bool match = false;
    json computed = direction_evidence(F, conformal_part, axis, *flag, ctx, match);
    ctx.add(e.id + ".cv_" + std::string(axis_name(axis)), std::move(computed), json{{"convex", *flag}}, match);
  }
}

json class_json(const HarmonicMap& F, int order) {
  const auto [h, g] = classify_harmonic(F, order);
  return {{"h", to_json(h)}, {"g", to_json(g)}, {"half_integer", h.half_integer() && g.half_integer()}};
}

bool series_match(const HarmonicMap& a, const HarmonicMap& b) { return a.h == b.h && a.g == b.g; }

// Shared part of T41 and T42: every proof shear is classified, and the
// half-integer outputs must be exactly the harmonic members of `target`.
void check_shears(Ctx& ctx, Family proof, Family target, std::size_t expected_half) {
  std::vector<std::pair<const CatalogEntry*, HarmonicMap>> half;
  const auto cases = catalog_family(proof);
  for (const CatalogEntry* e : cases) {
    const HarmonicMap F = entry_map(*e, ctx.cfg.order);
    json computed = class_json(F, ctx.cfg.order);
    computed["dilatation_identity"] = dilatation_check(F);
    computed["b2_norm"] = b2_bound_check(F).str();
    const bool is_half = computed["half_integer"].get<bool>();
    if (is_half) half.emplace_back(e, F);
    const bool match = is_half == e->expected.half_integer_coeffs && computed["dilatation_identity"].get<bool>();
    ctx.add(e->id + ".class", std::move(computed), json{{"half_integer", e->expected.half_integer_coeffs}}, match);
    const Axis axis = *e->shear_axis;
    ctx.assert_only(e->id + ".cv_" + std::string(axis_name(axis)),
                    json{{"convex", true}, {"reason", "shear of a function convex in this direction"}});
  }

  const auto members = catalog_family(target);
  json matched_ids = json::array();
  bool all_found = half.size() == expected_half;
  for (const auto& [e, F] : half) {
    std::string hit;
    for (const CatalogEntry* m : members) {
      if (series_match(F, entry_map(*m, ctx.cfg.order))) hit = m->id;
    }
    if (hit.empty()) all_found = false;
    matched_ids.push_back(json{{"shear", e->id}, {"catalog", hit}});
  }
  ctx.add("summary.half_integer_shears",
          json{{"cases", cases.size()}, {"half_integer", half.size()}, {"matches", matched_ids}},
          json{{"half_integer", expected_half}, {"family", family_name(target)}}, all_found);
}

void verify_t31(Ctx& ctx) {
  const auto sz = catalog_family(Family::S_Z);
  ctx.add("summary.count_S_Z", json{{"count", sz.size()}}, json{{"count", 9}}, sz.size() == 9);
  for (const CatalogEntry* e : sz) {
    const HarmonicMap F = entry_map(*e, ctx.cfg.order);
    const auto [h, g] = classify_harmonic(F, ctx.cfg.order);
    const bool integer = h.cls == CoeffClass::Integer && g.cls == CoeffClass::Integer;
    ctx.add(e->id + ".integer", json{{"h", to_json(h)}, {"g", to_json(g)}}, json{{"integer", true}}, integer);
    ctx.assert_only(e->id + ".univalent", json{{"univalent", true}});
  }
}

void verify_t32(Ctx& ctx) {
  for (const CatalogEntry* e : catalog_family(Family::S_Z)) {
    check_directions(ctx, *e, &*e->h, e->expected.cv_real, e->expected.cv_imag);
  }
}

void verify_lem42(Ctx& ctx) {
  for (Family f : {Family::T1, Family::T2}) {
    for (const CatalogEntry* e : catalog_family(f)) {
      check_directions(ctx, *e, &*e->h, e->expected.cv_real, e->expected.cv_imag);
    }
  }
}

void verify_t41(Ctx& ctx) {
  const auto s1 = catalog_family(Family::S1);
  const auto t3 = catalog_family(Family::T3);
  const auto t4 = catalog_family(Family::T4);
  const std::size_t total = s1.size() + t3.size() + t4.size();
  ctx.add("summary.count_S1_T3_T4",
          json{{"S1", s1.size()}, {"T3", t3.size()}, {"T4", t4.size()}, {"total", total}},
          json{{"S1", 8}, {"T3", 7}, {"T4", 6}, {"total", 21}},
          s1.size() == 8 && t3.size() == 7 && t4.size() == 6);
  for (const auto* group : {&s1, &t3, &t4}) {
    for (const CatalogEntry* e : *group) {
      const HarmonicMap F = entry_map(*e, ctx.cfg.order);
      json computed = class_json(F, ctx.cfg.order);
      const bool half = computed["half_integer"].get<bool>();
      ctx.add(e->id + ".class", std::move(computed), json{{"half_integer", true}}, half);
      // phi = h - g carries the direction convexity of f.
      const AnalyticExpr phi = e->g ? *e->h - *e->g : *e->h;
      check_directions(ctx, *e, &phi, true, std::nullopt);
      if (e->harmonic()) ctx.assert_only(e->id + ".univalent", json{{"univalent", true}});
    }
  }
  check_shears(ctx, Family::PROOF_CV1, Family::T4, 6);
}

void verify_t42(Ctx& ctx) {
  const auto t5 = catalog_family(Family::T5);
  const auto t6 = catalog_family(Family::T6);
  ctx.add("summary.count_T5_T6", json{{"T5", t5.size()}, {"T6", t6.size()}, {"total", t5.size() + t6.size()}},
          json{{"T5", 9}, {"T6", 2}, {"total", 11}}, t5.size() == 9 && t6.size() == 2);
  for (const auto* group : {&t5, &t6}) {
    for (const CatalogEntry* e : *group) {
      const HarmonicMap F = entry_map(*e, ctx.cfg.order);
      json computed = class_json(F, ctx.cfg.order);
      const bool half = computed["half_integer"].get<bool>();
      ctx.add(e->id + ".class", std::move(computed), json{{"half_integer", true}}, half);
      const AnalyticExpr psi = e->g ? *e->h + *e->g : *e->h;
      check_directions(ctx, *e, &psi, std::nullopt, true);
      if (e->harmonic()) ctx.assert_only(e->id + ".univalent", json{{"univalent", true}});
    }
  }
  check_shears(ctx, Family::PROOF_CVI, Family::T6, 2);
}

void verify_remark(Ctx& ctx) {
  const HarmonicMap f3 = entry_map(catalog_lookup("f3_cv1"), ctx.cfg.order);
  const HarmonicMap f9 = entry_map(catalog_lookup("f9_cv1"), ctx.cfg.order);
  const Certificate m0 = m_theta_check(f3, 0.0, ctx.grid);
  ctx.add("f3_cv1.m_theta_0", to_json(m0), json{{"member", true}}, m0.margin > 0.0);
  const Certificate mpi = m_theta_check(f9, std::numbers::pi, ctx.grid);
  ctx.add("f9_cv1.m_theta_pi", to_json(mpi), json{{"member", true}}, mpi.margin > 0.0);

  // d/dt arg f3(e^{it}) = 2 cos t/(cos 2t - 3) on |t| < pi/2
  constexpr int kPoints = 32;
  const double a = -std::numbers::pi / 2 + 0.1;
  const double b = std::numbers::pi / 2 - 0.1;
  double max_err = 0.0;
  double max_value = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kPoints; ++k) {
    const double t = a + (b - a) * k / (kPoints - 1);
    const double v = starlike_derivative(f3, t, 0.9999);
    max_err = std::max(max_err, std::abs(v - 2 * std::cos(t) / (std::cos(2 * t) - 3)));
    max_value = std::max(max_value, v);
  }
  ctx.add("f3_cv1.starlike", json{{"max_abs_error", max_err}, {"max_value", max_value}, {"points", kPoints}},
          json{{"starlike", false}, {"tolerance", 1e-3}}, max_err <= 1e-3 && max_value < 0.0);
}

}  // namespace

void apply_config_text(VerifyConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::Config, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "order") cfg.order = parse_number<int>(key, value);
    else if (key == "grid.radii") cfg.grid_radii = parse_number<int>(key, value);
    else if (key == "grid.angles") cfg.grid_angles = parse_number<int>(key, value);
    else if (key == "tol") cfg.tol = parse_number<double>(key, value);
    else if (key == "r_max") cfg.r_max = parse_number<double>(key, value);
    else throw Error(Errc::Config, "unknown config key '" + key + "'");
  }
  validate(cfg);
}

void validate(const VerifyConfig& cfg) {
  if (cfg.order < 2) throw Error(Errc::Config, "order must be at least 2");
  if (cfg.grid_radii < 1 || cfg.grid_angles < 1) throw Error(Errc::Config, "grid sizes must be positive");
  if (!(cfg.tol >= 0.0)) throw Error(Errc::Config, "tol must be non-negative");
  if (!(cfg.r_max >= 0.9 && cfg.r_max < 1.0)) throw Error(Errc::Config, "r_max must lie in [0.9, 1)");
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T31: return "T31";
    case Theorem::T32: return "T32";
    case Theorem::T41: return "T41";
    case Theorem::T42: return "T42";
    case Theorem::LEM42: return "LEM42";
    case Theorem::REMARK: return "REMARK";
  }
  return "?";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::T31, Theorem::T32, Theorem::T41, Theorem::T42, Theorem::LEM42, Theorem::REMARK}) {
    if (name == theorem_name(t)) return t;
  }
  throw Error(Errc::Config, "unknown theorem '" + std::string(name) + "' (T31, T32, T41, T42, LEM42, REMARK)");
}

VerifyReport run_verify(Theorem t, const VerifyConfig& cfg) {
  validate(cfg);
  Ctx ctx{cfg, cfg.grid(), {}};
  switch (t) {
    case Theorem::T31: verify_t31(ctx); break;
    case Theorem::T32: verify_t32(ctx); break;
    case Theorem::T41: verify_t41(ctx); break;
    case Theorem::T42: verify_t42(ctx); break;
    case Theorem::LEM42: verify_lem42(ctx); break;
    case Theorem::REMARK: verify_remark(ctx); break;
  }
  VerifyReport r{t, std::move(ctx.rows)};
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const VerifyRow& a, const VerifyRow& b) { return a.id < b.id; });
  for (const VerifyRow& row : r.rows) {
    if (row.asserted) continue;
    ++r.total;
    if (row.match) ++r.matched;
  }
  return r;
}

json to_json(const VerifyReport& r, const VerifyConfig& cfg) {
  json rows = json::array();
  int asserted = 0;
  for (const VerifyRow& row : r.rows) {
    asserted += row.asserted ? 1 : 0;
    rows.push_back(json{{"id", row.id},
                        {"computed", row.computed},
                        {"expected", row.expected},
                        {"match", row.match},
                        {"asserted", row.asserted}});
  }
  return json{{"schema", kSchema},
              {"theorem", theorem_name(r.theorem)},
              {"config",
               {{"order", cfg.order},
                {"grid.radii", cfg.grid_radii},
                {"grid.angles", cfg.grid_angles},
                {"tol", cfg.tol},
                {"r_max", cfg.r_max}}},
              {"rows", rows},
              {"summary", {{"total", r.total}, {"matched", r.matched}, {"asserted", asserted}}}};
}

json to_json(const CoeffClassReport& r) {
  json j{{"class", coeff_class_name(r.cls)}};
  if (r.first_violation) {
    j["first_violation"] = {{"index", r.first_violation->index}, {"value", coeff_json(r.first_violation->value)}};
  }
  return j;
}

json to_json(const Certificate& c) {
  json j{{"kind", cert_kind_name(c.kind)}, {"margin", c.margin}, {"tol", c.tol}, {"holds", c.holds()}};
  if (c.witness) j["witness"] = {c.witness->real(), c.witness->imag()};
  if (c.params) j["params"] = {{"mu", c.params->mu}, {"nu", c.params->nu}};
  return j;
}

json to_json(const CatalogEntry& e) {
  json flags{{"integer_coeffs", e.expected.integer_coeffs}, {"half_integer_coeffs", e.expected.half_integer_coeffs}};
  const auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json("unknown"); };
  flags["cv_real"] = opt(e.expected.cv_real);
  flags["cv_imag"] = opt(e.expected.cv_imag);
  flags["starlike"] = opt(e.expected.starlike);
  if (e.expected.boundary) {
    json params = json::array();
    for (const QuadSurd& q : e.expected.boundary->params) params.push_back(q.str());
    flags["boundary"] = {{"kind", boundary_kind_name(e.expected.boundary->kind)},
                         {"params", params},
                         {"description", e.expected.boundary->note}};
  }
  json j{{"id", e.id}, {"family", family_name(e.family)}, {"formula", e.formula}, {"flags", flags}};
  j["h"] = e.h ? json(to_term_text(*e.h)) : json(nullptr);
  j["g"] = e.g ? json(to_term_text(*e.g)) : json(nullptr);
  j["omega"] = e.omega ? json(to_term_text(*e.omega)) : json(nullptr);
  if (e.source) {
    j["source"] = to_term_text(*e.source);
    j["shear_axis"] = axis_name(*e.shear_axis);
  }
  return j;
}

json catalog_json() {
  json entries = json::array();
  for (const CatalogEntry& e : catalog_build()) entries.push_back(to_json(e));
  return json{{"schema", kSchema}, {"entries", entries}};
}

}  // namespace atlas
