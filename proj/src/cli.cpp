#include "atlas/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atlas/catalog.hpp"
#include "atlas/classify.hpp"
#include "atlas/error.hpp"
#include "atlas/render.hpp"
#include "atlas/shear.hpp"
#include "atlas/verify.hpp"

namespace atlas {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A catalog id or an expression in infix or term syntax.
struct Subject {
  std::string label;
  const CatalogEntry* entry = nullptr;
  std::optional<AnalyticExpr> expr;

  HarmonicMap map(int order) const { return entry ? entry_map(*entry, order) : make_conformal(*expr, order); }
  AnalyticExpr conformal() const {
    if (!entry) return *expr;
    if (entry->harmonic()) throw Error(Errc::Unsupported, label + " is not analytic");
    return *entry->h;
  }
};

Subject resolve(const std::string& text) {
  for (const CatalogEntry& e : catalog_build()) {
    if (e.id == text) return {text, &e, std::nullopt};
  }
  if (text == "harmonic_koebe") return {text, &catalog_lookup(text), std::nullopt};
  return {text, nullptr, parse_expr(text)};
}

// Bare "-z" and "+z" would otherwise be read as options.
std::vector<std::string> rewrite_sign_args(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a == "-z") a = "(-z)";
    else if (a == "+z") a = "z";
  }
  return args;
}

json coeff_array(const TruncSeries& s, int from) {
  const auto strs = coefficient_strings(s);
  return json(std::vector<std::string>(strs.begin() + from, strs.end()));
}

std::string join(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.get<std::string>();
  }
  return out;
}

// Conformal maps list a_0..a_N; harmonic maps list h and g from n = 1.
json coefficient_table(const HarmonicMap& F) {
  if (F.is_conformal()) return json{{"a", coeff_array(F.h, 0)}, {"start", 0}};
  return json{{"h", coeff_array(F.h, 1)}, {"g", coeff_array(F.g, 1)}, {"start", 1}};
}

void print_table(std::ostream& out, const json& t) {
  if (t.contains("a")) {
    out << "a: " << join(t["a"]) << "\n";
  } else {
    out << "h: " << join(t["h"]) << "\n";
    out << "g: " << join(t["g"]) << "\n";
  }
}

json classification(const HarmonicMap& F, int order) {
  const auto [h, g] = classify_harmonic(F, order);
  const CoeffClass cls = std::max(h.cls, g.cls);
  return json{{"class", coeff_class_name(cls)}, {"h", to_json(h)}, {"g", to_json(g)}};
}

// Catalog entries with the same (h, g) series, named families first.
std::vector<std::string> catalog_matches(const HarmonicMap& F) {
  std::vector<std::string> named, proof;
  for (const CatalogEntry& e : catalog_build()) {
    if (e.harmonic() == F.is_conformal()) continue;
    const HarmonicMap M = entry_map(e, F.order());
    if (M.h != F.h.truncated(F.order()) || M.g != F.g.truncated(F.order())) continue;
    const bool is_proof = e.family == Family::PROOF_CV1 || e.family == Family::PROOF_CVI;
    (is_proof ? proof : named).push_back(e.id);
  }
  named.insert(named.end(), proof.begin(), proof.end());
  return named;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Config, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catalog, shear constructions and coefficient checks for harmonic mappings", "harmonic_atlas"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON on stdout");

  auto* list = app.add_subcommand("list", "List catalog entries");
  std::string family;
  list->add_option("--family", family, "Only this family");

  auto* expand = app.add_subcommand("expand", "Exact Taylor coefficients");
  std::string expand_subject;
  int expand_order = 10;
  expand->add_option("subject", expand_subject, "Catalog id or expression")->required();
  expand->add_option("order,--order", expand_order, "Highest power");

  auto* shear = app.add_subcommand("shear", "Shear a conformal map along an axis");
  std::string shear_phi, shear_omega, shear_axis;
  int shear_order = kDefaultOrder;
  shear->add_option("phi", shear_phi, "Catalog id or expression")->required();
  shear->add_option("omega", shear_omega, "Dilatation: +z, -z or an expression")->required();
  shear->add_option("axis", shear_axis, "real or imag")->required()->check(CLI::IsMember({"real", "imag"}));
  shear->add_option("--order", shear_order, "Series order");

  auto* classify = app.add_subcommand("classify", "Coefficient class of a catalog entry or expression");
  std::string classify_subject;
  int classify_order = kDefaultOrder;
  classify->add_option("subject", classify_subject, "Catalog id or expression")->required();
  classify->add_option("--order", classify_order, "Series order");

  auto* verify = app.add_subcommand("verify", "Reproduce a theorem table");
  std::string theorem, config_path;
  std::optional<int> v_order, v_radii, v_angles;
  std::optional<double> v_tol, v_rmax;
  verify->add_option("theorem", theorem, "T31 | T32 | T41 | T42 | LEM42 | REMARK")->required();
  verify->add_option("--config", config_path, "key = value config file");
  verify->add_option("--order", v_order, "Series order");
  verify->add_option("--grid-radii", v_radii, "Grid radii");
  verify->add_option("--grid-angles", v_angles, "Grid angles");
  verify->add_option("--tol", v_tol, "Margin tolerance");
  verify->add_option("--r-max", v_rmax, "Outer grid radius");

  auto* render = app.add_subcommand("render", "Write an SVG image of the disk under a catalog map");
  std::string render_id, render_path;
  RenderOptions ropts;
  render->add_option("id", render_id, "Catalog id")->required();
  render->add_option("out", render_path, "Output SVG path")->required();
  render->add_option("--circles", ropts.circles)->check(CLI::PositiveNumber);
  render->add_option("--rays", ropts.rays)->check(CLI::PositiveNumber);
  render->add_option("--r-max", ropts.r_max)->check(CLI::Range(0.0, 0.9999));
  render->add_option("--samples", ropts.samples_per_curve)->check(CLI::Range(8, 1000000));

  std::vector<std::string> args = rewrite_sign_args(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list) {
      json entries = json::array();
      for (const CatalogEntry& e : catalog_build()) {
        if (!family.empty() && family_name(e.family) != family) continue;
        entries.push_back(to_json(e));
      }
      if (!family.empty() && entries.empty()) throw Error(Errc::UnknownId, "no family '" + family + "'");
      if (as_json) {
        out << json{{"schema", 1}, {"entries", entries}}.dump(2) << "\n";
      } else {
        for (const auto& e : entries) {
          out << e["id"].get<std::string>() << "\t" << e["family"].get<std::string>() << "\t"
              << e["formula"].get<std::string>() << "\n";
        }
      }
      return kExitOk;
    }

    if (*expand) {
      if (expand_order < 1) throw Error(Errc::Config, "order must be positive");
      const Subject s = resolve(expand_subject);
      const HarmonicMap F = s.map(expand_order);
      json t = coefficient_table(F);
      if (as_json) {
        t["subject"] = s.label;
        t["order"] = expand_order;
        out << t.dump(2) << "\n";
      } else {
        print_table(out, t);
      }
      return kExitOk;
    }

    if (*shear) {
      const Subject s = resolve(shear_phi);
      const AnalyticExpr phi = s.conformal();
      const AnalyticExpr omega = parse_expr(shear_omega);
      const HarmonicMap F = shear_axis == "real" ? shear_real(phi, omega, shear_order)
                                                 : shear_imag(phi, omega, shear_order);
      json r = coefficient_table(F);
      r["classification"] = classification(F, shear_order);
      r["matches"] = catalog_matches(F);
      if (as_json) {
        r["axis"] = shear_axis;
        r["order"] = shear_order;
        out << r.dump(2) << "\n";
      } else {
        print_table(out, r);
        out << "class: " << r["classification"]["class"].get<std::string>() << "\n";
        const auto& m = r["matches"];
        out << "matches: " << (m.empty() ? std::string("none") : join(m)) << "\n";
      }
      return kExitOk;
    }

    if (*classify) {
      const Subject s = resolve(classify_subject);
      const HarmonicMap F = s.map(classify_order);
      json r = classification(F, classify_order);
      if (as_json) {
        r["subject"] = s.label;
        r["order"] = classify_order;
        r["b2_norm"] = b2_bound_check(F).str();
        out << r.dump(2) << "\n";
      } else {
        out << "class: " << r["class"].get<std::string>() << "\n";
        for (const char* part : {"h", "g"}) {
          out << part << ": " << r[part]["class"].get<std::string>();
          if (r[part].contains("first_violation")) {
            const auto& v = r[part]["first_violation"];
            out << " (first violation at n=" << v["index"].get<int>() << ": " << v["value"].get<std::string>()
                << ")";
          }
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyConfig cfg;
      if (config_path.empty()) {
        if (const char* env = std::getenv("HARMONIC_ATLAS_CONFIG"); env && *env) config_path = env;
      }
      if (!config_path.empty()) apply_config_text(cfg, read_file(config_path));
      if (v_order) cfg.order = *v_order;
      if (v_radii) cfg.grid_radii = *v_radii;
      if (v_angles) cfg.grid_angles = *v_angles;
      if (v_tol) cfg.tol = *v_tol;
      if (v_rmax) cfg.r_max = *v_rmax;
      validate(cfg);
      const Theorem t = parse_theorem(theorem);
      const VerifyReport rep = run_verify(t, cfg);
      if (as_json) {
        out << to_json(rep, cfg).dump(2) << "\n";
      } else {
        for (const VerifyRow& row : rep.rows) {
          out << (row.asserted ? "asserted" : row.match ? "ok      " : "MISMATCH") << "  " << row.id << "\n";
        }
        out << theorem_name(t) << ": " << rep.matched << "/" << rep.total << " rows match\n";
      }
      return rep.ok() ? kExitOk : kExitMismatch;
    }

    if (*render) {
      const HarmonicMap F = entry_map(catalog_lookup(render_id));
      const std::string svg = render_svg(F, ropts);
      std::ofstream file(render_path, std::ios::binary);
      if (!file || !(file << svg) || !file.flush()) throw IoError("cannot write '" + render_path + "'");
      if (as_json) out << json{{"id", render_id}, {"path", render_path}, {"bytes", svg.size()}}.dump() << "\n";
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace atlas
