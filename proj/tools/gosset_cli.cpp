// gosset: radii, spectra, and Coxeter-plane figures of simple root systems.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gosset/chevalley.hpp"
#include "gosset/circle_operator.hpp"
#include "gosset/coxeter_plane.hpp"
#include "gosset/figure_io.hpp"
#include "gosset/lie_type.hpp"
#include "gosset/root_system.hpp"
#include "gosset/spectrum.hpp"
#include "gosset/structure_constants.hpp"
#include "gosset/verify.hpp"

namespace {

using nlohmann::json;
using namespace gosset;

constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2, kIo = 3;

std::string num(double v, const char* f = "%.15g") {
  char b[64];
  std::snprintf(b, sizeof(b), f, v);
  return b;
}

std::optional<roots::LieType> parse_admissible(const std::string& s, std::string& err) {
  auto t = roots::parse_lie_type(s);
  if (!t) {
    err = "not a recognizable type name: '" + s + "' (expected family letter A..G plus rank)";
    return std::nullopt;
  }
  std::string reason;
  if (!roots::admissible(*t, &reason)) {
    err = reason;
    return std::nullopt;
  }
  return t;
}

// Flag beats environment beats default; the open interval (0, 1e-2) is the
// valid range.
int resolve_tolerance(bool flag_given, double flag_value, double& out) {
  out = 1e-8;
  if (const char* env = std::getenv("GOSSET_TOLERANCE"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      std::cerr << "error: GOSSET_TOLERANCE is not a number: '" << env << "'\n";
      return kUsage;
    }
    out = v;
  }
  if (flag_given) out = flag_value;
  if (!(out > 0 && out < 1e-2)) {
    std::cerr << "error: tolerance must lie in (0, 1e-2), got " << num(out) << "\n";
    return kUsage;
  }
  return kOk;
}

int write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kIo;
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kIo;
  }
  return kOk;
}

struct RadiiComputation {
  roots::RootSystem rs;
  roots::HighestRootData hr;
  roots::KillingData kd;
  radii::CircleOperator op;
  radii::RadiiReport rr;
  radii::CharPolyReport cp;
};

RadiiComputation compute_radii(const roots::LieType& t) {
  RadiiComputation c;
  c.rs = roots::build_root_system(t);
  c.hr = roots::highest_root(c.rs);
  c.kd = roots::killing_gram(c.rs, c.hr);
  c.op = radii::build_circle_operator(c.rs, c.hr, c.kd);
  c.rr = radii::radii_report(c.op);
  c.cp = radii::char_poly(c.op);
  return c;
}

// Exact fraction when the eigenvalue of the unscaled operator is rational,
// otherwise its decimal expansion.
std::string eigenvalue_string(const RadiiComputation& c, int i) {
  const double lam = c.rr.eigenvalues[i] * c.hr.h / 2.0;
  const double scaled = to_double(c.cp.scale_c) * lam;
  if (auto ex = radii::exact_eigenvalue(c.cp, scaled)) return fraction_string(*ex / c.cp.scale_c);
  return num(lam);
}

int cmd_radii(const std::string& type_str, const std::string& format, const std::string& out_path) {
  std::string err;
  auto t = parse_admissible(type_str, err);
  if (!t) {
    std::cerr << "error: " << err << "\n";
    return kUsage;
  }
  const RadiiComputation c = compute_radii(*t);
  const int l = c.rs.rank;

  // multiplicities holds one run length per distinct radius; spread it out
  // so each row carries the size of its run
  std::vector<int> mult(l);
  for (int i = 0, row = 0; i < static_cast<int>(c.rr.multiplicities.size()); ++i)
    for (int k = 0; k < c.rr.multiplicities[i]; ++k) mult[row++] = c.rr.multiplicities[i];

  std::ostringstream os;
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < l; ++i) {
      rows.push_back({{"eigenvalue_a", eigenvalue_string(c, i)},
                      {"radius", c.rr.radii[i]},
                      {"normalized", c.rr.normalized[i]},
                      {"integer_part", c.rr.integer_parts[i]},
                      {"multiplicity", mult[i]}});
    }
    json j = {{"type", t->name()}, {"h", c.hr.h}, {"rows", rows}};
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "eigenvalue_a,radius,normalized,integer_part,multiplicity\n";
    for (int i = 0; i < l; ++i)
      os << eigenvalue_string(c, i) << "," << num(c.rr.radii[i]) << "," << num(c.rr.normalized[i])
         << "," << c.rr.integer_parts[i] << "," << mult[i] << "\n";
  } else {
    os << t->name() << ": " << l << " circle radii, h = " << c.hr.h << "\n";
    os << "  eigenvalue(A)          radius(2/h A)        normalized    integer\n";
    for (int i = 0; i < l; ++i) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %-22s %-20.15f %12.6f %8lld\n",
                    eigenvalue_string(c, i).c_str(), c.rr.radii[i], c.rr.normalized[i],
                    static_cast<long long>(c.rr.integer_parts[i]));
      os << line;
    }
  }
  return write_output(os.str(), out_path);
}

void print_verify_text(const verify::VerifyReport& rep, std::ostream& os) {
  os << rep.type.name() << ": " << rep.checks.size() << " checks\n";
  for (const auto& c : rep.checks) {
    char line[512];
    std::snprintf(line, sizeof(line), "  [%s] %-24s %-12.4g %s\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.value, c.detail.c_str());
    os << line;
  }
  os << rep.type.name() << ": " << (rep.passed() ? "PASS" : "FAIL")
     << ", max relative discrepancy " << num(rep.max_relative_discrepancy, "%.3e") << "\n";
}

json verify_json(const verify::VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"detail", c.detail}});
  return {{"type", rep.type.name()},
          {"h", rep.h},
          {"passed", rep.passed()},
          {"max_relative_discrepancy", rep.max_relative_discrepancy},
          {"checks", checks}};
}

int cmd_verify(const std::string& type_str, bool all, bool flag_given, double flag_tol,
               std::uint64_t seed, const std::string& format, const std::string& out_path) {
  double tol = 1e-8;
  if (int rc = resolve_tolerance(flag_given, flag_tol, tol); rc != kOk) return rc;

  std::vector<roots::LieType> types;
  if (all) {
    types = roots::standard_sweep();
  } else {
    std::string err;
    auto t = parse_admissible(type_str, err);
    if (!t) {
      std::cerr << "error: " << err << "\n";
      return kUsage;
    }
    types.push_back(*t);
  }

  verify::VerifyOptions vo;
  vo.tolerance = tol;
  vo.seed = seed;

  std::vector<verify::VerifyReport> reports(types.size());
  if (types.size() > 1) {
    std::vector<std::future<verify::VerifyReport>> futs;
    futs.reserve(types.size());
    for (const auto& t : types)
      futs.push_back(std::async(std::launch::async, [t, vo] { return verify::run_verify(t, vo); }));
    for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
  } else {
    reports[0] = verify::run_verify(types[0], vo);
  }

  bool all_pass = true;
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(verify_json(rep));
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    os << "type,check,passed,value\n";
    for (const auto& rep : reports)
      for (const auto& c : rep.checks)
        os << rep.type.name() << "," << c.name << "," << (c.passed ? 1 : 0) << "," << num(c.value, "%.6g")
           << "\n";
  } else {
    for (const auto& rep : reports) print_verify_text(rep, os);
    if (all) {
      int passed = 0;
      for (const auto& rep : reports) passed += rep.passed() ? 1 : 0;
      os << "sweep: " << passed << "/" << reports.size() << " types passed\n";
    }
  }
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.passed();
    // Wall time goes to stderr so stdout stays byte-identical between runs.
    std::cerr << rep.type.name() << ": " << num(rep.wall_ms, "%.1f") << " ms\n";
  }
  if (int rc = write_output(os.str(), out_path); rc != kOk) return rc;
  return all_pass ? kOk : kVerifyFail;
}

int cmd_project(const std::string& type_str, const std::string& format, const std::string& out_path,
                const std::string& edge_mode, int exponent, const std::string& palette_csv,
                std::uint64_t seed) {
  std::string err;
  auto t = parse_admissible(type_str, err);
  if (!t) {
    std::cerr << "error: " << err << "\n";
    return kUsage;
  }
  if (out_path.empty()) {
    std::cerr << "error: project requires --out\n";
    return kUsage;
  }
  coxplane::ProjectOptions po;
  if (edge_mode == "none") {
    po.edge_mode = coxplane::EdgeMode::none;
  } else if (edge_mode == "polytope") {
    po.edge_mode = coxplane::EdgeMode::polytope;
  } else {
    std::cerr << "error: --edges must be none or polytope\n";
    return kUsage;
  }
  po.exponent = exponent;

  auto rs = roots::build_root_system(*t);
  auto hr = roots::highest_root(rs);
  auto kd = roots::killing_gram(rs, hr);
  auto sc = apposition::build_structure_constants(rs, hr, kd, seed);
  auto ce = apposition::build_cyclic_element(sc);
  auto sr = apposition::spectrum(sc, ce);
  coxplane::FigureSpec fig;
  try {
    fig = coxplane::make_figure(sc, sr, po);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string content;
  if (format == "csv") {
    content = coxplane::emit_csv(fig);
  } else if (format == "json") {
    json pts = json::array();
    for (const auto& p : fig.points)
      pts.push_back({{"x", p.x},
                     {"y", p.y},
                     {"class_index", p.class_index},
                     {"re_nu", p.nu.real()},
                     {"im_nu", p.nu.imag()}});
    json edges = json::array();
    for (auto [a, b] : fig.edges) edges.push_back({a, b});
    json j = {{"type", t->name()},       {"h", fig.h},
              {"exponent", fig.exponent}, {"circle_radii", fig.circle_radii},
              {"points", pts},           {"edges", edges}};
    content = j.dump(2) + "\n";
  } else {
    coxplane::SvgOptions so;
    if (!palette_csv.empty()) {
      std::stringstream ss(palette_csv);
      std::string color;
      while (std::getline(ss, color, ','))
        if (!color.empty()) so.palette.push_back(color);
    }
    content = coxplane::emit_svg(fig, so);
  }
  return write_output(content, out_path);
}

int cmd_charpoly(const std::string& type_str, const std::string& format, const std::string& out_path) {
  std::string err;
  auto t = parse_admissible(type_str, err);
  if (!t) {
    std::cerr << "error: " << err << "\n";
    return kUsage;
  }
  const RadiiComputation c = compute_radii(*t);
  const bool e8 = *t == roots::LieType{'E', 8};
  const bool ok = !e8 || (c.cp.integral && c.cp.factorization_verified);

  std::ostringstream os;
  auto poly_strings = [](const std::vector<Rational>& tail) {
    std::vector<std::string> out{"1"};
    for (const auto& v : tail) out.push_back(fraction_string(v));
    return out;
  };
  if (format == "json") {
    json j = {{"type", t->name()},
              {"scale_c", fraction_string(c.cp.scale_c)},
              {"coefficients", poly_strings(c.cp.coefficients)},
              {"integral", c.cp.integral},
              {"factorization_verified", c.cp.factorization_verified}};
    json factors = json::array();
    for (const auto& f : c.cp.factors) {
      json row = json::array();
      for (const auto& v : f) row.push_back(fraction_string(v));
      factors.push_back(row);
    }
    j["factors"] = factors;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "kind,coefficients\n";
    auto emit_row = [&os](const std::string& kind, const std::vector<std::string>& cs) {
      os << kind << ",";
      for (size_t i = 0; i < cs.size(); ++i) os << (i ? " " : "") << cs[i];
      os << "\n";
    };
    emit_row("charpoly", poly_strings(c.cp.coefficients));
    for (size_t i = 0; i < c.cp.factors.size(); ++i) {
      std::vector<std::string> row;
      for (const auto& v : c.cp.factors[i]) row.push_back(fraction_string(v));
      emit_row("factor" + std::to_string(i + 1), row);
    }
  } else {
    os << t->name() << ": det(xI - cA), c = " << fraction_string(c.cp.scale_c) << "\n";
    os << "  coefficients (descending powers):";
    for (const auto& s : poly_strings(c.cp.coefficients)) os << " " << s;
    os << "\n";
    for (size_t i = 0; i < c.cp.factors.size(); ++i) {
      os << "  factor " << (i + 1) << ":";
      for (const auto& v : c.cp.factors[i]) os << " " << fraction_string(v);
      os << "\n";
    }
    if (e8)
      os << "  quartic factorization verified: " << (c.cp.factorization_verified ? "yes" : "NO") << "\n";
  }
  if (int rc = write_output(os.str(), out_path); rc != kOk) return rc;
  return ok ? kOk : kVerifyFail;
}

int cmd_masses(const std::string& type_str, const std::string& format, const std::string& out_path) {
  std::string err;
  auto t = parse_admissible(type_str, err);
  if (!t) {
    std::cerr << "error: " << err << "\n";
    return kUsage;
  }
  if (!(*t == roots::LieType{'E', 8})) {
    std::cerr << "error: masses is defined for E8 only\n";
    return kUsage;
  }
  const RadiiComputation c = compute_radii(*t);
  auto pairs = radii::golden_pairs(c.rr, c.cp, 1e-9);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

  bool ok = pairs.size() == 4;
  std::vector<bool> used(8, false);
  for (const auto& p : pairs) {
    ok = ok && std::abs(p.ratio / golden - 1.0) <= 1e-9;
    if (p.lower >= 0 && p.lower < 8) used[p.lower] = true;
    if (p.upper >= 0 && p.upper < 8) used[p.upper] = true;
    ok = ok && p.lower_factor != p.upper_factor && p.lower_factor >= 0 && p.upper_factor >= 0;
  }
  for (bool u : used) ok = ok && u;

  std::ostringstream os;
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < 8; ++i)
      rows.push_back({{"normalized", c.rr.normalized[i]},
                      {"integer_part", c.rr.integer_parts[i]},
                      {"radius", c.rr.radii[i]}});
    json jp = json::array();
    for (const auto& p : pairs)
      jp.push_back({{"lower", p.lower},
                    {"upper", p.upper},
                    {"ratio", p.ratio},
                    {"residual", std::abs(p.ratio / golden - 1.0)},
                    {"lower_factor", p.lower_factor},
                    {"upper_factor", p.upper_factor}});
    json j = {{"type", "E8"}, {"golden", golden}, {"rows", rows}, {"pairs", jp}, {"passed", ok}};
    os << j.dump(2) << "\n";
  } else {
    os << "E8 mass ratios: R = (1+sqrt 5)/2 = " << num(golden) << "\n";
    os << "  normalized radii:";
    for (int i = 0; i < 8; ++i) os << " " << c.rr.integer_parts[i];
    os << "\n";
    for (const auto& p : pairs) {
      const double res = std::abs(p.ratio / golden - 1.0);
      os << "  " << c.rr.integer_parts[p.lower] << " x R   -> " << c.rr.integer_parts[p.upper]
         << "   residual " << num(res, "%.3e") << "   (factor " << p.lower_factor << " -> factor "
         << p.upper_factor << ")\n";
      os << "  " << c.rr.integer_parts[p.upper] << " x 1/R -> " << c.rr.integer_parts[p.lower]
         << "   residual " << num(res, "%.3e") << "\n";
    }
    os << "pairing " << (ok ? "complete: 4 pairs cover all 8 circles across the two quartic families"
                            : "INCOMPLETE") << "\n";
  }
  if (int rc = write_output(os.str(), out_path); rc != kOk) return rc;
  return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gosset-circle radii, adjoint spectra, and Coxeter-plane figures of simple root systems"};
  app.require_subcommand(1);

  std::string type_str, format = "text", out_path, edge_mode = "none", palette;
  double tolerance = 1e-8;
  std::uint64_t seed = 0x67055e7ull;
  int exponent = 1;
  bool all = false;

  auto add_common = [&](CLI::App* cmd, bool type_required) {
    auto* opt = cmd->add_option("type", type_str, "Lie type, e.g. E8, a3, G2");
    if (type_required) opt->required();
    cmd->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* radii_cmd = app.add_subcommand("radii", "circle radii of the rank-one-sum operator");
  add_common(radii_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "run every exact and spectral cross-check");
  add_common(verify_cmd, false);
  verify_cmd->add_flag("--all", all, "verify the whole rank 2..8 sweep");
  auto* tol_opt = verify_cmd->add_option("--tolerance", tolerance,
                                         "dual-route agreement tolerance, in (0, 1e-2)");
  verify_cmd->add_option("--seed", seed, "seed for the sampled Jacobi-identity check");

  auto* project_cmd = app.add_subcommand("project", "emit the plane projection as SVG/CSV/JSON");
  add_common(project_cmd, true);
  project_cmd->add_option("--edges", edge_mode, "none or polytope");
  project_cmd->add_option("--exponent", exponent, "rotation exponent, coprime to h");
  project_cmd->add_option("--palette", palette, "comma-separated point colors");
  project_cmd->add_option("--seed", seed, "seed for the sampled Jacobi-identity check");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial of the operator");
  add_common(charpoly_cmd, true);

  auto* masses_cmd = app.add_subcommand("masses", "E8 golden-ratio pairing of the circle radii");
  add_common(masses_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (radii_cmd->parsed()) return cmd_radii(type_str, format, out_path);
    if (verify_cmd->parsed()) {
      if (!all && type_str.empty()) {
        std::cerr << "error: verify needs a type or --all\n";
        return kUsage;
      }
      return cmd_verify(type_str, all, tol_opt->count() > 0, tolerance, seed, format, out_path);
    }
    if (project_cmd->parsed())
      return cmd_project(type_str, format, out_path, edge_mode, exponent, palette, seed);
    if (charpoly_cmd->parsed()) return cmd_charpoly(type_str, format, out_path);
    if (masses_cmd->parsed()) return cmd_masses(type_str, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kUsage;
}
