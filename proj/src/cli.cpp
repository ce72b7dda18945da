#include "burgers_lab/cli.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "burgers_lab/catalog.hpp"
#include "burgers_lab/evolve.hpp"
#include "burgers_lab/lie_algebra.hpp"
#include "burgers_lab/reduce.hpp"
#include "burgers_lab/sym_group.hpp"
#include "burgers_lab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace burgers_lab {

namespace {

using nlohmann::json;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::config_error:
    case Errc::parameter_out_of_domain:
    case Errc::invalid_case:
    case Errc::degree_too_large:
      return 2;
    default:
      return 3;
  }
}

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::config_error, std::string("invalid JSON for ") + what);
  return j;
}

Grid grid_from_spec(const json& spec, const SpaceTimeField& field) {
  auto axis = [&](const char* name) {
    const auto& a = spec.at(name);
    return Grid::linspace(a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<int>());
  };
  SpaceTimeField f = field;
  return Grid(axis("t"), axis("x"), axis("y"),
              [f](const Point& p) { return f.is_singular(p); });
}

int worker_count() {
  if (const char* env = std::getenv("BURGERS_LAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

json algebra_table_json() {
  json rows = json::array();
  const auto& names = basis_names();
  const auto& table = commutation_table();
  for (int i = 0; i < 8; ++i) {
    json row = json::array();
    for (int j = 0; j < 8; ++j) {
      json entry = json::object();
      for (int k = 0; k < 8; ++k)
        if (table[i][j][k] != 0.0) entry[names[k]] = table[i][j][k];
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  json out;
  out["schema"] = "1";
  out["basis"] = names;
  out["table"] = rows;
  return out;
}

std::string format_entry(const std::array<double, 8>& coords) {
  const auto& names = basis_names();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    double c = coords[k];
    if (c == 0.0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    double a = std::abs(c);
    if (a != 1.0) os << a << "*";
    os << names[k];
    first = false;
  }
  return first ? "0" : os.str();
}

int cmd_algebra_table(bool as_json, std::ostream& os) {
  if (as_json) {
    os << algebra_table_json().dump(2) << "\n";
    return 0;
  }
  const auto& names = basis_names();
  const auto& table = commutation_table();
  os << "commutators [row, col]:\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j)
      os << "[" << names[i] << "," << names[j] << "] = " << format_entry(table[i][j]) << "\n";
  }
  return 0;
}

json subalgebra_json(const Subalgebra& s) {
  json j;
  j["id"] = s.id;
  j["dim"] = s.dim;
  j["basis"] = s.basis_strings;
  j["parameters"] = s.parameter_names;
  j["domain"] = s.domain_description;
  return j;
}

int cmd_subalgebras(int dim, std::ostream& os) {
  json out;
  out["schema"] = "1";
  json list = json::array();
  const auto& v = dim == 1 ? subalgebras_dim1() : subalgebras_dim2();
  for (const auto& s : v) list.push_back(subalgebra_json(s));
  out["subalgebras"] = list;
  os << out.dump(2) << "\n";
  return 0;
}

int cmd_family_list(std::ostream& os) {
  json out;
  out["schema"] = "1";
  json list = json::array();
  for (const auto& e : family_registry()) {
    json j;
    j["id"] = e.id;
    j["description"] = e.description;
    j["default_params"] = e.default_params;
    list.push_back(j);
  }
  out["families"] = list;
  os << out.dump(2) << "\n";
  return 0;
}

FamilyInstance instance_from_cli(const std::string& id, const std::string& params_text,
                                 int set_index) {
  const FamilyEntry& entry = family_entry(id);
  if (!params_text.empty()) return entry.build(parse_json(params_text, "--params"));
  if (set_index < 0 || set_index >= static_cast<int>(entry.default_params.size()))
    fail(Errc::config_error, "parameter set index out of range");
  return entry.build(entry.default_params[set_index]);
}

int cmd_family_eval(const std::string& id, const std::string& params_text,
                    const std::string& grid_text, const std::string& out_path,
                    std::ostream& os) {
  FamilyInstance inst = instance_from_cli(id, params_text, 0);
  Grid grid = grid_text.empty() ? inst.grid()
                                : grid_from_spec(parse_json(grid_text, "--grid"), inst.field);
  std::vector<std::pair<double, double>> residuals;
  for (const Point& p : grid.points()) {
    if (inst.field.is_singular(p)) continue;
    residuals.push_back(burgers_residual_at(inst.field, p));
  }
  write_csv(out_path, inst.field, grid, &residuals);
  json out;
  out["schema"] = "1";
  out["family"] = id;
  out["rows"] = residuals.size();
  out["out"] = out_path;
  os << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& id, const std::string& params_text, int set_index,
               const std::string& grid_text, const std::string& system, double tol_override,
               std::ostream& os) {
  FamilyInstance inst = instance_from_cli(id, params_text, set_index);
  double tol = tol_override > 0 ? tol_override : inst.meta.tolerance;
  Grid grid = grid_text.empty() ? inst.grid()
                                : grid_from_spec(parse_json(grid_text, "--grid"), inst.field);
  json out;
  out["schema"] = "1";
  out["family"] = id;
  out["tolerance"] = tol;
  bool pass = true;
  if (system == "burgers" || system == "both") {
    ResidualReport r = burgers_residual(inst.field, grid, tol);
    out["burgers"] = r.to_json();
    pass = pass && r.pass;
  }
  if (system == "inviscid" || system == "both") {
    ResidualReport r = inviscid_residual(inst.field, grid, tol);
    out["inviscid"] = r.to_json();
    pass = pass && r.pass;
  }
  if (system == "ns") {
    ResidualReport r = ns_prolongation_check(inst.field, grid, tol);
    out["ns"] = r.to_json();
    pass = pass && r.pass;
  }
  out["pass"] = pass;
  os << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

ReducedSolution reduced_from_json(const std::string& ansatz, const json& spec) {
  std::string kind = spec.value("kind", "constants");
  double param = spec.value("param", 0.0);
  int t_sign = spec.value("t_sign", 1);
  if (kind == "zero" || kind == "constants") {
    double c1 = 0, c2 = 0;
    if (spec.contains("values")) {
      c1 = spec.at("values").at(0);
      c2 = spec.at("values").at(1);
    }
    ReducedSolution rs = constant_reduced(ansatz, param, c1, c2);
    rs.t_sign = t_sign;
    return rs;
  }
  if (kind == "ode") {
    const auto& ic = spec.at("ic");
    const auto& range = spec.at("range");
    return integrate_reduced_ode(ansatz, param, range.at(0), range.at(1),
                                 spec.value("omega0", (range.at(0).get<double>() +
                                                       range.at(1).get<double>()) /
                                                          2),
                                 {ic.at(0), ic.at(1), ic.at(2), ic.at(3)});
  }
  if (kind == "hc18") {
    if (ansatz != "1.8") fail(Errc::config_error, "hc18 profiles require ansatz 1.8");
    return hopf_cole_18(heat1d_from_json(spec.at("theta1")), heat1d_from_json(spec.at("theta2")));
  }
  fail(Errc::config_error, "unknown reduced solution kind " + kind);
}

int cmd_reduce_check(const std::string& ansatz, const std::string& solution_text,
                     double tol, std::ostream& os) {
  ReducedSolution rs = reduced_from_json(ansatz, parse_json(solution_text, "--solution"));
  ConsistencyReport rep = consistency_check(rs, tol);
  json out = rep.to_json();
  out["ansatz"] = ansatz;
  SampleBox b = rs.samples;
  out["constraint_value"] =
      reduced_constraint(rs, 0.5 * (b.z1_lo + b.z1_hi), 0.5 * (b.z2_lo + b.z2_hi));
  out["verdict"] = rep.consistent ? "consistent" : "inconsistent";
  os << out.dump(2) << "\n";
  return rep.consistent ? 0 : 1;
}

int cmd_group_apply(const std::string& id, const std::string& params_text,
                    const std::string& element_text, const std::string& out_path,
                    std::ostream& os) {
  FamilyInstance inst = instance_from_cli(id, params_text, 0);
  GroupElement g = group_element_from_json(parse_json(element_text, "--element"));
  SpaceTimeField moved = act_field(g, inst.field);
  // verify on the image of the default grid
  double tol = 10.0 * inst.meta.tolerance;
  double worst = 0;
  std::size_t used = 0, masked = 0;
  std::vector<Point> image_points;
  for (const Point& p : inst.grid().points()) {
    if (inst.field.is_singular(p)) {
      ++masked;
      continue;
    }
    Point q = act_point(g, p, inst.field.eval(p)).first;
    if (moved.is_singular(q)) {
      ++masked;
      continue;
    }
    auto [r1, r2] = burgers_residual_at(moved, q);
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
    image_points.push_back(q);
    ++used;
  }
  if (!out_path.empty()) {
    std::ofstream fs(out_path);
    fs << "t,x,y,u,v\n";
    char buf[256];
    for (const Point& q : image_points) {
      Vec2 w = moved.eval(q);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", q.t, q.x, q.y, w.u, w.v);
      fs << buf;
    }
  }
  json out;
  out["schema"] = "1";
  out["family"] = id;
  out["max_residual"] = worst;
  out["tolerance"] = tol;
  out["points"] = used;
  out["masked"] = masked;
  bool pass = worst <= tol;
  out["pass"] = pass;
  os << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

GroupElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  GroupElement g;
  do {
    g.a = unif(rng);
    g.b = unif(rng);
    g.c = unif(rng);
    g.d = unif(rng);
  } while (g.a * g.d - g.b * g.c < 0.05);
  g.angle = std::uniform_real_distribution<double>(0.0, 6.28)(rng);
  g.reflect = (rng() & 1u) != 0;
  g.m1 = 0.5 * unif(rng);
  g.m2 = 0.5 * unif(rng);
  g.n1 = 0.5 * unif(rng);
  g.n2 = 0.5 * unif(rng);
  return g.normalized();
}

bool chart_safe(const GroupElement& g, const Box& box) {
  GroupElement n = g.normalized();
  for (int i = 0; i <= 8; ++i) {
    double t = box.t0 + (box.t1 - box.t0) * i / 8.0;
    if (std::abs(n.c * t + n.d) < 0.2) return false;
  }
  return true;
}

struct SweepOutcome {
  json report;
  bool pass;
};

SweepOutcome sweep_family(const FamilyEntry& entry, int set_index, int count,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilyInstance inst = entry.build(entry.default_params[set_index]);
  double tol = 10.0 * inst.meta.tolerance;
  double worst = 0;
  std::size_t masked = 0, used = 0;
  for (int k = 0; k < count; ++k) {
    GroupElement g;
    do {
      g = random_element(rng);
    } while (!chart_safe(g, inst.meta.box));
    SpaceTimeField moved = act_field(g, inst.field);
    for (const Point& p : inst.grid().points()) {
      if (inst.field.is_singular(p)) {
        ++masked;
        continue;
      }
      Point q = act_point(g, p, inst.field.eval(p)).first;
      if (moved.is_singular(q)) {
        ++masked;
        continue;
      }
      auto [r1, r2] = burgers_residual_at(moved, q);
      worst = std::max({worst, std::abs(r1), std::abs(r2)});
      ++used;
    }
  }
  json j;
  j["family"] = entry.id;
  j["set"] = set_index;
  j["elements"] = count;
  j["max_residual"] = worst;
  j["tolerance"] = tol;
  j["points"] = used;
  j["masked"] = masked;
  bool pass = worst <= tol;
  j["pass"] = pass;
  return {j, pass};
}

int cmd_group_sweep(std::uint64_t seed, int count, const std::string& families,
                    std::ostream& os) {
  std::vector<const FamilyEntry*> selected;
  if (families.empty()) {
    for (const auto& e : family_registry()) selected.push_back(&e);
  } else {
    std::stringstream ss(families);
    std::string tok;
    while (std::getline(ss, tok, ',')) selected.push_back(&family_entry(tok));
  }
  json out;
  out["schema"] = "1";
  out["seed"] = seed;
  json reports = json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    SweepOutcome o = sweep_family(*selected[i], 0, count, seed + i);
    reports.push_back(o.report);
    all_pass = all_pass && o.pass;
  }
  out["reports"] = reports;
  out["pass"] = all_pass;
  os << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_evolve(const std::string& id, const std::string& params_text,
               const std::string& box_text, int levels, std::ostream& os) {
  FamilyInstance inst = instance_from_cli(id, params_text, 0);
  IbvpSetup setup;
  const Box& fb = inst.meta.box;
  setup.x0 = fb.x0 + 0.1 * (fb.x1 - fb.x0);
  setup.x1 = fb.x1 - 0.1 * (fb.x1 - fb.x0);
  setup.y0 = fb.y0 + 0.1 * (fb.y1 - fb.y0);
  setup.y1 = fb.y1 - 0.1 * (fb.y1 - fb.y0);
  setup.t0 = std::max(fb.t0, 0.25 * (fb.t0 + fb.t1));
  setup.t_end = setup.t0 + 0.02 * std::pow(std::min(setup.x1 - setup.x0, setup.y1 - setup.y0), 2);
  setup.nx = setup.ny = 16;
  if (!box_text.empty()) {
    json b = parse_json(box_text, "--box");
    setup.x0 = b.at("x").at(0);
    setup.x1 = b.at("x").at(1);
    setup.y0 = b.at("y").at(0);
    setup.y1 = b.at("y").at(1);
    setup.t0 = b.at("t").at(0);
    setup.t_end = b.at("t").at(1);
    if (b.contains("n")) setup.nx = setup.ny = b.at("n");
  }
  ConvergenceReport rep = cross_validate(inst.field, setup, levels);
  json out = rep.to_json();
  out["family"] = id;
  bool pass = rep.exact_to_rounding;
  if (!pass) {
    pass = true;
    for (double p : rep.orders) pass = pass && p >= 1.5;
  }
  out["pass"] = pass;
  os << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

json verify_one_family(const FamilyEntry& entry, int set_index, double tol_override) {
  FamilyInstance inst = entry.build(entry.default_params[set_index]);
  double tol = tol_override > 0 ? tol_override : inst.meta.tolerance;
  Grid grid = inst.grid();
  ResidualReport rep = burgers_residual(inst.field, grid, tol);
  json j;
  j["family"] = entry.id;
  j["set"] = set_index;
  j["max_residual"] = std::max(rep.max_abs.at("R1"), rep.max_abs.at("R2"));
  j["tolerance"] = tol;
  bool pass = rep.pass;

  // constraint truthfulness
  ResidualReport cons = constraint_values(inst.field, grid, 1e-10);
  json flags = json::object();
  const ConstraintFlags& f = inst.meta.flags;
  auto check_flag = [&](bool flagged, const char* key) {
    if (!flagged) return;
    bool ok = cons.max_abs.at(key) <= 1e-10;
    flags[key] = ok;
    pass = pass && ok;
  };
  check_flag(f.irrotational, "uy_minus_vx");
  check_flag(f.gradient_pair, "ux_minus_vy");
  check_flag(f.divergence_free, "ux_plus_vy");
  check_flag(f.v_zero, "v");
  j["constraints"] = flags;

  // invariance truthfulness
  if (inst.meta.invariance != "-") {
    const Subalgebra& sub = subalgebra(inst.meta.invariance);
    double worst = 0;
    for (const auto& V : sub.make_basis(inst.meta.invariance_params))
      for (const Point& p : grid.points()) {
        if (inst.field.is_singular(p)) continue;
        Vec2 q = apply_to_field(V, inst.field, p);
        worst = std::max({worst, std::abs(q.u), std::abs(q.v)});
      }
    bool ok = worst <= 1e-8;
    j["invariance"] = inst.meta.invariance;
    j["invariance_residual"] = worst;
    pass = pass && ok;
  }
  j["pass"] = pass;
  return j;
}

int cmd_catalog_verify_all(const std::string& family, double tol_override, std::ostream& os) {
  std::vector<std::pair<const FamilyEntry*, int>> tasks;
  for (const auto& e : family_registry()) {
    if (!family.empty() && e.id != family) continue;
    for (int s = 0; s < static_cast<int>(e.default_params.size()); ++s)
      tasks.emplace_back(&e, s);
  }
  if (tasks.empty()) fail(Errc::config_error, "no families selected");
  int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  std::vector<json> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
          results[i] = verify_one_family(*tasks[i].first, tasks[i].second, tol_override);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  json out;
  out["schema"] = "1";
  out["reports"] = results;
  bool all = true;
  for (const auto& r : results) all = all && r.at("pass").get<bool>();
  out["pass"] = all;
  os << out.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& os) {
  CLI::App app{"exact-solution catalog and verification tools for the 2D Burgers system"};
  app.require_subcommand(1);

  auto* algebra = app.add_subcommand("algebra", "invariance algebra data");
  auto* alg_table = algebra->add_subcommand("table", "print the commutation table");
  bool table_json = false;
  alg_table->add_flag("--json", table_json, "emit JSON");
  int sub_dim = 1;
  auto* alg_subs = algebra->add_subcommand("subalgebras", "list inequivalent subalgebras");
  alg_subs->add_option("--dim", sub_dim, "dimension (1 or 2)")->check(CLI::IsMember({1, 2}));

  auto* family = app.add_subcommand("family", "solution families");
  auto* fam_list = family->add_subcommand("list", "list catalog families");
  auto* fam_eval = family->add_subcommand("eval", "evaluate a family to CSV");
  std::string fam_id, fam_params, fam_grid, fam_out;
  fam_eval->add_option("--id", fam_id)->required();
  fam_eval->add_option("--params", fam_params);
  fam_eval->add_option("--grid", fam_grid);
  fam_eval->add_option("--out", fam_out)->required();

  auto* verify_cmd = app.add_subcommand("verify", "residual verification");
  std::string ver_id, ver_params, ver_grid, ver_system = "burgers";
  int ver_set = 0;
  double ver_tol = -1;
  verify_cmd->add_option("--family", ver_id)->required();
  verify_cmd->add_option("--params", ver_params);
  verify_cmd->add_option("--set", ver_set);
  verify_cmd->add_option("--grid", ver_grid);
  verify_cmd->add_option("--system", ver_system)
      ->check(CLI::IsMember({"burgers", "inviscid", "ns", "both"}));
  verify_cmd->add_option("--tol", ver_tol);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduction checks");
  auto* red_check = reduce_cmd->add_subcommand("check", "consistency of a reduced profile");
  std::string red_ansatz, red_solution;
  double red_tol = 1e-8;
  red_check->add_option("--ansatz", red_ansatz)->required();
  red_check->add_option("--solution", red_solution)->required();
  red_check->add_option("--tol", red_tol);

  auto* group = app.add_subcommand("group", "point symmetry group actions");
  auto* grp_apply = group->add_subcommand("apply", "apply an element to a family");
  std::string grp_id, grp_params, grp_element, grp_out;
  grp_apply->add_option("--family", grp_id)->required();
  grp_apply->add_option("--params", grp_params);
  grp_apply->add_option("--element", grp_element)->required();
  grp_apply->add_option("--out", grp_out);
  auto* grp_sweep = group->add_subcommand("sweep", "random-element preservation sweep");
  std::uint64_t sweep_seed = 42;
  int sweep_count = 5;
  std::string sweep_families;
  grp_sweep->add_option("--seed", sweep_seed);
  grp_sweep->add_option("--count", sweep_count);
  grp_sweep->add_option("--families", sweep_families, "comma-separated ids");

  auto* evolve_cmd = app.add_subcommand("evolve", "finite-difference cross-validation");
  std::string ev_id, ev_params, ev_box;
  int ev_levels = 3;
  evolve_cmd->add_option("--family", ev_id)->required();
  evolve_cmd->add_option("--params", ev_params);
  evolve_cmd->add_option("--box", ev_box);
  evolve_cmd->add_option("--levels", ev_levels);

  auto* all_cmd = app.add_subcommand("catalog-verify-all", "verify every catalog family");
  std::string all_family;
  double all_tol = -1;
  all_cmd->add_option("--family", all_family);
  all_cmd->add_option("--tol", all_tol);

  std::vector<std::string> argv_like = args;
  std::vector<const char*> argv;
  argv.push_back("burgers-lab");
  for (const auto& a : argv_like) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      os << app.help();
      return 0;
    }
    os << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (alg_table->parsed()) return cmd_algebra_table(table_json, os);
    if (alg_subs->parsed()) return cmd_subalgebras(sub_dim, os);
    if (fam_list->parsed()) return cmd_family_list(os);
    if (fam_eval->parsed()) return cmd_family_eval(fam_id, fam_params, fam_grid, fam_out, os);
    if (verify_cmd->parsed())
      return cmd_verify(ver_id, ver_params, ver_set, ver_grid, ver_system, ver_tol, os);
    if (red_check->parsed()) return cmd_reduce_check(red_ansatz, red_solution, red_tol, os);
    if (grp_apply->parsed()) return cmd_group_apply(grp_id, grp_params, grp_element, grp_out, os);
    if (grp_sweep->parsed()) return cmd_group_sweep(sweep_seed, sweep_count, sweep_families, os);
    if (evolve_cmd->parsed()) return cmd_evolve(ev_id, ev_params, ev_box, ev_levels, os);
    if (all_cmd->parsed()) return cmd_catalog_verify_all(all_family, all_tol, os);
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return 3;
  }
  os << app.help();
  return 2;
}

}  // namespace burgers_lab
