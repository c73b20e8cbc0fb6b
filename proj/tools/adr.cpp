// Command-line front end: single-point evaluation, (alpha1, alpha2) grid
// scans, figure-preset reproduction, and closed-form vs brute-force checks.
// All physical inputs are the dimensionless groups dw*dt, dw*eps, dw*dx,
// dw*zeta with dw = 2 pi in lambda units; alphas are in lambda units.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "adr/oracle.hpp"
#include "adr/response_crossed.hpp"
#include "adr/response_individual.hpp"
#include "adr/scan.hpp"

namespace {

constexpr double kDw = 2.0 * adr::kPi;

struct CommonOpts {
  std::string quantity = "ReR21";
  bool tau_center_set = false;
  std::string switching = "sharp";
  std::string direction = "excitation";
  double dw_dt = 1.2;
  double dw_eps = 3.0e-2;
  double dw_dx = 0.3;
  double dw_zeta = 0.0;
  double t_center = 0.0;
  double tau_center = 0.0;
  double mu = 1.0;
  std::string alpha1 = "1.0";
  std::string alpha2 = "1.0";
  std::string grid = "40x40";
  std::string out = "";
  std::string config = "";
  int jobs = 1;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--quantity", o.quantity, "ReR12|ReR21|F11|F22|TotalRate|MeanLife");
  cmd->add_option("--switching", o.switching, "sharp|gaussian");
  cmd->add_option("--direction", o.direction, "excitation|decay");
  cmd->add_option("--dw-dt", o.dw_dt, "dimensionless dw*dt (sharp window)");
  cmd->add_option("--dw-eps", o.dw_eps, "dimensionless dw*eps (cutoff)");
  cmd->add_option("--dw-dx", o.dw_dx, "dimensionless dw*|dx| (orthogonal separation)");
  cmd->add_option("--dw-zeta", o.dw_zeta, "dimensionless dw*zeta (gaussian width)");
  cmd->add_option("--t-center", o.t_center, "window center (sharp T / gaussian tau, lambda units)");
  cmd->add_option("--tau-center", o.tau_center, "gaussian center override (lambda units)");
  cmd->add_option("--mu", o.mu, "coupling constant");
  cmd->add_option("--alpha1", o.alpha1, "value or min:max range (lambda units)");
  cmd->add_option("--alpha2", o.alpha2, "value or min:max range (lambda units)");
  cmd->add_option("--grid", o.grid, "grid steps, e.g. 60x60");
  cmd->add_option("--out", o.out, "output CSV file (scan) or directory (figure)");
  cmd->add_option("--config", o.config, "key = value config file; flags take precedence");
  cmd->add_option("--jobs", o.jobs, "worker threads; 1 = serial reference path");
}

// Flags win over config: config values are applied only where the user did
// not pass the flag on the command line.
void apply_config(CLI::App* cmd, CommonOpts& o) {
  if (o.config.empty()) return;
  auto kv = adr::parse_config_file(o.config);
  auto set_if_default = [&](const char* flag, auto& slot) {
    auto it = kv.find(&flag[2]);  // keys without the leading --
    if (it == kv.end()) return;
    if (cmd->count(flag) > 0) return;
    std::istringstream ss(it->second);
    ss >> slot;
  };
  set_if_default("--quantity", o.quantity);
  set_if_default("--switching", o.switching);
  set_if_default("--direction", o.direction);
  set_if_default("--dw-dt", o.dw_dt);
  set_if_default("--dw-eps", o.dw_eps);
  set_if_default("--dw-dx", o.dw_dx);
  set_if_default("--dw-zeta", o.dw_zeta);
  set_if_default("--t-center", o.t_center);
  set_if_default("--tau-center", o.tau_center);
  set_if_default("--mu", o.mu);
  set_if_default("--alpha1", o.alpha1);
  set_if_default("--alpha2", o.alpha2);
  set_if_default("--grid", o.grid);
  set_if_default("--jobs", o.jobs);
}

adr::AxisRange parse_axis(const std::string& s, int steps) {
  adr::AxisRange r;
  r.steps = steps;
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    r.min = r.max = std::stod(s);
    r.steps = 1;
    return r;
  }
  r.min = std::stod(s.substr(0, colon));
  r.max = std::stod(s.substr(colon + 1));
  return r;
}

std::pair<int, int> parse_grid(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) {
    int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

adr::ScanSpec build_spec(const CommonOpts& o) {
  adr::ScanSpec s;
  s.quantity = adr::quantity_from_string(o.quantity);
  if (o.switching == "sharp") {
    s.switching = adr::SwitchFlavor::Sharp;
  } else if (o.switching == "gaussian") {
    s.switching = adr::SwitchFlavor::Gaussian;
  } else {
    throw CLI::ValidationError("--switching", "expected sharp or gaussian");
  }
  if (o.direction == "excitation") {
    s.direction = adr::Direction::Excitation;
  } else if (o.direction == "decay") {
    s.direction = adr::Direction::Decay;
  } else {
    throw CLI::ValidationError("--direction", "expected excitation or decay");
  }
  auto [n1, n2] = parse_grid(o.grid);
  s.alpha1_range = parse_axis(o.alpha1, n1);
  s.alpha2_range = parse_axis(o.alpha2, n2);
  s.dw_dt = o.dw_dt;
  s.dw_eps = o.dw_eps;
  s.dw_dx = o.dw_dx;
  s.dw_zeta = o.dw_zeta;
  s.t_center = o.t_center;
  // --t-center addresses the active flavor's center; --tau-center overrides
  s.tau_center = o.tau_center_set ? o.tau_center : o.t_center;
  s.mu = o.mu;
  return s;
}

int run_eval(const CommonOpts& o) {
  adr::ScanSpec s = build_spec(o);
  const double a1 = s.alpha1_range.min;
  const double a2 = s.alpha2_range.min;
  adr::CsvRow row;
  row.alpha1 = a1;
  row.alpha2 = a2;
  try {
    adr::PointResult p = adr::evaluate_point(s, a1, a2);
    row.value = p.value;
    row.err_estimate = p.err_estimate;
    row.method = p.method;
    row.advisory = p.advisory;
  } catch (const adr::NonPositiveRateError& e) {
    std::cerr << "error state: non-positive total rate (" << e.what() << ")\n";
    return 2;
  } catch (const adr::DomainError& e) {
    std::cerr << "error state: domain (" << e.what() << ")\n";
    return 2;
  }
  std::cout << adr::csv_header() << "\n" << adr::format_csv_row(row) << "\n";
  return 0;
}

int run_scan(const CommonOpts& o) {
  adr::ScanSpec s = build_spec(o);
  if (s.alpha1_range.steps < 2) s.alpha1_range.steps = 2;
  if (s.alpha2_range.steps < 2) s.alpha2_range.steps = 2;
  if (o.out.empty()) throw CLI::ValidationError("--out", "scan requires an output path");
  std::fprintf(stderr, "scan %s: %dx%d grid, jobs=%d\n", adr::quantity_name(s.quantity),
               s.alpha1_range.steps, s.alpha2_range.steps, o.jobs);
  auto rows = adr::scan_grid(s, o.jobs);
  adr::write_csv(rows, o.out);
  long errs = 0;
  for (const auto& r : rows) errs += r.error_code.empty() ? 0 : 1;
  std::fprintf(stderr, "scan done: %zu rows, %ld error cells -> %s\n", rows.size(), errs,
               o.out.c_str());
  return 0;
}

int run_figure(const std::string& name, const CommonOpts& o) {
  auto [n1, n2] = parse_grid(o.grid);
  adr::AxisRange a1{0.1, 3.0, n1};
  adr::AxisRange a2{0.1, 3.0, n2};
  if (o.alpha1.find(':') != std::string::npos) a1 = parse_axis(o.alpha1, n1);
  if (o.alpha2.find(':') != std::string::npos) a2 = parse_axis(o.alpha2, n2);
  std::string dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  for (const auto& panel : adr::figure_panels(name, a1, a2)) {
    auto rows = adr::scan_grid(panel.spec, o.jobs);
    std::string path = dir + "/" + panel.name + ".csv";
    adr::write_csv(rows, path);
    std::fprintf(stderr, "figure panel %s -> %s\n", panel.name.c_str(), path.c_str());
  }
  return 0;
}

int run_compare(const std::string& component, const CommonOpts& o) {
  adr::ScanSpec s = build_spec(o);
  const double a1 = s.alpha1_range.min;
  const double a2 = s.alpha2_range.min;
  const double eps = s.dw_eps / kDw;
  const double dx = s.dw_dx / kDw;
  const adr::DetectorGeometry g(a1, a2, dx);
  const double dw = (s.direction == adr::Direction::Excitation ? 1.0 : -1.0) * kDw;
  const adr::SharpWindow w = adr::SharpWindow::centered(s.dw_dt / kDw, s.t_center);
  const bool advisory = w.dt() < 10.0 * eps;

  adr::QuadratureControl qc;
  qc.rel_tol = 1e-10;
  qc.abs_tol = 1e-18;

  adr::Complex closed, oracle;
  double tol = 1e-6;
  try {
    if (component == "F11") {
      closed = adr::f11_sharp(dw, w, eps, a1).value;
      oracle = adr::response_1d_reduced_f11(dw, w, eps, a1, qc);
      tol = 1e-6;
    } else if (component == "F22") {
      closed = adr::f22_sharp(dw, w, eps, g).value;
      oracle = adr::response_2d_bruteforce(2, 2, w, dw, g, eps, qc);
      tol = 1e-5;
    } else if (component == "F21" || component == "F12") {
      closed = adr::f21_sharp(dw, w, g, eps).value;
      oracle = adr::response_2d_bruteforce(2, 1, w, dw, g, eps, qc);
      if (component == "F12") {
        closed = std::conj(closed);
        oracle = std::conj(oracle);
      }
      tol = 1e-4;
    } else if (component == "HalfLine") {
      closed = adr::half_line_integral(dw, 1.0, g, eps, adr::EpsSign::Plus);
      oracle = adr::halfline_bruteforce(dw, 1.0, g, eps, adr::EpsSign::Plus, qc);
      tol = 1e-6;
    } else {
      throw CLI::ValidationError("component", "expected F11|F22|F21|F12|HalfLine");
    }
  } catch (const adr::ConvergenceError& e) {
    std::cout << "component=" << component << " INCONCLUSIVE (oracle: " << e.what() << ")\n";
    return 0;
  }
  if (advisory) tol = 1e-2;
  const double rel = std::abs(closed - oracle) / std::max(std::abs(oracle), 1e-300);
  std::printf("component=%s closed=(%.12e,%.12e) oracle=(%.12e,%.12e) rel=%.3e tol=%.0e %s%s\n",
              component.c_str(), closed.real(), closed.imag(), oracle.real(), oracle.imag(), rel,
              tol, rel <= tol ? "PASS" : "FAIL", advisory ? " [advisory-domain]" : "");
  return rel <= tol ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-time response functions of uniformly accelerated atom pairs"};
  app.require_subcommand(1);

  CommonOpts oe, os, of, oc;
  std::string figure_name, component;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one grid point, CSV to stdout");
  add_common_flags(eval, oe);
  CLI::App* scan = app.add_subcommand("scan", "grid scan over (alpha1, alpha2) to CSV");
  add_common_flags(scan, os);
  CLI::App* figure = app.add_subcommand("figure", "emit preset panel CSVs (fig1..fig7)");
  figure->add_option("name", figure_name, "fig1..fig7")->required();
  add_common_flags(figure, of);
  CLI::App* compare = app.add_subcommand("compare", "closed form vs brute-force oracle");
  compare->add_option("component", component, "F11|F22|F21|F12|HalfLine")->required();
  add_common_flags(compare, oc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      apply_config(eval, oe);
      oe.tau_center_set = eval->count("--tau-center") > 0;
      return run_eval(oe);
    }
    if (scan->parsed()) {
      apply_config(scan, os);
      os.tau_center_set = scan->count("--tau-center") > 0;
      return run_scan(os);
    }
    if (figure->parsed()) {
      apply_config(figure, of);
      of.tau_center_set = figure->count("--tau-center") > 0;
      return run_figure(figure_name, of);
    }
    if (compare->parsed()) {
      apply_config(compare, oc);
      oc.tau_center_set = compare->count("--tau-center") > 0;
      return run_compare(component, oc);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
