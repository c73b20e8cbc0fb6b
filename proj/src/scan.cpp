#include "adr/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "adr/response_crossed.hpp"
#include "adr/response_individual.hpp"

namespace adr {

namespace {
constexpr double kDw = 2.0 * kPi;  // |dw| in lambda units (omega0 = 2 pi / lambda)
}

Quantity quantity_from_string(const std::string& s) {
  if (s == "ReR12") return Quantity::ReR12;
  if (s == "ReR21") return Quantity::ReR21;
  if (s == "F11") return Quantity::F11;
  if (s == "F22") return Quantity::F22;
  if (s == "TotalRate") return Quantity::TotalRate;
  if (s == "MeanLife") return Quantity::MeanLife;
  throw std::invalid_argument("unknown quantity: " + s);
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::ReR12: return "ReR12";
    case Quantity::ReR21: return "ReR21";
    case Quantity::F11: return "F11";
    case Quantity::F22: return "F22";
    case Quantity::TotalRate: return "TotalRate";
    case Quantity::MeanLife: return "MeanLife";
  }
  return "?";
}

void ScanSpec::validate() const {
  if (alpha1_range.steps < 2 || alpha2_range.steps < 2) {
    throw std::invalid_argument("scan: each axis needs at least 2 steps");
  }
  if (!(alpha1_range.min > 0.0) || !(alpha2_range.min > 0.0) ||
      !(alpha1_range.max > alpha1_range.min) || !(alpha2_range.max > alpha2_range.min)) {
    throw std::invalid_argument("scan: ranges must be positive and increasing");
  }
  if (!(dw_eps > 0.0)) throw std::invalid_argument("scan: dw_eps must be > 0");
  if (switching == SwitchFlavor::Sharp && !(dw_dt > 0.0)) {
    throw std::invalid_argument("scan: sharp switching needs dw_dt > 0");
  }
  if (switching == SwitchFlavor::Gaussian && !(dw_zeta > 0.0)) {
    throw std::invalid_argument("scan: gaussian switching needs dw_zeta > 0");
  }
}

namespace {

double axis_value(const AxisRange& r, int i) {
  return r.min + (r.max - r.min) * static_cast<double>(i) / (r.steps - 1);
}

SwitchingProfile make_profile(const ScanSpec& s) {
  if (s.switching == SwitchFlavor::Sharp) {
    return SharpWindow::centered(s.dw_dt / kDw, s.t_center);
  }
  return GaussianWindow(s.tau_center, s.dw_zeta / kDw);
}

}  // namespace

PointResult evaluate_point(const ScanSpec& spec, double alpha1, double alpha2) {
  const double eps = spec.dw_eps / kDw;
  const double dx = spec.dw_dx / kDw;
  const DetectorGeometry g(alpha1, alpha2, dx);
  const double dw = (spec.direction == Direction::Excitation ? 1.0 : -1.0) * kDw;
  const SwitchingProfile sw = make_profile(spec);
  PointResult out;

  const bool gaussian = spec.switching == SwitchFlavor::Gaussian;
  const bool asym_ok = gaussian && spec.prefer_asymptotic &&
                       (spec.dw_zeta >= 10.0 * spec.dw_eps);

  switch (spec.quantity) {
    case Quantity::ReR12:
    case Quantity::ReR21: {
      if (!gaussian) {
        const auto& w = std::get<SharpWindow>(sw);
        out.value = r21_sharp_rate(dw, w, g, eps).real();
        out.method = Method::ClosedForm;
        out.advisory = w.dt() < 10.0 * eps;
        out.err_estimate = 1e-8 * std::max(1.0, std::abs(out.value));
        break;
      }
      bool done = false;
      if (asym_ok) {
        // accept the derivative-corrected closed form only where its own
        // next-correction estimate is small; otherwise fall back to quadrature
        const auto& w = std::get<GaussianWindow>(sw);
        ResponseResult probe = f21_gaussian_asymptotic(dw, w, g, eps, 1);
        if (probe.err_estimate <= 0.02 * std::abs(probe.value)) {
          const double h = 1e-4 * w.zeta;
          auto F = [&](double zz) {
            return f21_gaussian_asymptotic(dw, GaussianWindow(w.center_tau, zz), g, eps, 1)
                .value.real();
          };
          out.value = (F(w.zeta + h) - F(w.zeta - h)) / (2.0 * h * kSqrt2Pi);
          out.method = Method::Asymptotic;
          out.err_estimate =
              probe.err_estimate / w.dt() + 1e-8 * std::max(1.0, std::abs(out.value));
          done = true;
        }
      }
      if (!done) {
        out.value = rate_numeric(ResponseComponent::F21, dw, sw, g, eps);
        out.method = Method::Quadrature;
        out.err_estimate = 1e-8 * std::max(1.0, std::abs(out.value));
      }
      break;
    }
    case Quantity::F11: {
      ResponseResult r = gaussian
                             ? f11_gaussian_quad(dw, std::get<GaussianWindow>(sw), eps, g.alpha1)
                             : f11_sharp(dw, std::get<SharpWindow>(sw), eps, g.alpha1);
      out.value = r.value.real();
      out.err_estimate = r.err_estimate;
      out.method = r.method;
      out.advisory = r.advisory_domain;
      break;
    }
    case Quantity::F22: {
      ResponseResult r = gaussian
                             ? f22_gaussian_quad(dw, std::get<GaussianWindow>(sw), eps, g)
                             : f22_sharp(dw, std::get<SharpWindow>(sw), eps, g);
      out.value = r.value.real();
      out.err_estimate = r.err_estimate;
      out.method = r.method;
      out.advisory = r.advisory_domain;
      break;
    }
    case Quantity::TotalRate: {
      TransitionSpec ts(kDw, spec.direction, spec.mu);
      RateBundle b = total_rate(ts, sw, g, eps);
      out.value = b.total;
      out.method = gaussian ? Method::Quadrature : Method::ClosedForm;
      out.err_estimate = 1e-8 * std::max(1.0, std::abs(b.total));
      break;
    }
    case Quantity::MeanLife: {
      TransitionSpec ts(kDw, Direction::Decay, spec.mu);
      out.value = mean_life_dimensionless(ts, sw, g, eps);
      out.method = gaussian ? Method::Quadrature : Method::ClosedForm;
      out.err_estimate = 1e-8 * std::max(1.0, std::abs(out.value));
      break;
    }
  }
  return out;
}

namespace {

CsvRow evaluate_row(const ScanSpec& spec, double a1, double a2) {
  CsvRow row;
  row.alpha1 = a1;
  row.alpha2 = a2;
  try {
    PointResult p = evaluate_point(spec, a1, a2);
    row.value = p.value;
    row.err_estimate = p.err_estimate;
    row.method = p.method;
    row.advisory = p.advisory;
  } catch (const NonPositiveRateError&) {
    row.error_code = "non-positive-rate";
  } catch (const DomainError&) {
    row.error_code = "domain";
  } catch (const ConvergenceError&) {
    row.error_code = "non-convergence";
  }
  return row;
}

}  // namespace

std::vector<CsvRow> scan_grid(const ScanSpec& spec, int jobs) {
  spec.validate();
  const int n1 = spec.alpha1_range.steps;
  const int n2 = spec.alpha2_range.steps;
  std::vector<CsvRow> rows(static_cast<size_t>(n1) * n2);
  const long total = static_cast<long>(n1) * n2;

  if (jobs <= 1) {
    // serial reference path
    for (long idx = 0; idx < total; ++idx) {
      const int i = static_cast<int>(idx / n2);
      const int j = static_cast<int>(idx % n2);
      rows[idx] = evaluate_row(spec, axis_value(spec.alpha1_range, i),
                               axis_value(spec.alpha2_range, j));
    }
    return rows;
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
  for (long idx = 0; idx < total; ++idx) {
    const int i = static_cast<int>(idx / n2);
    const int j = static_cast<int>(idx % n2);
    rows[idx] = evaluate_row(spec, axis_value(spec.alpha1_range, i),
                             axis_value(spec.alpha2_range, j));
  }
#else
  for (long idx = 0; idx < total; ++idx) {
    const int i = static_cast<int>(idx / n2);
    const int j = static_cast<int>(idx % n2);
    rows[idx] = evaluate_row(spec, axis_value(spec.alpha1_range, i),
                             axis_value(spec.alpha2_range, j));
  }
#endif
  return rows;
}

std::string csv_header() { return "alpha1,alpha2,value,err_estimate,method,flags"; }

std::string format_csv_row(const CsvRow& row) {
  char buf[256];
  if (!row.error_code.empty()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,ERR:%s,0,none,", row.alpha1, row.alpha2,
                  row.error_code.c_str());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s,%s", row.alpha1, row.alpha2,
                row.value, row.err_estimate, method_name(row.method),
                row.advisory ? "advisory-domain" : "");
  return buf;
}

void write_csv(const std::vector<CsvRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << csv_header() << "\n";
  for (const auto& r : rows) out << format_csv_row(r) << "\n";
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const char* ws = " \t\r\n";
      s.erase(0, s.find_first_not_of(ws));
      auto last = s.find_last_not_of(ws);
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) out[key] = val;
  }
  return out;
}

std::vector<FigurePanel> figure_panels(const std::string& figure, const AxisRange& a1,
                                       const AxisRange& a2) {
  auto base = [&](Quantity q, SwitchFlavor f) {
    ScanSpec s;
    s.quantity = q;
    s.switching = f;
    s.alpha1_range = a1;
    s.alpha2_range = a2;
    s.dw_dx = 0.3;
    return s;
  };
  // gaussian center rule used by the smooth-switching panels
  auto tau_rule = [](double dw_eps) { return (0.9 * kSqrt2Pi / 2.0) * dw_eps / (2.0 * kPi); };

  std::vector<FigurePanel> out;
  if (figure == "fig1") {
    for (double dwdx : {0.3, 0.6, 0.9, 1.2}) {
      ScanSpec s = base(Quantity::ReR12, SwitchFlavor::Sharp);
      s.dw_dt = 1.2;
      s.dw_eps = 3.0e-2;
      s.dw_dx = dwdx;
      char name[32];
      std::snprintf(name, sizeof name, "fig1_dwdx_%g", dwdx);
      out.push_back({name, s});
    }
  } else if (figure == "fig2") {
    const char* tags = "abcd";
    int k = 0;
    for (double dwdt : {3.0, 12.0, 21.0, 30.0}) {
      ScanSpec s = base(Quantity::ReR21, SwitchFlavor::Sharp);
      s.dw_dt = dwdt;
      s.dw_eps = 3.0e-2;
      out.push_back({std::string("fig2") + tags[k++], s});
    }
  } else if (figure == "fig3") {
    const char* tags = "abcd";
    const double epss[] = {3.0e-2, 3.9e-1, 5.4e-1, 0.9};
    const double zetas[] = {2.7e-2, 35.1e-2, 48.6e-2, 8.1e-1};
    for (int k = 0; k < 4; ++k) {
      ScanSpec s = base(Quantity::ReR21, SwitchFlavor::Gaussian);
      s.dw_eps = epss[k];
      s.dw_zeta = zetas[k];
      s.tau_center = tau_rule(epss[k]);
      out.push_back({std::string("fig3") + tags[k], s});
    }
  } else if (figure == "fig4") {
    const char* tags = "abcd";
    const double s2pi_eps[] = {0.3e-2, 1.2e-2, 3.6e-2, 7.2e-2};
    const double s2pi_zeta[] = {3.0, 12.0, 36.0, 72.0};
    for (int k = 0; k < 4; ++k) {
      ScanSpec s = base(Quantity::ReR21, SwitchFlavor::Gaussian);
      s.dw_eps = s2pi_eps[k] / kSqrt2Pi;
      s.dw_zeta = s2pi_zeta[k] / kSqrt2Pi;
      s.tau_center = tau_rule(s.dw_eps);
      out.push_back({std::string("fig4") + tags[k], s});
    }
  } else if (figure == "fig5") {
    const char* tags = "abcd";
    int k = 0;
    for (double dwdt : {0.3, 3.0, 12.0, 30.0}) {
      ScanSpec s = base(Quantity::MeanLife, SwitchFlavor::Sharp);
      s.direction = Direction::Decay;
      s.dw_dt = dwdt;
      s.dw_eps = 3.0e-2;
      out.push_back({std::string("fig5") + tags[k++], s});
    }
  } else if (figure == "fig6") {
    const char* tags = "abcd";
    const double epss[] = {3.0e-2, 4.5e-1, 0.9, 1.2};
    const double zetas[] = {2.7e-2, 40.5e-2, 8.1e-1, 10.8e-1};
    for (int k = 0; k < 4; ++k) {
      ScanSpec s = base(Quantity::MeanLife, SwitchFlavor::Gaussian);
      s.direction = Direction::Decay;
      s.dw_eps = epss[k];
      s.dw_zeta = zetas[k];
      s.tau_center = tau_rule(epss[k]);
      out.push_back({std::string("fig6") + tags[k], s});
    }
  } else if (figure == "fig7") {
    const char* tags = "abcd";
    const double s2pi_eps[] = {0.3e-2, 3.0e-2, 10.8e-2, 18.9e-2};
    const double s2pi_zeta[] = {3.0, 30.0, 108.0, 189.0};
    for (int k = 0; k < 4; ++k) {
      ScanSpec s = base(Quantity::MeanLife, SwitchFlavor::Gaussian);
      s.direction = Direction::Decay;
      s.dw_eps = s2pi_eps[k] / kSqrt2Pi;
      s.dw_zeta = s2pi_zeta[k] / kSqrt2Pi;
      s.tau_center = tau_rule(s.dw_eps);
      out.push_back({std::string("fig7") + tags[k], s});
    }
  } else {
    throw std::invalid_argument("unknown figure: " + figure + " (expect fig1..fig7)");
  }
  return out;
}

}  // namespace adr
