#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adr/rates.hpp"
#include "adr/types.hpp"

namespace adr {

enum class Quantity { ReR12, ReR21, F11, F22, TotalRate, MeanLife };

Quantity quantity_from_string(const std::string& s);
const char* quantity_name(Quantity q);

struct AxisRange {
  double min = 0.1;
  double max = 3.0;
  int steps = 40;
};

// One grid scan over (alpha1, alpha2) with every other group fixed.
// All inputs are the dimensionless caption groups; dw = 2 pi (lambda units)
// with the sign set by `direction`.
struct ScanSpec {
  Quantity quantity = Quantity::ReR21;
  AxisRange alpha1_range{};
  AxisRange alpha2_range{};
  SwitchFlavor switching = SwitchFlavor::Sharp;
  Direction direction = Direction::Excitation;
  double dw_dt = 1.2;        // |dw| * dt            (sharp)
  double dw_eps = 3.0e-2;    // |dw| * eps
  double dw_dx = 0.3;        // |dw| * |Delta x|
  double dw_zeta = 0.0;      // |dw| * zeta          (gaussian)
  double t_center = 0.0;     // sharp window center T (lambda units)
  double tau_center = 0.0;   // gaussian center tau   (lambda units)
  double mu = 1.0;
  bool prefer_asymptotic = true;  // gaussian, zeta >= 10 eps rows

  void validate() const;
};

struct CsvRow {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double value = 0.0;
  double err_estimate = 0.0;
  Method method = Method::ClosedForm;
  bool advisory = false;
  std::string error_code;  // empty unless the point failed
};

struct PointResult {
  double value = 0.0;
  double err_estimate = 0.0;
  Method method = Method::ClosedForm;
  bool advisory = false;
};

// Evaluate one grid point of the scan's quantity. Throws on error states.
PointResult evaluate_point(const ScanSpec& spec, double alpha1, double alpha2);

// Row-major scan (alpha1 outer, alpha2 inner). jobs == 1 runs the serial
// reference loop; jobs > 1 runs the OpenMP kernel. Both produce identical rows.
std::vector<CsvRow> scan_grid(const ScanSpec& spec, int jobs);

// CSV with a fixed header and 17-significant-digit floats; failed points carry
// the "ERR:<code>" sentinel in the value column.
std::string csv_header();
std::string format_csv_row(const CsvRow& row);
void write_csv(const std::vector<CsvRow>& rows, const std::string& path);

// Line-oriented `key = value` configuration, '#' comments.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Figure presets: the caption parameter sets, one ScanSpec per panel.
struct FigurePanel {
  std::string name;
  ScanSpec spec;
};
std::vector<FigurePanel> figure_panels(const std::string& figure, const AxisRange& a1,
                                       const AxisRange& a2);

}  // namespace adr
