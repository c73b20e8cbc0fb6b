// Times the serial reference loop against the OpenMP grid kernel on a
// representative crossed-rate scan and prints a small comparison table.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adr/scan.hpp"

namespace {

double run_once(const adr::ScanSpec& spec, int jobs, double* checksum) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = adr::scan_grid(spec, jobs);
  auto t1 = std::chrono::steady_clock::now();
  double sum = 0.0;
  for (const auto& r : rows) sum += r.error_code.empty() ? r.value : 0.0;
  *checksum = sum;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 32;
  adr::ScanSpec spec;
  spec.quantity = adr::Quantity::ReR21;
  spec.switching = adr::SwitchFlavor::Sharp;
  spec.dw_dt = 3.0;
  spec.dw_eps = 3.0e-2;
  spec.dw_dx = 0.3;
  spec.alpha1_range = {0.1, 3.0, n};
  spec.alpha2_range = {0.1, 3.0, n};

  int max_jobs = 1;
#ifdef _OPENMP
  max_jobs = omp_get_max_threads();
#endif

  std::printf("grid %dx%d, quantity ReR21 (sharp rate)\n", n, n);
  std::printf("%-8s %-12s %-10s %s\n", "jobs", "seconds", "speedup", "checksum");
  double base = 0.0;
  std::vector<int> jobs_list{1, 2, 4, max_jobs};
  jobs_list.erase(std::unique(jobs_list.begin(), jobs_list.end()), jobs_list.end());
  for (int jobs : jobs_list) {
    if (jobs > max_jobs) continue;
    double sum = 0.0;
    double sec = run_once(spec, jobs, &sum);
    if (jobs == 1) base = sec;
    std::printf("%-8d %-12.3f %-10.2f %.12e\n", jobs, sec, base / sec, sum);
  }
  return 0;
}
