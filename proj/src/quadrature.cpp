#include "adr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace adr {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; node 0 last).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex val;
  double err;
};

Panel eval_panel(const std::function<Complex(double)>& f, double a, double b, long* evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex kron = kWgk[7] * fc;
  Complex gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    Complex f1 = f(c - h * kXgk[i]);
    Complex f2 = f(c + h * kXgk[i]);
    kron += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  *evals += 15;
  kron *= h;
  gauss *= h;
  double diff = std::abs(kron - gauss);
  // QUADPACK-style error sharpening
  double err = diff;
  if (diff > 0.0) err = diff * std::min(1.0, std::pow(200.0 * diff / (1.0 + std::abs(kron)), 1.5));
  err = std::max(err, 1e-300);
  return {a, b, kron, std::max(err, diff * 1e-3)};
}

}  // namespace

QuadResult integrate_panels(const std::function<Complex(double)>& f,
                            const std::vector<double>& breaks, const QuadratureControl& qc) {
  QuadResult res;
  auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  Complex total(0.0, 0.0);
  double err_total = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i] == breaks[i + 1]) continue;
    Panel p = eval_panel(f, breaks[i], breaks[i + 1], &res.n_evals);
    total += p.val;
    err_total += p.err;
    heap.push(p);
  }
  int splits = 0;
  while (err_total > qc.abs_tol && err_total > qc.rel_tol * std::abs(total) &&
         splits < qc.max_subdivisions && !heap.empty()) {
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval at FP resolution
    Panel l = eval_panel(f, worst.a, mid, &res.n_evals);
    Panel r = eval_panel(f, mid, worst.b, &res.n_evals);
    total += l.val + r.val - worst.val;
    err_total += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++splits;
  }
  res.value = total;
  res.err = err_total;
  res.converged = err_total <= std::max(qc.abs_tol, qc.rel_tol * std::abs(total)) * 1.001 ||
                  err_total <= 1e-13 * (1.0 + std::abs(total));
  return res;
}

QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     const QuadratureControl& qc) {
  return integrate_panels(f, {a, b}, qc);
}

std::vector<double> oscillation_breaks(double a, double b, double omega, int max_panels) {
  std::vector<double> out{a};
  double w = std::abs(omega);
  if (w > 0.0 && b > a) {
    double step = kPi / w;
    int n = static_cast<int>((b - a) / step);
    if (n > max_panels) step = (b - a) / max_panels;
    for (double x = a + step; x < b - 0.5 * step; x += step) out.push_back(x);
  }
  out.push_back(b);
  return out;
}

std::vector<double> merge_breaks(std::vector<double> breaks, const std::vector<double>& extra) {
  double lo = breaks.front(), hi = breaks.back();
  for (double x : extra) {
    if (x > lo && x < hi) breaks.push_back(x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

}  // namespace adr
