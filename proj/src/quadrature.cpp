#include "mrspec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace mrspec {

namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the
// odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1)
      gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  QuadratureResult result;
  if (a == b)
    return {0.0, 0.0, 0, true};

  std::priority_queue<Segment> heap;
  auto first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  result.evaluations = 15;

  for (int i = 0; i < opts.max_subdivisions; ++i) {
    if (total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
      result.converged = true;
      break;
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Stop before Kronrod nodes round onto the endpoints.
    const double floor =
        64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(worst.a), std::abs(worst.b));
    if (mid <= worst.a || mid >= worst.b || std::abs(worst.b - worst.a) <= floor)
      break;
    heap.pop();
    const auto left = gk15(f, worst.a, mid);
    const auto right = gk15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  result.value = total;
  result.abs_error = total_err;
  if (!result.converged)
    result.converged = total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  return result;
}

QuadratureResult integrate_singular(const std::function<double(double)>& f, double a, double b,
                                    bool singular_at_a, bool singular_at_b,
                                    const QuadratureOptions& opts, int levels) {
  std::vector<double> cuts{a, b};
  const double width = b - a;
  double frac = singular_at_a && singular_at_b ? 0.25 : 0.5;
  for (int k = 0; k < levels; ++k, frac *= 0.5) {
    if (singular_at_a)
      cuts.push_back(a + width * frac);
    if (singular_at_b)
      cuts.push_back(b - width * frac);
  }
  if (singular_at_a && singular_at_b)
    cuts.push_back(a + 0.5 * width);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadratureResult total{0.0, 0.0, 0, true};
  const auto pieces = static_cast<double>(cuts.size() - 1);
  QuadratureOptions piece_opts = opts;
  piece_opts.abs_tol = opts.abs_tol / pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto part = integrate(f, cuts[i], cuts[i + 1], piece_opts);
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.evaluations += part.evaluations;
  }
  total.converged = total.abs_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total.value));
  return total;
}

} // namespace mrspec
