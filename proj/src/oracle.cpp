#include "mrspec/oracle.hpp"

#include "mrspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mrspec {

namespace {

constexpr double kConvergenceFraction = 1e-7;
constexpr int kMinGridPoints = 1000;

// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;
};

// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
int sturm_count(const Tridiagonal& t, double x) {
  const double off2 = t.off * t.off;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    q = (t.diag[i] - x) - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0)
      q = -tiny;
    if (q < 0.0)
      ++count;
  }
  return count;
}

double bisect_eigenvalue(const Tridiagonal& t, int index, double lo, double hi) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (sturm_count(t, mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solve (T - shift) x = rhs in place by Gaussian elimination with partial
// pivoting (the tridiagonal case of LAPACK's gttrf/gttrs).
void shifted_solve(const Tridiagonal& t, double shift, std::vector<double>& rhs) {
  const std::size_t n = t.diag.size();
  const double guard = std::numeric_limits<double>::epsilon() *
                       (std::abs(t.diag.front()) + 2.0 * std::abs(t.off) + std::abs(shift));
  std::vector<double> d(n), du(n, 0.0), du2(n, 0.0), dl(n, t.off);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = t.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i)
    du[i] = t.off;
  std::vector<char> swapped(n, 0);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0)
        d[i] = guard;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0)
    d[n - 1] = guard;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i])
      std::swap(rhs[i], rhs[i + 1]);
    rhs[i + 1] -= dl[i] * rhs[i];
  }
  rhs[n - 1] /= d[n - 1];
  if (n >= 2)
    rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
  for (std::size_t ii = n - 2; ii-- > 0;)
    rhs[ii] = (rhs[ii] - du[ii] * rhs[ii + 1] - du2[ii] * rhs[ii + 2]) / d[ii];
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double shift) {
  const std::size_t n = t.diag.size();
  std::vector<double> x(n);
  // Deterministic start with components in every eigendirection.
  for (std::size_t i = 0; i < n; ++i)
    x[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  for (int iter = 0; iter < 4; ++iter) {
    shifted_solve(t, shift, x);
    double norm = 0.0;
    for (double v : x)
      norm = std::max(norm, std::abs(v));
    for (double& v : x)
      v /= norm;
  }
  return x;
}

struct Level {
  Tridiagonal matrix;
  std::vector<double> r;
  std::vector<double> U;
  double h = 0.0;
};

Level discretize(const std::function<double(double)>& U, double kinetic, const GridSpec& grid) {
  Level lv;
  lv.h = (grid.r_max - grid.r_min) / grid.grid_points;
  const auto nodes = static_cast<std::size_t>(grid.grid_points - 1);
  lv.r.resize(nodes);
  lv.U.resize(nodes);
  lv.matrix.diag.resize(nodes);
  const double kin = kinetic / (lv.h * lv.h);
  for (std::size_t i = 0; i < nodes; ++i) {
    lv.r[i] = grid.r_min + static_cast<double>(i + 1) * lv.h;
    lv.U[i] = U(lv.r[i]);
    if (!std::isfinite(lv.U[i]))
      throw DomainError("effective potential is not finite at r = " + std::to_string(lv.r[i]));
    lv.matrix.diag[i] = 2.0 * kin + lv.U[i];
  }
  lv.matrix.off = -kin;
  return lv;
}

// Rayleigh quotient in difference form: the kinetic part is a sum of
// squares, so it carries no cancellation against the 1/h^2 diagonal.
double rayleigh_quotient(const Level& lv, double kinetic, const std::vector<double>& psi) {
  long double kin = 0.0L, pot = 0.0L, norm = 0.0L;
  double prev = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double d = psi[i] - prev;
    kin += static_cast<long double>(d) * d;
    pot += static_cast<long double>(lv.U[i]) * psi[i] * psi[i];
    norm += static_cast<long double>(psi[i]) * psi[i];
    prev = psi[i];
  }
  kin += static_cast<long double>(prev) * prev;
  const long double value = (kin * kinetic / (lv.h * lv.h) + pot) / norm;
  return static_cast<double>(value);
}

struct LevelEigen {
  double value = 0.0;
  std::vector<double> vector;
};

// Lowest min(k, #negative) eigenpairs of one discretization.
std::vector<LevelEigen> lowest_bound(const Level& lv, double kinetic, int k, bool keep_vectors) {
  const auto& t = lv.matrix;
  const double lower =
      *std::min_element(t.diag.begin(), t.diag.end()) - 2.0 * std::abs(t.off) - 1.0;
  const int bound = std::min(k, sturm_count(t, 0.0));
  std::vector<LevelEigen> out;
  out.reserve(static_cast<std::size_t>(std::max(bound, 0)));
  for (int j = 0; j < bound; ++j) {
    const double located = bisect_eigenvalue(t, j, lower, 0.0);
    auto vec = inverse_iteration(t, located);
    LevelEigen e;
    e.value = rayleigh_quotient(lv, kinetic, vec);
    if (keep_vectors)
      e.vector = std::move(vec);
    out.push_back(std::move(e));
  }
  return out;
}

void validate_grid(const GridSpec& g) {
  if (!(g.r_min > 0.0))
    throw DomainError("radial grid must not touch r = 0");
  if (!(g.r_max > g.r_min))
    throw DomainError("radial grid requires r_min < r_max");
  if (g.grid_points < kMinGridPoints)
    throw DomainError("radial grid needs at least 1000 intervals");
}

std::function<double(double)> effective_potential(const RadialProblem& rp) {
  const double ll = static_cast<double>(rp.l) * (rp.l + 1);
  const double kin = rp.units.kinetic_coefficient();
  return [=](double r) {
    double value = mr_value(rp.params, rp.units, r);
    if (ll != 0.0)
      value += kin * ll * centrifugal_term(rp.scheme, rp.params.b, r);
    return value;
  };
}

} // namespace

void RadialProblem::validate() const {
  params.validate();
  if (l < 0)
    throw DomainError("l must be non-negative");
  validate_grid({r_min, r_max, grid_points});
}

RadialProblem default_problem(const PotentialParams& p, const UnitSystem& u, int l,
                              CentrifugalScheme scheme, int n_max) {
  p.validate();
  RadialProblem rp;
  rp.params = p;
  rp.units = u;
  rp.l = l;
  rp.scheme = scheme;
  rp.r_min = 1e-6 * p.b;
  const double eps = epsilon_raw(p, {std::max(n_max, 0), l});
  rp.r_max = eps > 0.0 ? 60.0 * p.b / eps : 100.0 * p.b;
  rp.grid_points = 20000;
  return rp;
}

SampledPotential build_effective_potential(const RadialProblem& rp) {
  rp.validate();
  const auto U = effective_potential(rp);
  const double h = (rp.r_max - rp.r_min) / rp.grid_points;
  SampledPotential out;
  out.r.reserve(static_cast<std::size_t>(rp.grid_points - 1));
  out.U.reserve(static_cast<std::size_t>(rp.grid_points - 1));
  for (int i = 1; i < rp.grid_points; ++i) {
    const double r = rp.r_min + i * h;
    out.r.push_back(r);
    out.U.push_back(U(r));
  }
  return out;
}

NumericalSpectrum solve_potential(const std::function<double(double)>& U, double kinetic_coefficient,
                                  const GridSpec& grid, int k, double energy_scale) {
  if (k < 1)
    throw DomainError("number of requested eigenvalues must be at least 1");
  validate_grid(grid);

  std::vector<std::vector<LevelEigen>> runs;
  for (int factor : {1, 2, 4}) {
    GridSpec g = grid;
    g.grid_points = grid.grid_points * factor;
    runs.push_back(lowest_bound(discretize(U, kinetic_coefficient, g), kinetic_coefficient, k,
                                false));
  }
  std::size_t bound = runs[0].size();
  for (const auto& run : runs)
    bound = std::min(bound, run.size());

  NumericalSpectrum out;
  out.grid = grid;
  out.energy_scale = energy_scale;
  out.requested = k;
  for (std::size_t j = 0; j < bound; ++j) {
    // Second-order scheme: E(h) = E + c h^2 + O(h^4).
    const double coarse = (4.0 * runs[1][j].value - runs[0][j].value) / 3.0;
    const double fine = (4.0 * runs[2][j].value - runs[1][j].value) / 3.0;
    if (!(fine < 0.0))
      break;
    const double delta = fine - coarse;
    out.eigenvalues.push_back(fine);
    out.richardson_delta.push_back(delta);
    out.converged.push_back(std::abs(delta) < kConvergenceFraction * energy_scale);
  }
  return out;
}

NumericalSpectrum solve(const RadialProblem& rp, int k) {
  rp.validate();
  auto out = solve_potential(effective_potential(rp), rp.units.kinetic_coefficient(),
                             {rp.r_min, rp.r_max, rp.grid_points}, k,
                             energy_scale(rp.units, rp.params.b));
  out.l = rp.l;
  out.scheme = std::string(rp.scheme.name());
  return out;
}

SampledEigenvector eigenvector(const RadialProblem& rp, int index) {
  rp.validate();
  if (index < 0)
    throw DomainError("eigenvector index must be non-negative");
  const double kin = rp.units.kinetic_coefficient();
  const auto lv = discretize(effective_potential(rp), kin, {rp.r_min, rp.r_max, rp.grid_points});
  auto eig = lowest_bound(lv, kin, index + 1, true);
  if (static_cast<int>(eig.size()) <= index)
    throw NoBoundStateError("level " + std::to_string(index) + " is not bound on this grid");
  auto& e = eig[static_cast<std::size_t>(index)];
  double norm = 0.0;
  for (double v : e.vector)
    norm += v * v * lv.h;
  norm = std::sqrt(norm);
  // Positive near the origin, matching the closed-form convention.
  const auto first = std::find_if(e.vector.begin(), e.vector.end(),
                                  [](double v) { return std::abs(v) > 0.0; });
  const double sign = (first != e.vector.end() && *first < 0.0) ? -1.0 : 1.0;
  for (double& v : e.vector)
    v *= sign / norm;
  return {e.value, lv.r, std::move(e.vector)};
}

int count_nodes(std::span<const double> psi, double floor) {
  double peak = 0.0;
  for (double v : psi)
    peak = std::max(peak, std::abs(v));
  const double cut = floor * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : psi) {
    if (std::abs(v) <= cut)
      continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign)
      ++nodes;
    last_sign = s;
  }
  return nodes;
}

ComparisonReport compare(std::span<const StateEnergy> analytic, const NumericalSpectrum& numeric) {
  if (analytic.size() != numeric.eigenvalues.size())
    throw AlignmentError("analytic list has " + std::to_string(analytic.size()) +
                         " states but the numerical spectrum has " +
                         std::to_string(numeric.eigenvalues.size()));
  ComparisonReport report;
  report.scheme = numeric.scheme;
  std::vector<bool> seen(analytic.size(), false);
  for (const auto& a : analytic) {
    if (a.state.l != numeric.l)
      throw AlignmentError("state " + a.state.label() + " does not match spectrum l = " +
                           std::to_string(numeric.l));
    const auto n = static_cast<std::size_t>(a.state.n);
    if (a.state.n < 0 || n >= numeric.eigenvalues.size() || seen[n])
      throw AlignmentError("state " + a.state.label() + " has no unique numerical partner");
    seen[n] = true;
  }
  auto ordered = std::vector<StateEnergy>(analytic.begin(), analytic.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const StateEnergy& x, const StateEnergy& y) { return x.state.n < y.state.n; });
  for (const auto& a : ordered) {
    const auto n = static_cast<std::size_t>(a.state.n);
    ComparisonEntry e;
    e.state = a.state;
    e.analytic = a.energy;
    e.numeric = numeric.eigenvalues[n];
    e.abs_dev = std::abs(e.numeric - e.analytic);
    e.rel_dev = e.analytic != 0.0 ? e.abs_dev / std::abs(e.analytic) : e.abs_dev;
    e.converged = n < numeric.converged.size() ? static_cast<bool>(numeric.converged[n]) : true;
    report.max_abs_dev = std::max(report.max_abs_dev, e.abs_dev);
    report.entries.push_back(e);
  }
  return report;
}

} // namespace mrspec
