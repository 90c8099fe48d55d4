#pragma once

#include "mrspec/potential.hpp"
#include "mrspec/spectrum.hpp"
#include "mrspec/units.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mrspec {

/// Radial equation -hbar^2/(2 mu) R'' + U(r) R = E R on [r_min, r_max] with
/// Dirichlet ends, U = V_MR + hbar^2 l(l+1)/(2 mu) * centrifugal_term.
struct RadialProblem {
  PotentialParams params;
  UnitSystem units = UnitSystem::atomic();
  int l = 0;
  CentrifugalScheme scheme = CentrifugalScheme::greene_aldrich();
  double r_min = 0.0;
  double r_max = 0.0;
  /// Number of uniform intervals on [r_min, r_max].
  int grid_points = 20000;

  void validate() const;
};

/// r_min = 1e-6 b, r_max = 60 b / eps with eps of the shallowest requested
/// level (n = n_max) from the closed form, 20000 intervals.
RadialProblem default_problem(const PotentialParams& p, const UnitSystem& u, int l,
                              CentrifugalScheme scheme, int n_max);

struct SampledPotential {
  std::vector<double> r;
  std::vector<double> U;
};

/// U on the interior nodes of the problem's grid.
SampledPotential build_effective_potential(const RadialProblem& rp);

struct GridSpec {
  double r_min = 0.0;
  double r_max = 0.0;
  int grid_points = 0;
};

struct NumericalSpectrum {
  /// Bound (negative) eigenvalues, ascending; index = radial quantum number.
  std::vector<double> eigenvalues;
  /// Per eigenvalue: Richardson estimates from successive grid pairs agree
  /// to 1e-7 * energy_scale.
  std::vector<bool> converged;
  /// Difference between the two Richardson estimates.
  std::vector<double> richardson_delta;
  GridSpec grid;
  int l = 0;
  std::string scheme;
  double energy_scale = 1.0;
  int requested = 0;

  bool shortfall() const { return static_cast<int>(eigenvalues.size()) < requested; }
};

/// Lowest k eigenvalues of the finite-difference radial Hamiltonian,
/// extrapolated from runs at grid_points, 2x and 4x.
NumericalSpectrum solve(const RadialProblem& rp, int k);

/// Same solver for an arbitrary effective potential U(r).
NumericalSpectrum solve_potential(const std::function<double(double)>& U, double kinetic_coefficient,
                                  const GridSpec& grid, int k, double energy_scale);

/// Eigenvector of the index-th level on the problem's own grid (no
/// extrapolation), normalised so that sum psi^2 h = 1.
struct SampledEigenvector {
  double eigenvalue = 0.0;
  std::vector<double> r;
  std::vector<double> psi;
};
SampledEigenvector eigenvector(const RadialProblem& rp, int index);

/// Sign changes of psi, ignoring entries below `floor` * max|psi|.
int count_nodes(std::span<const double> psi, double floor = 1e-9);

struct ComparisonEntry {
  QuantumState state;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  bool converged = true;
};

struct ComparisonReport {
  std::string scheme;
  std::vector<ComparisonEntry> entries;
  double max_abs_dev = 0.0;
};

/// Analytic energies for states n = 0..k-1 of the spectrum's l, in any
/// order, against the numerical eigenvalues. AlignmentError on length or l
/// mismatch. Entries come out ordered by n.
ComparisonReport compare(std::span<const StateEnergy> analytic, const NumericalSpectrum& numeric);

} // namespace mrspec
