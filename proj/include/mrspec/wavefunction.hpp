#pragma once

#include "mrspec/potential.hpp"
#include "mrspec/spectrum.hpp"
#include "mrspec/units.hpp"

namespace mrspec {

/// Beta-type integral  int_0^1 z^{n+2eps+r-p-1} (1-z)^{p+2Lambda+2} dz
/// = Gamma(n+2eps+r-p+1) Gamma(p+2Lambda+3) / [(n+2eps+r-p) Gamma(n+2eps+r+2Lambda+3)].
/// DomainError unless n + 2 eps + r - p > 0.
double hyp_integral(int n, double epsilon, double Lambda, int p, int r);
/// Natural log of hyp_integral (the integral is always positive).
double log_hyp_integral(int n, double epsilon, double Lambda, int p, int r);

/// The integral s(n) = int_0^inf |R/N|^2 dr in closed form, from the
/// explicit Jacobi sums and hyp_integral. Proportional to b.
double normalization_integral(const QuantumState& state, double epsilon, double Lambda, double b);

/// N_nl = 1 / sqrt(s(n)). NumericalError if s(n) <= 0.
double normalization_constant(const QuantumState& state, double epsilon, double Lambda, double b);

/// R_nl(r) = N z^eps (1-z)^{1+Lambda} P_n^{(2 eps, 2 Lambda + 1)}(1 - 2z), z = e^{-r/b}.
struct RadialWavefunction {
  QuantumState state;
  double epsilon = 0.0;
  double Lambda = 0.0;
  double b = 1.0;
  double norm = 0.0;
};

/// Bound-state wavefunction of the Manning-Rosen potential under the
/// Greene-Aldrich centrifugal approximation. NoBoundStateError if unbound.
RadialWavefunction make_radial_wavefunction(const PotentialParams& p, const QuantumState& s);

double radial_value(const RadialWavefunction& w, double r);

/// The alpha in {0, 1} (Hulthen) case parameterised by Z and delta = 1/b.
RadialWavefunction make_hulthen_wavefunction(double Z, double delta, const UnitSystem& u,
                                             const QuantumState& s);
double hulthen_wavefunction(double Z, double delta, const UnitSystem& u, const QuantumState& s,
                            double r);

} // namespace mrspec
