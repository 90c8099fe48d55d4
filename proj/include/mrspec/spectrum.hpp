#pragma once

#include "mrspec/potential.hpp"
#include "mrspec/units.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mrspec {

/// Radial quantum number n (interior nodes) and orbital quantum number l.
struct QuantumState {
  int n = 0;
  int l = 0;

  /// Spectroscopic label N + letter with N = n + l + 1, e.g. "2p" for (0, 1).
  std::string label() const;
  /// Inverse of label(); throws ConfigError for malformed labels or N < l + 1.
  static QuantumState parse(std::string_view label);

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

/// Quantities of the closed-form solution for one (n, l) level.
struct NUSolution {
  double a = 0.0;
  double Lambda = 0.0;
  double epsilon = 0.0;
  double energy = 0.0;
};

struct NUParameters {
  double a = 0.0;
  double Lambda = 0.0;
};

/// a = sqrt((1-2 alpha)^2 + 4 l(l+1)), Lambda = (a-1)/2.
NUParameters nu_parameters(const PotentialParams& p, const QuantumState& s);

/// [A - (n+1)^2 - l(l+1) - (2n+1) Lambda] / [2 (n+1+Lambda)], without the
/// bound-state check. Negative below threshold.
double epsilon_raw(const PotentialParams& p, const QuantumState& s);

/// epsilon_raw for bound states; NoBoundStateError otherwise.
double epsilon_of(const PotentialParams& p, const QuantumState& s);

/// E = -hbar^2/(2 mu b^2) epsilon^2. Evaluated for any state (0 at threshold).
double energy(const PotentialParams& p, const UnitSystem& u, const QuantumState& s);

/// Full solution record; NoBoundStateError if the state is not bound.
NUSolution solve_state(const PotentialParams& p, const UnitSystem& u, const QuantumState& s);

/// A_c = (n+1+Lambda)^2 - Lambda(Lambda+1) + l(l+1).
double critical_coupling(const QuantumState& s, double alpha);

/// A > A_c, strictly.
bool is_bound(const PotentialParams& p, const QuantumState& s);

struct StateEnergy {
  QuantumState state;
  double energy = 0.0;
};

/// Every bound (n, l) with l <= l_max, sorted by energy (ties by l, then n).
std::vector<StateEnergy> enumerate_bound_states(const PotentialParams& p, const UnitSystem& u,
                                                int l_max);

/// Coupling A for the Hulthen form -V0 e^{-delta r}/(1-e^{-delta r}) with
/// V0 = Z e^2 delta, i.e. A hbar^2/(2 mu b^2) = Z e^2 delta and b = 1/delta.
double hulthen_coupling(double Z, double delta, const UnitSystem& u);

/// -[A - N^2]^2 hbar^2 / (8 mu b^2 N^2), N = n + l + 1.
double hulthen_energy(double A, double b, const UnitSystem& u, const QuantumState& s);

/// -Z^2 mu e^4 / (2 hbar^2 N^2).
double coulomb_energy(double Z, const UnitSystem& u, const QuantumState& s);

} // namespace mrspec
