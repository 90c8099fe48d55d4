#pragma once

#include "mrspec/units.hpp"

#include <optional>
#include <string_view>

namespace mrspec {

/// Parameters of the Manning-Rosen potential
///
///   V(r) = hbar^2/(2 mu b^2) [ alpha(alpha-1) e^{-2r/b} / (1-e^{-r/b})^2
///                              - A e^{-r/b} / (1-e^{-r/b}) ].
///
/// A and alpha are dimensionless; b is a length in the active unit system.
struct PotentialParams {
  double A = 0.0;
  double alpha = 0.0;
  double b = 1.0;

  /// Throws DomainError unless b > 0 and A, alpha are finite.
  void validate() const;
  /// alpha (alpha - 1); the potential depends on alpha only through this.
  double kappa() const { return alpha * (alpha - 1.0); }
};

/// V(r) = -(C e^{-r/b} + D e^{-2r/b}) / (1-e^{-r/b})^2, times hbar^2/(2 mu b^2).
struct CDForm {
  double C = 0.0;
  double D = 0.0;

  static CDForm from(const PotentialParams& p);
};

struct CentrifugalScheme {
  enum class Kind { exact, greene_aldrich, shifted };

  Kind kind = Kind::greene_aldrich;
  double shift_c0 = 1.0 / 12.0;

  static CentrifugalScheme exact() { return {Kind::exact, 0.0}; }
  static CentrifugalScheme greene_aldrich() { return {Kind::greene_aldrich, 0.0}; }
  static CentrifugalScheme shifted(double c0 = 1.0 / 12.0) { return {Kind::shifted, c0}; }

  std::string_view name() const;
  /// Accepts "exact", "greene_aldrich" (or "greene-aldrich", "ga"), "shifted".
  static CentrifugalScheme parse(std::string_view text);
};

double mr_value(const PotentialParams& p, const UnitSystem& u, double r);
double mr_value_cd(const CDForm& cd, double b, const UnitSystem& u, double r);

struct PotentialMinimum {
  double r0 = 0.0;
  double v0 = 0.0;
};

/// Interior minimum; none unless alpha(alpha-1) > 0 and A > 0.
std::optional<PotentialMinimum> minimum(const PotentialParams& p, const UnitSystem& u);

/// d^2V/dr^2 at the minimum (energy / length^2). DomainError if no minimum.
double force_constant(const PotentialParams& p, const UnitSystem& u);

/// The 1/r^2 factor of the centrifugal barrier, or its approximation.
double centrifugal_term(const CentrifugalScheme& s, double b, double r);

} // namespace mrspec
