#include "mrspec/potential.hpp"

#include "mrspec/errors.hpp"

#include <cmath>
#include <string>

namespace mrspec {

namespace {

void require_positive_r(double r) {
  if (!(r > 0.0))
    throw DomainError("radius must be positive");
}

// u = e^{-x} / (1 - e^{-x}), with the denominator from expm1 so that small x
// does not cancel.
double screened_ratio(double x) { return std::exp(-x) / -std::expm1(-x); }

} // namespace

void PotentialParams::validate() const {
  if (!(b > 0.0) || !std::isfinite(b))
    throw DomainError("screening length b must be positive");
  if (!std::isfinite(A) || !std::isfinite(alpha))
    throw DomainError("A and alpha must be finite");
}

CDForm CDForm::from(const PotentialParams& p) { return {p.A, -p.A - p.kappa()}; }

std::string_view CentrifugalScheme::name() const {
  switch (kind) {
  case Kind::exact:
    return "exact";
  case Kind::greene_aldrich:
    return "greene_aldrich";
  case Kind::shifted:
    return "shifted";
  }
  return "?";
}

CentrifugalScheme CentrifugalScheme::parse(std::string_view text) {
  if (text == "exact")
    return exact();
  if (text == "greene_aldrich" || text == "greene-aldrich" || text == "ga")
    return greene_aldrich();
  if (text == "shifted")
    return shifted();
  throw ConfigError("unknown centrifugal scheme '" + std::string(text) + "'");
}

double mr_value(const PotentialParams& p, const UnitSystem& u, double r) {
  p.validate();
  require_positive_r(r);
  const double x = r / p.b;
  const double ratio = screened_ratio(x);
  return energy_scale(u, p.b) * (p.kappa() * ratio * ratio - p.A * ratio);
}

double mr_value_cd(const CDForm& cd, double b, const UnitSystem& u, double r) {
  require_positive_r(r);
  // -(C z + D z^2)/(1-z)^2 == -C u - (C + D) u^2; the u form avoids
  // dividing a cancelled numerator by a small (1-z)^2.
  const double ratio = screened_ratio(r / b);
  return -energy_scale(u, b) * (cd.C * ratio + (cd.C + cd.D) * ratio * ratio);
}

std::optional<PotentialMinimum> minimum(const PotentialParams& p, const UnitSystem& u) {
  p.validate();
  const double kappa = p.kappa();
  if (!(kappa > 0.0) || !(p.A > 0.0))
    return std::nullopt;
  // V/scale = kappa u^2 - A u with u = e^{-r/b}/(1-e^{-r/b}) in (0, inf);
  // stationary at u = A / (2 kappa).
  const double r0 = p.b * std::log1p(2.0 * kappa / p.A);
  const double v0 = -energy_scale(u, p.b) * p.A * p.A / (4.0 * kappa);
  return PotentialMinimum{r0, v0};
}

double force_constant(const PotentialParams& p, const UnitSystem& u) {
  if (!minimum(p, u))
    throw DomainError("potential has no interior minimum for these parameters");
  const double kappa = p.kappa();
  const double bracket = p.A + 2.0 * kappa;
  const double b4 = std::pow(p.b, 4);
  return u.kinetic_coefficient() * p.A * p.A * bracket * bracket /
         (8.0 * b4 * kappa * kappa * kappa);
}

double centrifugal_term(const CentrifugalScheme& s, double b, double r) {
  require_positive_r(r);
  if (s.kind == CentrifugalScheme::Kind::exact)
    return 1.0 / (r * r);
  if (!(b > 0.0))
    throw DomainError("screening length b must be positive");
  const double x = r / b;
  const double one_minus_z = -std::expm1(-x);
  const double ga = std::exp(-x) / (one_minus_z * one_minus_z) / (b * b);
  if (s.kind == CentrifugalScheme::Kind::greene_aldrich)
    return ga;
  return ga + s.shift_c0 / (b * b);
}

} // namespace mrspec
