#include "mrspec/wavefunction.hpp"

#include "mrspec/errors.hpp"
#include "mrspec/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace mrspec {

namespace {

void require_positive_eps(double epsilon) {
  if (!(epsilon > 0.0))
    throw DomainError("epsilon must be positive for a normalizable state");
}

} // namespace

double log_hyp_integral(int n, double epsilon, double Lambda, int p, int r) {
  const double alpha0 = n + 2.0 * epsilon + r - p;
  if (!(alpha0 > 0.0))
    throw DomainError("hyp_integral diverges: n + 2 eps + r - p must be positive");
  // Gamma(alpha0 + 1) / alpha0 == Gamma(alpha0).
  return log_gamma(alpha0) + log_gamma(p + 2.0 * Lambda + 3.0) -
         log_gamma(n + 2.0 * epsilon + r + 2.0 * Lambda + 3.0);
}

double hyp_integral(int n, double epsilon, double Lambda, int p, int r) {
  return std::exp(log_hyp_integral(n, epsilon, Lambda, p, r));
}

double normalization_integral(const QuantumState& state, double epsilon, double Lambda, double b) {
  require_positive_eps(epsilon);
  if (!(b > 0.0))
    throw DomainError("screening length b must be positive");
  // s-waves with 0 < alpha < 1 have Lambda in [-1/2, 0).
  if (!(Lambda >= -0.5))
    throw DomainError("Lambda must be at least -1/2");
  const int n = state.n;
  const double two_eps = 2.0 * epsilon;
  const double two_lam = 2.0 * Lambda;

  // Product of the two explicit Jacobi sums, integrated term by term.
  struct Term {
    double log_mag;
    int sign;
  };
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int p = 0; p <= n; ++p) {
    for (int r = 0; r <= n; ++r) {
      const double log_mag =
          log_gamma(n + two_eps + two_lam + r + 2.0) + log_hyp_integral(n, epsilon, Lambda, p, r) -
          (log_gamma(p + 1.0) + log_gamma(r + 1.0) + log_gamma(n - p + 1.0) +
           log_gamma(n - r + 1.0) + log_gamma(p + two_lam + 2.0) +
           log_gamma(n + two_eps - p + 1.0) + log_gamma(two_eps + r + 1.0));
      terms.push_back({log_mag, (n + p + r) % 2 == 0 ? 1 : -1});
    }
  }
  const double peak =
      std::max_element(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return x.log_mag < y.log_mag;
      })->log_mag;
  long double sum = 0.0L;
  for (const auto& t : terms)
    sum += static_cast<long double>(t.sign) * std::exp(static_cast<long double>(t.log_mag - peak));

  if (!(sum > 0.0L))
    throw NumericalError("normalization sum is non-positive for state " + state.label() +
                         " (eps=" + std::to_string(epsilon) + ", Lambda=" +
                         std::to_string(Lambda) + ")");

  const double log_prefactor = std::log(b) + log_gamma(n + two_lam + 2.0) +
                               2.0 * log_gamma(n + two_eps + 1.0) -
                               log_gamma(n + two_eps + two_lam + 2.0);
  return std::exp(log_prefactor + peak + std::log(static_cast<double>(sum)));
}

double normalization_constant(const QuantumState& state, double epsilon, double Lambda, double b) {
  return 1.0 / std::sqrt(normalization_integral(state, epsilon, Lambda, b));
}

RadialWavefunction make_radial_wavefunction(const PotentialParams& p, const QuantumState& s) {
  p.validate();
  const double eps = epsilon_of(p, s);
  const double Lambda = nu_parameters(p, s).Lambda;
  return {s, eps, Lambda, p.b, normalization_constant(s, eps, Lambda, p.b)};
}

double radial_value(const RadialWavefunction& w, double r) {
  if (r < 0.0)
    throw DomainError("radius must be non-negative");
  if (r == 0.0)
    return 0.0;
  if (std::isinf(r))
    return 0.0;
  const double x = r / w.b;
  const double z = std::exp(-x);
  const double one_minus_z = -std::expm1(-x);
  const double envelope =
      std::exp(-w.epsilon * x + (1.0 + w.Lambda) * std::log(one_minus_z));
  const double poly = jacobi({w.state.n, 2.0 * w.epsilon, 2.0 * w.Lambda + 1.0}, 1.0 - 2.0 * z);
  return w.norm * envelope * poly;
}

RadialWavefunction make_hulthen_wavefunction(double Z, double delta, const UnitSystem& u,
                                             const QuantumState& s) {
  if (!(delta > 0.0))
    throw DomainError("screening parameter delta must be positive");
  if (s.n < 0 || s.l < 0)
    throw DomainError("quantum numbers must be non-negative");
  const double N = s.n + s.l + 1.0;
  const double coupling = Z * u.e2 * u.mu;
  const double eps =
      coupling / (u.hbar * u.hbar * delta) * (1.0 / N - u.hbar * u.hbar * delta * N / (2.0 * coupling));
  if (!(eps > 0.0))
    throw NoBoundStateError("Hulthen state " + s.label() + " is not bound");
  const double b = 1.0 / delta;
  const double Lambda = static_cast<double>(s.l);
  return {s, eps, Lambda, b, normalization_constant(s, eps, Lambda, b)};
}

double hulthen_wavefunction(double Z, double delta, const UnitSystem& u, const QuantumState& s,
                            double r) {
  return radial_value(make_hulthen_wavefunction(Z, delta, u, s), r);
}

} // namespace mrspec
