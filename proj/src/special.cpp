#include "mrspec/special.hpp"

#include "mrspec/errors.hpp"

#include <cmath>

namespace mrspec {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma requires a positive finite argument");
  int sign = 1;
  // lgamma_r leaves the global signgam alone.
  return ::lgamma_r(x, &sign);
}

void JacobiParams::validate() const {
  if (n < 0)
    throw DomainError("Jacobi degree must be non-negative");
  if (!(rho > -1.0) || !(nu > -1.0))
    throw DomainError("Jacobi indices must exceed -1");
}

double jacobi(const JacobiParams& jp, double xi) {
  jp.validate();
  const double a = jp.rho;
  const double b = jp.nu;
  double p_prev = 1.0;
  if (jp.n == 0)
    return p_prev;
  double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (xi - 1.0);
  for (int k = 2; k <= jp.n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * xi + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  return p;
}

} // namespace mrspec
