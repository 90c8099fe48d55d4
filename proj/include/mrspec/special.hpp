#pragma once

namespace mrspec {

/// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

/// Degree and indices of a Jacobi polynomial P_n^{(rho, nu)}.
struct JacobiParams {
  int n = 0;
  double rho = 0.0;
  double nu = 0.0;

  void validate() const;
};

/// P_n^{(rho, nu)}(xi) by the three-term recurrence in degree.
double jacobi(const JacobiParams& jp, double xi);

} // namespace mrspec
