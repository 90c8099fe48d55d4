#pragma once

#include <functional>

namespace mrspec {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. The
/// interval with the largest error estimate is bisected until the total
/// estimate meets max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// As integrate(), but [a, b] is first split geometrically towards each
/// endpoint flagged singular (a + (b-a) 2^-k, k = 1..levels) so that
/// integrable power-law endpoint behaviour does not starve the adaptive
/// refinement.
QuadratureResult integrate_singular(const std::function<double(double)>& f, double a, double b,
                                    bool singular_at_a, bool singular_at_b,
                                    const QuadratureOptions& opts = {}, int levels = 40);

} // namespace mrspec
