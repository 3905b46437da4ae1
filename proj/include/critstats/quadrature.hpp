#pragma once

#include <functional>

namespace critstats {

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to absolute
/// tolerance `tol`. Intervals are bisected greedily by error estimate.
/// Integrable endpoint singularities should be removed by substitution
/// before calling; the mp module does this for the 1/sqrt(t) edge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_intervals = 20000);

}  // namespace critstats
