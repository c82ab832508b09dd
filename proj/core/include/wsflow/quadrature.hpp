#ifndef WSFLOW_QUADRATURE_HPP
#define WSFLOW_QUADRATURE_HPP

#include <functional>

namespace wsflow {

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
/// Intervals are bisected until the global K15-G7 error estimate drops below
/// abs_tol; endpoint algebraic singularities are resolved by the subdivision
/// cascade.  Returns the best estimate once the interval budget is spent;
/// throws std::runtime_error on non-finite results.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9, int max_intervals = 20000);

} // namespace wsflow

#endif
