#ifndef WSFLOW_HYPERGEOM_HPP
#define WSFLOW_HYPERGEOM_HPP

namespace wsflow {

/// True when x is a nonpositive integer (within floating tolerance), in which
/// case the 2F1 series terminates at degree -x.
bool is_nonpositive_integer(double x);

/// Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)) via log-gamma with sign
/// tracking; valid away from poles of the numerator.
double gamma_ratio_gauss(double a, double b, double c);

/// 2F1(a,b;c;1) by Gauss's summation (c > a+b, c > 0) or by the exact
/// terminating series when a or b is a nonpositive integer.  Both branches
/// agree where both apply.  Throws std::domain_error otherwise.
double hypergeom_2f1_at_1(double a, double b, double c);

/// 2F1(a,b;c;x) for x in [0,1): power series with term-ratio stopping at
/// relative tolerance 1e-14.  x == 1 dispatches to hypergeom_2f1_at_1.
/// Throws std::domain_error outside the convergent regime.
double hypergeom_2f1(double a, double b, double c, double x);

} // namespace wsflow

#endif
