#pragma once

namespace ncbf {

// Fresnel integrals C(x) = int_0^x cos(pi t^2 / 2) dt and
// S(x) = int_0^x sin(pi t^2 / 2) dt, evaluated by composite Simpson
// quadrature with the panel count scaled to the integrand's oscillation.
double fresnel_c(double x);
double fresnel_s(double x);

// Fresnel-approximation correlation between adjacent radial samples:
// g(beta) = |C(beta) + j S(beta)| / beta. Tends to 1 as beta -> 0+.
double correlation_of_beta(double beta);

// Invert g on (1e-6, 20] by bisection to |g(beta) - rho| < 1e-6.
// Throws NoRoot when rho is outside g's range on the bracket.
double beta_from_correlation(double rho);

}  // namespace ncbf
