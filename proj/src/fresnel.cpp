#include "ncbf/fresnel.hpp"

#include <cmath>
#include <cstddef>

#include "ncbf/array_channel.hpp"
#include "ncbf/errors.hpp"

namespace ncbf {

namespace {

// Simpson over [0, x] with the interval count growing as x^2 so the finest
// oscillation (local frequency ~ x) stays resolved.
template <typename F>
double simpson_0_to(double x, F f) {
    if (x == 0.0) return 0.0;
    const double ax = std::abs(x);
    std::size_t n = static_cast<std::size_t>(std::ceil(100.0 * ax * ax));
    if (n < 256) n = 256;
    if (n % 2 != 0) ++n;
    const double h = x / static_cast<double>(n);
    double acc = f(0.0) + f(x);
    for (std::size_t i = 1; i < n; ++i)
        acc += f(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

double fresnel_c(double x) {
    return simpson_0_to(x, [](double t) { return std::cos(0.5 * kPi * t * t); });
}

double fresnel_s(double x) {
    return simpson_0_to(x, [](double t) { return std::sin(0.5 * kPi * t * t); });
}

double correlation_of_beta(double beta) {
    if (!(beta > 0.0)) throw ConfigError("correlation_of_beta: beta must be > 0");
    return std::hypot(fresnel_c(beta), fresnel_s(beta)) / beta;
}

double beta_from_correlation(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw ConfigError("beta_from_correlation: rho must lie in (0, 1)");
    double lo = 1e-6, hi = 20.0;
    double glo = correlation_of_beta(lo) - rho;
    double ghi = correlation_of_beta(hi) - rho;
    if (glo * ghi > 0.0)
        throw NoRoot("beta_from_correlation: no root for rho " + std::to_string(rho) +
                     " on (1e-6, 20]");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = correlation_of_beta(mid) - rho;
        if (std::abs(gm) < 1e-6) return mid;
        if (glo * gm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ncbf
