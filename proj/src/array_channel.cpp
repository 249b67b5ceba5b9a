#include "ncbf/array_channel.hpp"

#include <cmath>

#include "ncbf/kernels.hpp"

namespace ncbf {

double rayleigh_distance(const ArrayConfig& config) {
    const double d = config.aperture();
    return 2.0 * d * d / config.wavelength();
}

double fresnel_distance(const ArrayConfig& config) {
    const double d = config.aperture();
    return std::cbrt(d * d * d * d / (8.0 * config.wavelength()));
}

ChannelVector channel_vector(const ArrayConfig& config, const UserLocation& loc) {
    const double lambda = config.wavelength();
    const double beta = config.propagation_constant();
    const double x = loc.range * std::cos(loc.angle);
    const double y = loc.range * std::sin(loc.angle);
    ChannelVector h(static_cast<std::size_t>(config.num_elements));
    for (int n = 0; n < config.num_elements; ++n) {
        const double rn = std::hypot(x, y - config.element_y(n));
        const double mag = lambda / (4.0 * kPi * rn);
        h[static_cast<std::size_t>(n)] = std::polar(mag, beta * rn);
    }
    return h;
}

double channel_correlation(const ChannelVector& a, const ChannelVector& b) {
    const auto& k = kernels::active();
    const double na = k.sum_abs_sq(a.data(), a.size());
    const double nb = k.sum_abs_sq(b.data(), b.size());
    const std::complex<double> inner = k.cdot(a.data(), b.data(), a.size());
    return std::abs(inner) / std::sqrt(na * nb);
}

double channel_correlation(const ArrayConfig& config, const UserLocation& a,
                           const UserLocation& b) {
    return channel_correlation(channel_vector(config, a), channel_vector(config, b));
}

}  // namespace ncbf
