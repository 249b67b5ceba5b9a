#pragma once

#include <complex>
#include <vector>

#include "ncbf/errors.hpp"

namespace ncbf {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

// Uniform linear array along the y-axis, centered on the origin.
struct ArrayConfig {
    int num_elements = 0;            // N
    double element_spacing = 0.0;    // d, meters
    double carrier_frequency = 0.0;  // f, hertz

    double wavelength() const { return kSpeedOfLight / carrier_frequency; }
    double propagation_constant() const { return 2.0 * kPi / wavelength(); }
    double aperture() const { return (num_elements - 1) * element_spacing; }

    // element n sits at (0, (n - (N-1)/2) * d)
    double element_y(int n) const {
        return (n - 0.5 * (num_elements - 1)) * element_spacing;
    }

    void validate() const {
        if (num_elements < 2) throw ConfigError("ArrayConfig: num_elements must be >= 2");
        if (!(element_spacing > 0.0)) throw ConfigError("ArrayConfig: element_spacing must be > 0");
        if (!(carrier_frequency > 0.0)) throw ConfigError("ArrayConfig: carrier_frequency must be > 0");
    }
};

// Polar position: boresight angle (from the array broadside / x-axis,
// positive toward +y) and range from the array center.
struct UserLocation {
    double angle = 0.0;  // radians
    double range = 0.0;  // meters

    void validate() const {
        if (!(range > 0.0)) throw ConfigError("UserLocation: range must be > 0");
        if (!(angle > -kPi / 2 && angle < kPi / 2))
            throw ConfigError("UserLocation: angle must lie in (-pi/2, pi/2)");
    }
};

using ChannelVector = std::vector<std::complex<double>>;

// 2 D^2 / lambda
double rayleigh_distance(const ArrayConfig& config);

// (D^4 / (8 lambda))^(1/3)
double fresnel_distance(const ArrayConfig& config);

// Spherical-wavefront response: entry n = lambda/(4 pi r_n) * exp(j beta r_n)
// with r_n the exact element-to-user distance.
ChannelVector channel_vector(const ArrayConfig& config, const UserLocation& loc);

// |h_a^H h_b| / (||h_a|| ||h_b||), in [0, 1]
double channel_correlation(const ArrayConfig& config, const UserLocation& a,
                           const UserLocation& b);

double channel_correlation(const ChannelVector& a, const ChannelVector& b);

}  // namespace ncbf
