#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncbf/array_channel.hpp"

namespace ncbf {

struct PartitionSpec {
    double r_min = 0.0, r_max = 0.0;      // meters
    double angle_min = 0.0, angle_max = 0.0;  // boresight radians
    double correlation_target = 0.0;      // rho in (0, 1)
    std::optional<double> beta_delta;     // overrides rho when set

    void validate() const;
};

struct Sector {
    int id = 0;
    double angle_lo = 0.0, angle_hi = 0.0;  // radians
    double r_lo = 0.0, r_hi = 0.0;          // meters

    bool contains(const UserLocation& loc) const {
        return loc.angle >= angle_lo && loc.angle < angle_hi &&
               loc.range >= r_lo && loc.range < r_hi;
    }
};

// Polar tiling of the coverage area. Columns are bounded by the orthogonal
// angular samples; rings inside each column keep a constant Fresnel-model
// correlation between neighbors. Sector ids run angle-major, outermost ring
// first. Both axes are closed below, open above.
struct SectorGrid {
    PartitionSpec spec;
    ArrayConfig config;
    double beta_delta = 0.0;                       // resolved value
    std::vector<double> angular_edges;             // ascending, radians
    std::vector<std::vector<double>> radial_edges; // per column, descending
    std::vector<Sector> sectors;
    std::vector<int> column_offsets;               // first sector id per column

    int sector_count() const { return static_cast<int>(sectors.size()); }
};

// Directional cosines u_n = (2n - N + 1) / N, ascending.
std::vector<double> angular_samples(const ArrayConfig& config);

// Eq.-8-form radial samples r_s = (1/s) N^2 d^2 cos(angle) / (2 lambda beta),
// restricted to [r_min, r_max], decreasing in s.
std::vector<double> radial_samples(const ArrayConfig& config, double beta_delta,
                                   double angle, double r_min, double r_max);

// Rings whose adjacent-pair correlation matches the Fresnel model g(beta):
// r_s = (1/s) N^2 d^2 cos^2(angle) / (2 lambda beta^2).
std::vector<double> ring_radii(const ArrayConfig& config, double beta_delta,
                               double angle, double r_min, double r_max);

SectorGrid build_grid(const PartitionSpec& spec, const ArrayConfig& config);

int locate(const SectorGrid& grid, const UserLocation& loc);

bool in_coverage(const SectorGrid& grid, const UserLocation& loc);

// Smallest beta on a coarse-to-fine scan whose grid has exactly
// target_sectors sectors; NaN when no such beta exists in [0.2, 8].
double beta_delta_for_sector_count(const PartitionSpec& spec, const ArrayConfig& config,
                                   int target_sectors);

// id / angle interval (deg) / range interval (m) table
void write_grid_table(const SectorGrid& grid, std::ostream& os);

std::string grid_to_json(const SectorGrid& grid);
SectorGrid grid_from_json(const std::string& text);

}  // namespace ncbf
