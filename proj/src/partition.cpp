#include "ncbf/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "ncbf/fresnel.hpp"

namespace ncbf {

void PartitionSpec::validate() const {
    if (!(r_min > 0.0) || !(r_min < r_max))
        throw ConfigError("PartitionSpec: need 0 < r_min < r_max");
    if (!(angle_min < angle_max))
        throw ConfigError("PartitionSpec: need angle_min < angle_max");
    if (beta_delta) {
        if (!(*beta_delta > 0.0)) throw ConfigError("PartitionSpec: beta_delta must be > 0");
    } else if (!(correlation_target > 0.0 && correlation_target < 1.0)) {
        throw ConfigError("PartitionSpec: correlation_target must lie in (0, 1)");
    }
}

std::vector<double> angular_samples(const ArrayConfig& config) {
    const int n = config.num_elements;
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<std::size_t>(i)] = (2.0 * i - n + 1.0) / n;
    return u;
}

std::vector<double> radial_samples(const ArrayConfig& config, double beta_delta,
                                   double angle, double r_min, double r_max) {
    const double n = config.num_elements;
    const double d = config.element_spacing;
    const double r1 = n * n * d * d * std::cos(angle) /
                      (2.0 * config.wavelength() * beta_delta);
    std::vector<double> out;
    for (int s = 1;; ++s) {
        const double r = r1 / s;
        if (r < r_min) break;
        if (r <= r_max) out.push_back(r);
    }
    return out;
}

std::vector<double> ring_radii(const ArrayConfig& config, double beta_delta,
                               double angle, double r_min, double r_max) {
    // Eq.-8 form with an effective beta of beta^2 / cos(angle); this is the
    // sampling whose adjacent rings actually measure g(beta) under the
    // Fresnel phase model (see the partition tests).
    const double eff = beta_delta * beta_delta / std::cos(angle);
    return radial_samples(config, eff, angle, r_min, r_max);
}

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

}  // namespace

SectorGrid build_grid(const PartitionSpec& spec, const ArrayConfig& config) {
    spec.validate();
    config.validate();

    SectorGrid grid;
    grid.spec = spec;
    grid.config = config;
    grid.beta_delta =
        spec.beta_delta ? *spec.beta_delta : beta_from_correlation(spec.correlation_target);

    grid.angular_edges.push_back(spec.angle_min);
    for (double u : angular_samples(config)) {
        const double psi = std::asin(u);
        if (psi > spec.angle_min && psi < spec.angle_max &&
            !close(psi, spec.angle_min) && !close(psi, spec.angle_max))
            grid.angular_edges.push_back(psi);
    }
    grid.angular_edges.push_back(spec.angle_max);
    std::sort(grid.angular_edges.begin(), grid.angular_edges.end());

    const std::size_t columns = grid.angular_edges.size() - 1;
    int next_id = 0;
    for (std::size_t col = 0; col < columns; ++col) {
        const double lo = grid.angular_edges[col];
        const double hi = grid.angular_edges[col + 1];
        const double center = 0.5 * (lo + hi);
        std::vector<double> edges;
        edges.push_back(spec.r_max);
        for (double r : ring_radii(config, grid.beta_delta, center, spec.r_min, spec.r_max))
            if (!close(r, spec.r_min) && !close(r, spec.r_max)) edges.push_back(r);
        edges.push_back(spec.r_min);
        std::sort(edges.begin(), edges.end(), std::greater<>());
        grid.radial_edges.push_back(edges);
        grid.column_offsets.push_back(next_id);
        for (std::size_t cell = 0; cell + 1 < edges.size(); ++cell) {
            Sector s;
            s.id = next_id++;
            s.angle_lo = lo;
            s.angle_hi = hi;
            s.r_hi = edges[cell];
            s.r_lo = edges[cell + 1];
            grid.sectors.push_back(s);
        }
    }
    if (grid.sectors.empty()) throw EmptyGrid("build_grid: partition has no sectors");
    return grid;
}

bool in_coverage(const SectorGrid& grid, const UserLocation& loc) {
    return loc.angle >= grid.spec.angle_min && loc.angle < grid.spec.angle_max &&
           loc.range >= grid.spec.r_min && loc.range < grid.spec.r_max;
}

int locate(const SectorGrid& grid, const UserLocation& loc) {
    if (grid.sectors.empty()) throw EmptyGrid("locate: empty grid");
    if (!in_coverage(grid, loc))
        throw OutOfCoverage("locate: location (angle " + std::to_string(loc.angle) +
                            " rad, range " + std::to_string(loc.range) +
                            " m) outside coverage");
    const auto& edges = grid.angular_edges;
    const auto it = std::upper_bound(edges.begin(), edges.end(), loc.angle);
    const std::size_t col = static_cast<std::size_t>(it - edges.begin()) - 1;
    const auto& rs = grid.radial_edges[col];
    // rs is descending; cell i covers [rs[i+1], rs[i])
    std::size_t cell = 0;
    while (cell + 2 < rs.size() && loc.range < rs[cell + 1]) ++cell;
    return grid.column_offsets[col] + static_cast<int>(cell);
}

double beta_delta_for_sector_count(const PartitionSpec& spec, const ArrayConfig& config,
                                   int target_sectors) {
    PartitionSpec probe = spec;
    for (double beta = 0.2; beta <= 8.0; beta += 0.001) {
        probe.beta_delta = beta;
        try {
            if (build_grid(probe, config).sector_count() == target_sectors) return beta;
        } catch (const EmptyGrid&) {
            break;  // larger beta only removes rings
        }
    }
    return std::nan("");
}

void write_grid_table(const SectorGrid& grid, std::ostream& os) {
    os << "sector_id,angle_lo_deg,angle_hi_deg,r_lo_m,r_hi_m\n";
    char line[160];
    for (const auto& s : grid.sectors) {
        std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f,%.6f\n", s.id,
                      s.angle_lo * 180.0 / kPi, s.angle_hi * 180.0 / kPi, s.r_lo, s.r_hi);
        os << line;
    }
}

std::string grid_to_json(const SectorGrid& grid) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["array"] = {{"num_elements", grid.config.num_elements},
                  {"element_spacing_m", grid.config.element_spacing},
                  {"carrier_frequency_hz", grid.config.carrier_frequency}};
    j["coverage"] = {{"r_min_m", grid.spec.r_min},
                     {"r_max_m", grid.spec.r_max},
                     {"angle_min_rad", grid.spec.angle_min},
                     {"angle_max_rad", grid.spec.angle_max}};
    j["correlation_target"] = grid.spec.correlation_target;
    j["beta_delta"] = grid.beta_delta;
    j["angular_edges"] = grid.angular_edges;
    j["radial_edges"] = grid.radial_edges;
    return j.dump(2) + "\n";
}

SectorGrid grid_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("grid descriptor: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            throw FileFormatError("grid descriptor: unsupported format_version " +
                                  j.at("format_version").dump() + ", expected 1");
        SectorGrid grid;
        grid.config.num_elements = j.at("array").at("num_elements").get<int>();
        grid.config.element_spacing = j.at("array").at("element_spacing_m").get<double>();
        grid.config.carrier_frequency = j.at("array").at("carrier_frequency_hz").get<double>();
        grid.spec.r_min = j.at("coverage").at("r_min_m").get<double>();
        grid.spec.r_max = j.at("coverage").at("r_max_m").get<double>();
        grid.spec.angle_min = j.at("coverage").at("angle_min_rad").get<double>();
        grid.spec.angle_max = j.at("coverage").at("angle_max_rad").get<double>();
        grid.spec.correlation_target = j.at("correlation_target").get<double>();
        grid.beta_delta = j.at("beta_delta").get<double>();
        grid.spec.beta_delta = grid.beta_delta;
        grid.angular_edges = j.at("angular_edges").get<std::vector<double>>();
        grid.radial_edges = j.at("radial_edges").get<std::vector<std::vector<double>>>();
        int next_id = 0;
        for (std::size_t col = 0; col + 1 < grid.angular_edges.size(); ++col) {
            grid.column_offsets.push_back(next_id);
            const auto& rs = grid.radial_edges.at(col);
            for (std::size_t cell = 0; cell + 1 < rs.size(); ++cell) {
                Sector s;
                s.id = next_id++;
                s.angle_lo = grid.angular_edges[col];
                s.angle_hi = grid.angular_edges[col + 1];
                s.r_hi = rs[cell];
                s.r_lo = rs[cell + 1];
                grid.sectors.push_back(s);
            }
        }
        if (grid.sectors.empty()) throw FileFormatError("grid descriptor: no sectors");
        return grid;
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("grid descriptor: missing field: ") + e.what());
    }
}

}  // namespace ncbf
