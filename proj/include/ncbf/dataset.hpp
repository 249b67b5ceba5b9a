#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncbf/lcmv.hpp"
#include "ncbf/partition.hpp"
#include "ncbf/rng.hpp"

namespace ncbf {

// Record layout (all little-endian f32): 2K normalized inputs, N phases in
// [-pi, pi) referenced to element 1, N magnitudes in dB of the unit-power
// weights. File header: "NCBF", u32 version, u32 N, u32 K, u64 record count.
inline constexpr std::uint32_t kDatasetFormatVersion = 1;

struct Dataset {
    int num_users = 0;     // K
    int num_elements = 0;  // N
    std::uint64_t count = 0;
    std::vector<float> data;  // count contiguous records

    std::size_t input_width() const { return 2 * static_cast<std::size_t>(num_users); }
    std::size_t record_width() const {
        return input_width() + 2 * static_cast<std::size_t>(num_elements);
    }
    const float* inputs(std::uint64_t i) const { return data.data() + i * record_width(); }
    const float* phases(std::uint64_t i) const { return inputs(i) + input_width(); }
    const float* magnitudes_db(std::uint64_t i) const {
        return phases(i) + static_cast<std::size_t>(num_elements);
    }
};

struct DatasetMeta {
    int sector_id = 0;
    int num_users = 0;
    int num_elements = 0;
    std::uint64_t train_count = 0;
    std::uint64_t test_count = 0;
    double split = 0.0;
    double r_min = 0.0, r_max = 0.0;
    double angle_min = 0.0, angle_max = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t format_version = kDatasetFormatVersion;
};

// Desired user uniform over the sector rectangle, interferers uniform over
// the whole coverage rectangle; an interferer correlating above 0.95 with
// the desired user or a previously placed interferer is redrawn (at most 100
// times each). Interferers come back sorted by (angle, range).
NcbfScenario sample_scenario(const SectorGrid& grid, const Sector& sector, int num_users,
                             Rng& rng);

// LCMV labels: phases referenced to element 1 and wrapped to [-pi, pi);
// magnitudes of the unit-power weights in dB.
std::pair<std::vector<double>, std::vector<double>> label_scenario(
    const ArrayConfig& config, const NcbfScenario& scenario);

// Min-max scaling of each user's (angle, range) to [0,1] over the coverage
// bounds; desired user first, interferers sorted by (angle, range).
std::vector<double> normalize_inputs(const NcbfScenario& scenario, const PartitionSpec& bounds);

void write_dataset(const std::string& path, const Dataset& ds);
Dataset read_dataset(const std::string& path);

std::string meta_to_json(const DatasetMeta& meta);
DatasetMeta meta_from_json(const std::string& text);

// Deterministic per-sector generation: the first ceil(split*size) records go
// to the train file, the rest to the test file. The effective rng stream is
// mix_seed(seed, sector_id).
DatasetMeta generate_dataset(const SectorGrid& grid, int sector_id, int num_users,
                             std::uint64_t size, double split, std::uint64_t seed,
                             const std::string& train_path, const std::string& test_path,
                             const std::string& meta_path);

}  // namespace ncbf
