#include "ncbf/dataset.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "ncbf/io_util.hpp"

namespace ncbf {

NcbfScenario sample_scenario(const SectorGrid& grid, const Sector& sector, int num_users,
                             Rng& rng) {
    if (num_users < 1) throw ConfigError("sample_scenario: num_users must be >= 1");
    NcbfScenario scenario;
    scenario.desired.angle = rng.uniform(sector.angle_lo, sector.angle_hi);
    scenario.desired.range = rng.uniform(sector.r_lo, sector.r_hi);

    std::vector<ChannelVector> placed;
    placed.push_back(channel_vector(grid.config, scenario.desired));
    const auto& spec = grid.spec;
    for (int k = 1; k < num_users; ++k) {
        bool ok = false;
        for (int attempt = 0; attempt < 100; ++attempt) {
            UserLocation cand;
            cand.angle = rng.uniform(spec.angle_min, spec.angle_max);
            cand.range = rng.uniform(spec.r_min, spec.r_max);
            const ChannelVector h = channel_vector(grid.config, cand);
            bool separated = true;
            for (const auto& other : placed) {
                if (channel_correlation(h, other) > kCoincidentCorrelation) {
                    separated = false;
                    break;
                }
            }
            if (separated) {
                scenario.interferers.push_back(cand);
                placed.push_back(h);
                ok = true;
                break;
            }
        }
        if (!ok)
            throw SamplingExhausted("sample_scenario: interferer " + std::to_string(k) +
                                    " rejected 100 times");
    }
    std::sort(scenario.interferers.begin(), scenario.interferers.end(),
              [](const UserLocation& a, const UserLocation& b) {
                  return a.angle != b.angle ? a.angle < b.angle : a.range < b.range;
              });
    return scenario;
}

std::pair<std::vector<double>, std::vector<double>> label_scenario(
    const ArrayConfig& config, const NcbfScenario& scenario) {
    const BeamWeights w = solve_lcmv(build_constraints(config, scenario));
    std::vector<double> phases = w.phases();
    phases[0] = 0.0;
    return {std::move(phases), w.magnitudes_db()};
}

std::vector<double> normalize_inputs(const NcbfScenario& scenario, const PartitionSpec& bounds) {
    std::vector<UserLocation> ordered = scenario.interferers;
    std::sort(ordered.begin(), ordered.end(), [](const UserLocation& a, const UserLocation& b) {
        return a.angle != b.angle ? a.angle < b.angle : a.range < b.range;
    });
    ordered.insert(ordered.begin(), scenario.desired);
    std::vector<double> out;
    out.reserve(2 * ordered.size());
    const double dpsi = bounds.angle_max - bounds.angle_min;
    const double dr = bounds.r_max - bounds.r_min;
    for (const auto& loc : ordered) {
        out.push_back((loc.angle - bounds.angle_min) / dpsi);
        out.push_back((loc.range - bounds.r_min) / dr);
    }
    return out;
}

namespace {

constexpr char kMagic[5] = "NCBF";

}  // namespace

void write_dataset(const std::string& path, const Dataset& ds) {
    std::string bytes;
    bytes.reserve(24 + ds.data.size() * 4);
    bytes.append(kMagic, 4);
    put_u32(bytes, kDatasetFormatVersion);
    put_u32(bytes, static_cast<std::uint32_t>(ds.num_elements));
    put_u32(bytes, static_cast<std::uint32_t>(ds.num_users));
    put_u64(bytes, ds.count);
    for (float v : ds.data) put_f32(bytes, v);
    write_file(path, bytes);
}

Dataset read_dataset(const std::string& path) {
    const std::string bytes = read_file(path);
    ByteReader r(bytes, "dataset " + path);
    if (r.raw(4) != std::string(kMagic, 4))
        throw FileFormatError("dataset " + path + ": bad magic, not an NCBF dataset");
    const std::uint32_t version = r.u32();
    if (version != kDatasetFormatVersion)
        throw FileFormatError("dataset " + path + ": format version " +
                              std::to_string(version) + " unsupported, expected " +
                              std::to_string(kDatasetFormatVersion));
    Dataset ds;
    ds.num_elements = static_cast<int>(r.u32());
    ds.num_users = static_cast<int>(r.u32());
    ds.count = r.u64();
    const std::size_t values = ds.count * ds.record_width();
    ds.data.resize(values);
    for (std::size_t i = 0; i < values; ++i) ds.data[i] = r.f32();
    if (!r.exhausted())
        throw FileFormatError("dataset " + path + ": trailing bytes after records");
    return ds;
}

std::string meta_to_json(const DatasetMeta& m) {
    nlohmann::json j;
    j["format_version"] = m.format_version;
    j["sector_id"] = m.sector_id;
    j["num_users"] = m.num_users;
    j["num_elements"] = m.num_elements;
    j["train_count"] = m.train_count;
    j["test_count"] = m.test_count;
    j["split"] = m.split;
    j["coverage"] = {{"r_min_m", m.r_min},
                     {"r_max_m", m.r_max},
                     {"angle_min_rad", m.angle_min},
                     {"angle_max_rad", m.angle_max}};
    j["seed"] = m.seed;
    return j.dump(2) + "\n";
}

DatasetMeta meta_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        DatasetMeta m;
        m.format_version = j.at("format_version").get<std::uint32_t>();
        m.sector_id = j.at("sector_id").get<int>();
        m.num_users = j.at("num_users").get<int>();
        m.num_elements = j.at("num_elements").get<int>();
        m.train_count = j.at("train_count").get<std::uint64_t>();
        m.test_count = j.at("test_count").get<std::uint64_t>();
        m.split = j.at("split").get<double>();
        m.r_min = j.at("coverage").at("r_min_m").get<double>();
        m.r_max = j.at("coverage").at("r_max_m").get<double>();
        m.angle_min = j.at("coverage").at("angle_min_rad").get<double>();
        m.angle_max = j.at("coverage").at("angle_max_rad").get<double>();
        m.seed = j.at("seed").get<std::uint64_t>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("dataset meta: ") + e.what());
    }
}

DatasetMeta generate_dataset(const SectorGrid& grid, int sector_id, int num_users,
                             std::uint64_t size, double split, std::uint64_t seed,
                             const std::string& train_path, const std::string& test_path,
                             const std::string& meta_path) {
    if (sector_id < 0 || sector_id >= grid.sector_count())
        throw ConfigError("generate_dataset: sector " + std::to_string(sector_id) +
                          " out of range");
    if (!(split >= 0.0 && split <= 1.0))
        throw ConfigError("generate_dataset: split must lie in [0, 1]");
    const Sector& sector = grid.sectors[static_cast<std::size_t>(sector_id)];
    const int n = grid.config.num_elements;

    const std::uint64_t train_count =
        static_cast<std::uint64_t>(std::ceil(split * static_cast<double>(size)));

    Dataset train, test;
    train.num_users = test.num_users = num_users;
    train.num_elements = test.num_elements = n;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(sector_id)));

    for (std::uint64_t i = 0; i < size; ++i) {
        const NcbfScenario scenario = sample_scenario(grid, sector, num_users, rng);
        const auto [phases, mags_db] = label_scenario(grid.config, scenario);
        const std::vector<double> inputs = normalize_inputs(scenario, grid.spec);
        Dataset& dst = i < train_count ? train : test;
        for (double v : inputs) dst.data.push_back(static_cast<float>(v));
        for (double v : phases) dst.data.push_back(static_cast<float>(v));
        for (double v : mags_db) dst.data.push_back(static_cast<float>(v));
        ++dst.count;
    }
    write_dataset(train_path, train);
    write_dataset(test_path, test);

    DatasetMeta meta;
    meta.sector_id = sector_id;
    meta.num_users = num_users;
    meta.num_elements = n;
    meta.train_count = train.count;
    meta.test_count = test.count;
    meta.split = split;
    meta.r_min = grid.spec.r_min;
    meta.r_max = grid.spec.r_max;
    meta.angle_min = grid.spec.angle_min;
    meta.angle_max = grid.spec.angle_max;
    meta.seed = seed;
    write_file(meta_path, meta_to_json(meta));
    return meta;
}

}  // namespace ncbf
