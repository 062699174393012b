#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rta/geometry.hpp"
#include "rta/weights.hpp"

namespace rta {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference excitation source: a built-in generator or a CSV import,
// optionally steered.
struct ReferenceSpec {
    enum class Kind { Uniform, RaisedCosine, Csv } kind = Kind::Uniform;
    double power = 2.0;      // raised-cosine exponent
    double pedestal = 0.2;   // raised-cosine pedestal
    std::filesystem::path csv_path;
    std::optional<std::pair<double, double>> steering_uv;  // (us, vs)
};

struct ElementPatternSpec {
    enum class Kind { Isotropic, Csv } kind = Kind::Isotropic;
    std::filesystem::path csv_path;
};

struct ScanSpec {
    double theta_max_deg = 30.0;
    int theta_steps = 7;
    int phi_steps = 24;
    double query_theta_deg = 5.0;
};

// Which split-loop snapshots get a clustering CSV.
struct SnapshotSpec {
    enum class Kind { Endpoints, All, List } kind = Kind::Endpoints;
    std::vector<int> list;
};

struct RunConfig {
    GridSpec grid;
    TileShape shape;
    int order = 2;  // R
    int q_max = 0;
    std::filesystem::path mask_path;
    ReferenceSpec reference;
    ElementPatternSpec element_pattern;
    int resolution = 301;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware
    std::uint64_t enumeration_threshold = 100000;
    std::uint64_t sampling_budget = 10000;
    bool prefer_order_increase = false;
    PhaseAveraging phase_averaging = PhaseAveraging::Arithmetic;
    SnapshotSpec snapshots;
    std::optional<ScanSpec> scan;
    std::optional<std::filesystem::path> clustering_path;  // evaluate / scan input
};

// Strict parse: unknown keys are rejected with their JSON path, defaults
// fill the gaps, and cross-field rules (q_max bound, resolution floor,
// file existence) are enforced. Throws ConfigError.
RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir);

// Materialize the reference excitations for a grid.
WeightSet build_reference(const ReferenceSpec& spec, const GridSpec& grid);

}  // namespace rta
