#include "rta/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rta {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config: " + path + ": " + what);
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& known) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) fail(path + "." + key, "unknown key");
    }
}

template <typename T>
T get_req(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) fail(path + "." + key, "missing required key");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(path + "." + key, "wrong type");
    }
}

template <typename T>
T get_opt(const json& j, const std::string& path, const char* key, T def) {
    if (!j.contains(key)) return def;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(path + "." + key, "wrong type");
    }
}

std::pair<double, double> parse_steering(const json& j, const std::string& path) {
    reject_unknown(j, path, {"u", "v", "theta_deg", "phi_deg"});
    double us = 0.0, vs = 0.0;
    if (j.contains("u") || j.contains("v")) {
        us = get_req<double>(j, path, "u");
        vs = get_req<double>(j, path, "v");
    } else {
        const double theta = get_req<double>(j, path, "theta_deg") * kPi / 180.0;
        const double phi = get_opt<double>(j, path, "phi_deg", 0.0) * kPi / 180.0;
        us = std::sin(theta) * std::cos(phi);
        vs = std::sin(theta) * std::sin(phi);
    }
    if (us * us + vs * vs > 1.0) fail(path, "steering direction lies outside the unit disc");
    return {us, vs};
}

ReferenceSpec parse_reference(const json& j, const std::string& path, const std::filesystem::path& base) {
    reject_unknown(j, path, {"type", "power", "pedestal", "path", "steering"});
    ReferenceSpec spec;
    const std::string type = get_req<std::string>(j, path, "type");
    if (type == "uniform") {
        spec.kind = ReferenceSpec::Kind::Uniform;
    } else if (type == "raised_cosine") {
        spec.kind = ReferenceSpec::Kind::RaisedCosine;
        spec.power = get_opt<double>(j, path, "power", 2.0);
        spec.pedestal = get_opt<double>(j, path, "pedestal", 0.2);
        if (spec.power < 0.0) fail(path + ".power", "must be >= 0");
        if (spec.pedestal < 0.0 || spec.pedestal > 1.0) fail(path + ".pedestal", "must be in [0, 1]");
    } else if (type == "csv") {
        spec.kind = ReferenceSpec::Kind::Csv;
        spec.csv_path = base / get_req<std::string>(j, path, "path");
        if (!std::filesystem::exists(spec.csv_path))
            fail(path + ".path", "file not found: " + spec.csv_path.string());
    } else {
        fail(path + ".type", "must be uniform, raised_cosine or csv");
    }
    if (j.contains("steering")) spec.steering_uv = parse_steering(j.at("steering"), path + ".steering");
    return spec;
}

}  // namespace

WeightSet build_reference(const ReferenceSpec& spec, const GridSpec& grid) {
    WeightSet w;
    switch (spec.kind) {
        case ReferenceSpec::Kind::Uniform: w = WeightSet::uniform(grid); break;
        case ReferenceSpec::Kind::RaisedCosine: w = WeightSet::raised_cosine(grid, spec.power, spec.pedestal); break;
        case ReferenceSpec::Kind::Csv: w = read_excitations_csv(grid, spec.csv_path); break;
    }
    if (spec.steering_uv) w.steer(grid, spec.steering_uv->first, spec.steering_uv->second);
    return w;
}

RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    reject_unknown(j, "$",
                   {"grid", "shape", "order", "q_max", "mask", "reference", "element_pattern", "resolution",
                    "output_dir", "seed", "threads", "enumeration_threshold", "sampling_budget",
                    "prefer_order_increase", "phase_averaging", "snapshots", "scan", "clustering"});

    RunConfig cfg;

    const json& gj = j.contains("grid") ? j.at("grid") : json::object();
    if (!j.contains("grid")) fail("$.grid", "missing required key");
    reject_unknown(gj, "$.grid", {"rows", "cols", "dx", "dy"});
    const int rows = get_req<int>(gj, "$.grid", "rows");
    const int cols = get_req<int>(gj, "$.grid", "cols");
    const double dx = get_opt<double>(gj, "$.grid", "dx", 0.5);
    const double dy = get_opt<double>(gj, "$.grid", "dy", 0.5);
    try {
        cfg.grid = GridSpec(rows, cols, dx, dy);
    } catch (const std::exception& e) {
        fail("$.grid", e.what());
    }

    const std::string shape = get_opt<std::string>(j, "$", "shape", "l_tromino");
    if (shape == "l_tromino") {
        cfg.shape = TileShape(TileFamily::LTromino);
    } else if (shape == "square") {
        cfg.shape = TileShape(TileFamily::Square);
    } else {
        fail("$.shape", "must be l_tromino or square");
    }

    cfg.order = get_opt<int>(j, "$", "order", 2);
    if (cfg.order < 1 || cfg.order > TileShape::kMaxOrder) fail("$.order", "must be in [1, 6]");

    const long q_ceiling = static_cast<long>(cfg.grid.cell_count()) / cfg.shape.base_cells();
    cfg.q_max = get_opt<int>(j, "$", "q_max", static_cast<int>(q_ceiling));
    if (cfg.q_max < 1) fail("$.q_max", "must be >= 1");
    if (cfg.q_max > q_ceiling)
        fail("$.q_max", "exceeds (rows*cols)/I1 = " + std::to_string(q_ceiling));

    if (!j.contains("mask")) fail("$.mask", "missing required key");
    cfg.mask_path = base / j.at("mask").get<std::string>();
    if (!std::filesystem::exists(cfg.mask_path)) fail("$.mask", "file not found: " + cfg.mask_path.string());

    if (!j.contains("reference")) fail("$.reference", "missing required key");
    cfg.reference = parse_reference(j.at("reference"), "$.reference", base);

    if (j.contains("element_pattern")) {
        const json& ej = j.at("element_pattern");
        reject_unknown(ej, "$.element_pattern", {"type", "path"});
        const std::string type = get_req<std::string>(ej, "$.element_pattern", "type");
        if (type == "isotropic") {
            cfg.element_pattern.kind = ElementPatternSpec::Kind::Isotropic;
        } else if (type == "csv") {
            cfg.element_pattern.kind = ElementPatternSpec::Kind::Csv;
            cfg.element_pattern.csv_path = base / get_req<std::string>(ej, "$.element_pattern", "path");
            if (!std::filesystem::exists(cfg.element_pattern.csv_path))
                fail("$.element_pattern.path", "file not found: " + cfg.element_pattern.csv_path.string());
        } else {
            fail("$.element_pattern.type", "must be isotropic or csv");
        }
    }

    cfg.resolution = get_opt<int>(j, "$", "resolution", 301);
    if (cfg.resolution < 64) fail("$.resolution", "must be >= 64");

    cfg.output_dir = base / get_opt<std::string>(j, "$", "output_dir", "out");
    cfg.seed = get_opt<std::uint64_t>(j, "$", "seed", 0);
    cfg.threads = get_opt<int>(j, "$", "threads", 0);
    if (cfg.threads < 0) fail("$.threads", "must be >= 0");
    cfg.enumeration_threshold = get_opt<std::uint64_t>(j, "$", "enumeration_threshold", 100000);
    cfg.sampling_budget = get_opt<std::uint64_t>(j, "$", "sampling_budget", 10000);
    if (cfg.sampling_budget < 1) fail("$.sampling_budget", "must be >= 1");
    cfg.prefer_order_increase = get_opt<bool>(j, "$", "prefer_order_increase", false);

    const std::string avg = get_opt<std::string>(j, "$", "phase_averaging", "arithmetic");
    if (avg == "arithmetic") {
        cfg.phase_averaging = PhaseAveraging::Arithmetic;
    } else if (avg == "circular") {
        cfg.phase_averaging = PhaseAveraging::Circular;
    } else {
        fail("$.phase_averaging", "must be arithmetic or circular");
    }

    if (j.contains("snapshots")) {
        const json& sj = j.at("snapshots");
        if (sj.is_string()) {
            const std::string s = sj.get<std::string>();
            if (s == "endpoints") {
                cfg.snapshots.kind = SnapshotSpec::Kind::Endpoints;
            } else if (s == "all") {
                cfg.snapshots.kind = SnapshotSpec::Kind::All;
            } else {
                fail("$.snapshots", "must be endpoints, all, or a list of iterations");
            }
        } else if (sj.is_array()) {
            cfg.snapshots.kind = SnapshotSpec::Kind::List;
            for (const auto& e : sj) {
                if (!e.is_number_integer()) fail("$.snapshots", "list entries must be integers");
                cfg.snapshots.list.push_back(e.get<int>());
            }
        } else {
            fail("$.snapshots", "must be endpoints, all, or a list of iterations");
        }
    }

    if (j.contains("scan")) {
        const json& sj = j.at("scan");
        reject_unknown(sj, "$.scan", {"theta_max_deg", "theta_steps", "phi_steps", "query_theta_deg"});
        ScanSpec scan;
        scan.theta_max_deg = get_opt<double>(sj, "$.scan", "theta_max_deg", 30.0);
        scan.theta_steps = get_opt<int>(sj, "$.scan", "theta_steps", 7);
        scan.phi_steps = get_opt<int>(sj, "$.scan", "phi_steps", 24);
        scan.query_theta_deg = get_opt<double>(sj, "$.scan", "query_theta_deg", 5.0);
        if (scan.theta_max_deg < 0.0 || scan.theta_max_deg > 90.0) fail("$.scan.theta_max_deg", "must be in [0, 90]");
        if (scan.theta_steps < 1 || scan.phi_steps < 1) fail("$.scan", "step counts must be >= 1");
        cfg.scan = scan;
    }

    if (j.contains("clustering")) {
        cfg.clustering_path = base / j.at("clustering").get<std::string>();
        if (!std::filesystem::exists(*cfg.clustering_path))
            fail("$.clustering", "file not found: " + cfg.clustering_path->string());
    }

    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path.parent_path());
}

}  // namespace rta
