// Command-line front end: tileability / count / enumerate / synthesize /
// evaluate / scan. Exit codes: 0 success, 2 config error, 3 infeasible
// tiling, 4 budget truncation. Errors go to stderr as one JSON object.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rta/cardinality.hpp"
#include "rta/clustering.hpp"
#include "rta/exact_cover.hpp"
#include "rta/geometry.hpp"
#include "rta/metrics.hpp"
#include "rta/outputs.hpp"
#include "rta/parallel.hpp"
#include "rta/pattern.hpp"
#include "rta/rtam.hpp"
#include "rta/run_config.hpp"
#include "rta/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTruncated = 4;

void emit_error(const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::cerr << j.dump() << "\n";
}

rta::TileShape parse_shape(const std::string& s) {
    if (s == "l_tromino") return rta::TileShape(rta::TileFamily::LTromino);
    if (s == "square") return rta::TileShape(rta::TileFamily::Square);
    throw rta::ConfigError("shape must be l_tromino or square");
}

rta::ElementPattern load_element_pattern(const rta::ElementPatternSpec& spec) {
    if (spec.kind == rta::ElementPatternSpec::Kind::Csv) return rta::ElementPattern::from_csv(spec.csv_path);
    return rta::ElementPattern::isotropic();
}

int cmd_tileability(int rows, int cols, int order, const std::string& shape_name) {
    const rta::TileShape shape = parse_shape(shape_name);
    const rta::GridSpec grid(rows, cols);
    const auto verdict = rta::check_tileability(grid, order, shape);
    nlohmann::ordered_json j;
    j["rows"] = rows;
    j["cols"] = cols;
    j["order"] = order;
    j["shape"] = shape_name;
    j["tileable"] = verdict.tileable;
    j["reason"] = rta::to_string(verdict.reason);
    std::cout << j.dump(2) << "\n";
    return verdict.tileable ? kExitOk : kExitInfeasible;
}

int cmd_count(int mhat, int nhat) {
    const rta::BigUint t = rta::count_tilings_formula(mhat, nhat);
    nlohmann::ordered_json j;
    j["mhat"] = mhat;
    j["nhat"] = nhat;
    j["count"] = t.to_decimal();
    j["scientific"] = t.to_scientific(3);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct EnumerateArgs {
    int rows = 0, cols = 0;
    std::string shape = "l_tromino";
    std::string orders = "1";
    std::string composition;
    std::uint64_t max_solutions = 0;
    std::uint64_t max_nodes = 0;
    std::string dump_path;
    std::uint64_t dump_limit = 100000;
    int threads = 0;
};

int cmd_enumerate(const EnumerateArgs& a) {
    const rta::TileShape shape = parse_shape(a.shape);
    const rta::GridSpec grid(a.rows, a.cols);

    std::set<int> orders;
    {
        std::stringstream ss(a.orders);
        std::string tok;
        while (std::getline(ss, tok, ',')) orders.insert(std::stoi(tok));
    }
    rta::EnumerationLimits limits;
    if (a.max_solutions > 0) limits.max_solutions = a.max_solutions;
    if (a.max_nodes > 0) limits.max_nodes = a.max_nodes;
    if (!a.composition.empty()) {
        std::stringstream ss(a.composition);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw rta::ConfigError("composition entries look like ORDER=COUNT");
            limits.composition[std::stoi(tok.substr(0, eq))] = std::stoi(tok.substr(eq + 1));
        }
    }

    const rta::CoverInstance inst = rta::build_cover_instance(grid, shape, orders);
    rta::EnumerationResult res;
    if (!a.dump_path.empty()) {
        // Debug dump of sorted placement ids, newline-delimited,
        // size-guarded by --dump-limit.
        std::ofstream dump(a.dump_path, std::ios::binary);
        if (!dump) throw std::runtime_error("cannot open " + a.dump_path);
        rta::EnumerationLimits capped = limits;
        if (!capped.max_solutions || *capped.max_solutions > a.dump_limit) capped.max_solutions = a.dump_limit;
        res = rta::enumerate_exact_covers(inst, capped, [&](std::span<const int> rows) {
            std::vector<int> ids(rows.begin(), rows.end());
            std::sort(ids.begin(), ids.end());
            for (std::size_t i = 0; i < ids.size(); ++i) dump << ids[i] << (i + 1 < ids.size() ? ' ' : '\n');
        });
    } else {
        res = rta::count_exact_covers(inst, limits, rta::resolve_threads(a.threads));
    }

    nlohmann::ordered_json j;
    j["rows"] = a.rows;
    j["cols"] = a.cols;
    j["orders"] = a.orders;
    j["placement_rows"] = inst.row_count();
    j["solutions"] = res.solutions;
    j["nodes"] = res.nodes;
    j["truncated"] = res.truncated;
    std::cout << j.dump(2) << "\n";
    return res.truncated ? kExitTruncated : kExitOk;
}

void write_snapshot_csvs(const rta::SynthesisTrace& trace, const rta::RunConfig& cfg) {
    auto want = [&](int h) {
        switch (cfg.snapshots.kind) {
            case rta::SnapshotSpec::Kind::All: return true;
            case rta::SnapshotSpec::Kind::Endpoints: return h == 0 || h == trace.H();
            case rta::SnapshotSpec::Kind::List:
                return std::find(cfg.snapshots.list.begin(), cfg.snapshots.list.end(), h) != cfg.snapshots.list.end();
        }
        return false;
    };
    for (const rta::TraceIteration& it : trace.iterations) {
        if (!want(it.h)) continue;
        char name[64];
        std::snprintf(name, sizeof(name), "clustering_h%03d.csv", it.h);
        rta::write_clustering_csv(it.layout, cfg.output_dir / name);
    }
}

int cmd_synthesize(const std::string& config_path) {
    const rta::RunConfig cfg = rta::parse_config(config_path);
    const rta::Mask mask = rta::Mask::from_json_file(cfg.mask_path);
    const rta::WeightSet ref = rta::build_reference(cfg.reference, cfg.grid);
    const rta::ElementPattern ep = load_element_pattern(cfg.element_pattern);

    rta::RtamConfig rcfg;
    rcfg.max_order = cfg.order;
    rcfg.q_max = cfg.q_max;
    rcfg.enumeration_threshold = cfg.enumeration_threshold;
    rcfg.sampling_budget = cfg.sampling_budget;
    rcfg.seed = cfg.seed;
    rcfg.resolution = cfg.resolution;
    rcfg.threads = rta::resolve_threads(cfg.threads);
    rcfg.phase_averaging = cfg.phase_averaging;
    rcfg.prefer_order_increase = cfg.prefer_order_increase;

    const rta::SynthesisTrace trace = rta::run_rtam(cfg.grid, cfg.shape, mask, ref, ep, rcfg);

    std::filesystem::create_directories(cfg.output_dir);
    rta::write_trace_json(trace, cfg.output_dir / "trace.json");
    rta::write_pareto_csv(trace, cfg.output_dir / "pareto.csv");
    write_snapshot_csvs(trace, cfg);

    const rta::TraceIteration& last = trace.final();
    rta::PatternEvaluator eval(last.layout, last.weights, ep);
    const rta::PatternGrid pg = eval.sample(cfg.resolution, rcfg.threads);
    rta::write_pattern_grid_csv(pg, cfg.output_dir / "pattern.csv");
    rta::write_pattern_cut_csv(eval, pg, mask, true, cfg.output_dir / "cut_az.csv");
    rta::write_pattern_cut_csv(eval, pg, mask, false, cfg.output_dir / "cut_el.csv");
    rta::write_metrics_json(rta::pattern_metrics(eval, pg, mask), cfg.output_dir / "metrics.json");
    rta::write_excitations_csv(cfg.grid, ref, cfg.output_dir / "reference.csv");

    nlohmann::ordered_json j;
    j["H"] = trace.H();
    j["Q"] = last.tile_count;
    j["gamma"] = last.gamma;
    j["delta_trm"] = last.delta_trm;
    j["output_dir"] = cfg.output_dir.string();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_evaluate(const std::string& config_path) {
    const rta::RunConfig cfg = rta::parse_config(config_path);
    const rta::Mask mask = rta::Mask::from_json_file(cfg.mask_path);
    const rta::WeightSet ref = rta::build_reference(cfg.reference, cfg.grid);
    const rta::ElementPattern ep = load_element_pattern(cfg.element_pattern);
    const int threads = rta::resolve_threads(cfg.threads);

    std::optional<rta::PatternEvaluator> eval;
    if (cfg.clustering_path) {
        auto parsed = rta::read_clustering_csv(cfg.grid, *cfg.clustering_path);
        if (!parsed.clustering) throw rta::ConfigError("clustering: " + parsed.error);
        const auto report = rta::validate_clustering(*parsed.clustering);
        if (!report.valid) throw rta::ConfigError("clustering: not an exact partition of the grid");
        const rta::ClusterWeights w = rta::cluster_excitations(ref, *parsed.clustering, cfg.phase_averaging);
        eval.emplace(*parsed.clustering, w, ep);
    } else {
        // No clustering: evaluate the fully-populated reference array.
        std::vector<std::complex<double>> weights;
        weights.reserve(ref.size());
        for (int i = 0; i < ref.size(); ++i) weights.push_back(ref.weight(i));
        eval.emplace(cfg.grid, std::move(weights), ep);
    }

    const rta::PatternGrid pg = eval->sample(cfg.resolution, threads);
    std::filesystem::create_directories(cfg.output_dir);
    rta::write_pattern_grid_csv(pg, cfg.output_dir / "pattern.csv");
    rta::write_pattern_cut_csv(*eval, pg, mask, true, cfg.output_dir / "cut_az.csv");
    rta::write_pattern_cut_csv(*eval, pg, mask, false, cfg.output_dir / "cut_el.csv");
    const rta::PatternMetrics metrics = rta::pattern_metrics(*eval, pg, mask);
    rta::write_metrics_json(metrics, cfg.output_dir / "metrics.json");

    std::cout << rta::metrics_to_json(metrics);
    return kExitOk;
}

int cmd_scan(const std::string& config_path) {
    const rta::RunConfig cfg = rta::parse_config(config_path);
    if (!cfg.scan) throw rta::ConfigError("scan: config has no scan block");
    if (!cfg.clustering_path) throw rta::ConfigError("scan: config has no clustering path");
    const rta::Mask mask = rta::Mask::from_json_file(cfg.mask_path);
    const rta::WeightSet ref = rta::build_reference(cfg.reference, cfg.grid);
    const rta::ElementPattern ep = load_element_pattern(cfg.element_pattern);

    auto parsed = rta::read_clustering_csv(cfg.grid, *cfg.clustering_path);
    if (!parsed.clustering) throw rta::ConfigError("clustering: " + parsed.error);

    rta::ScanGrid sg;
    sg.theta_max_deg = cfg.scan->theta_max_deg;
    sg.theta_steps = cfg.scan->theta_steps;
    sg.phi_steps = cfg.scan->phi_steps;
    // Nominal pointing comes from the reference steering, if any.
    if (cfg.reference.steering_uv) {
        const auto [us, vs] = *cfg.reference.steering_uv;
        const double r = std::min(1.0, std::hypot(us, vs));
        sg.theta0_deg = std::asin(r) * 180.0 / rta::kPi;
        sg.phi0_deg = std::atan2(vs, us) * 180.0 / rta::kPi;
        if (sg.phi0_deg < 0.0) sg.phi0_deg += 360.0;
    }

    const rta::ScanResult res =
        rta::scan_sll_map(*parsed.clustering, ref.amplitude, ep, mask, sg, cfg.resolution,
                          rta::resolve_threads(cfg.threads), cfg.phase_averaging);
    std::filesystem::create_directories(cfg.output_dir);
    rta::write_scan_csv(res, cfg.output_dir / "scan_sll.csv");

    nlohmann::ordered_json j;
    j["theta_max_deg"] = sg.theta_max_deg;
    j["query_theta_deg"] = cfg.scan->query_theta_deg;
    j["sll_max_db"] = res.sll_max(cfg.scan->query_theta_deg);
    j["sll_avg_db"] = res.sll_avg(cfg.scan->query_theta_deg);
    j["output_dir"] = cfg.output_dir.string();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rep-tile clustered phased-array synthesis"};
    app.require_subcommand(1);

    int t_rows = 0, t_cols = 0, t_order = 1;
    std::string t_shape = "l_tromino";
    auto* tileability = app.add_subcommand("tileability", "Check full order-R tileability of an M x N grid");
    tileability->add_option("rows", t_rows, "grid rows M")->required();
    tileability->add_option("cols", t_cols, "grid cols N")->required();
    tileability->add_option("order", t_order, "tile order R")->required();
    tileability->add_option("--shape", t_shape, "l_tromino or square");

    int c_mhat = 0, c_nhat = 0;
    auto* count = app.add_subcommand("count", "Closed-form count of unit L-tromino tilings of Mhat x Nhat");
    count->add_option("mhat", c_mhat, "reduced rows")->required();
    count->add_option("nhat", c_nhat, "reduced cols")->required();

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate or count exact tilings");
    enumerate->add_option("--rows", en.rows, "grid rows M")->required();
    enumerate->add_option("--cols", en.cols, "grid cols N")->required();
    enumerate->add_option("--shape", en.shape, "l_tromino or square");
    enumerate->add_option("--orders", en.orders, "comma-separated tile orders, e.g. 1,2");
    enumerate->add_option("--composition", en.composition, "exact per-order tile counts, e.g. 2=6,1=8");
    enumerate->add_option("--max-solutions", en.max_solutions, "stop after this many solutions");
    enumerate->add_option("--max-nodes", en.max_nodes, "search-node budget");
    enumerate->add_option("--dump", en.dump_path, "write sorted placement ids per solution (debug)");
    enumerate->add_option("--dump-limit", en.dump_limit, "solution cap while dumping");
    enumerate->add_option("--threads", en.threads, "worker count (0 = hardware)");

    std::string config_path;
    auto* synthesize = app.add_subcommand("synthesize", "Run the split-based synthesis and write the trace bundle");
    synthesize->add_option("--config", config_path, "run configuration JSON")->required();
    auto* evaluate = app.add_subcommand("evaluate", "Pattern and metrics for a clustering (or the reference)");
    evaluate->add_option("--config", config_path, "run configuration JSON")->required();
    auto* scan = app.add_subcommand("scan", "SLL map over a scan cone for a fixed clustering");
    scan->add_option("--config", config_path, "run configuration JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tileability->parsed()) return cmd_tileability(t_rows, t_cols, t_order, t_shape);
        if (count->parsed()) return cmd_count(c_mhat, c_nhat);
        if (enumerate->parsed()) return cmd_enumerate(en);
        if (synthesize->parsed()) return cmd_synthesize(config_path);
        if (evaluate->parsed()) return cmd_evaluate(config_path);
        if (scan->parsed()) return cmd_scan(config_path);
    } catch (const rta::InfeasibleTilingError& e) {
        emit_error("infeasible", e.what());
        return kExitInfeasible;
    } catch (const rta::ConfigError& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        emit_error("runtime", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
