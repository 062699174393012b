#pragma once

#include <filesystem>
#include <string>

#include "rta/metrics.hpp"
#include "rta/pattern.hpp"
#include "rta/rtam.hpp"
#include "rta/scan.hpp"

namespace rta {

// Plot-ready artifact writers. All output is formatted with fixed
// precision so identical runs produce byte-identical files.

// Full grid "u,v,P_db"; invisible samples carry "nan". Blank line between
// v-blocks for gnuplot-style surface plotting.
void write_pattern_grid_csv(const PatternGrid& p, const std::filesystem::path& path);

// Principal cut through the beam peak: "u,P_db" (azimuth) or "v,P_db"
// (elevation), with the mask bound alongside.
void write_pattern_cut_csv(const PatternEvaluator& eval, const PatternGrid& p, const Mask& mask, bool azimuth,
                           const std::filesystem::path& path);

std::string metrics_to_json(const PatternMetrics& m);
void write_metrics_json(const PatternMetrics& m, const std::filesystem::path& path);

// Per-iteration trace: h, Q, Q_r histogram, gamma, split tile, TRM saving.
std::string trace_to_json(const SynthesisTrace& t);
void write_trace_json(const SynthesisTrace& t, const std::filesystem::path& path);

// Pareto ledger "Q,gamma", one row per iteration.
void write_pareto_csv(const SynthesisTrace& t, const std::filesystem::path& path);

// Scan map "theta_s_deg,phi_s_deg,sll_db".
void write_scan_csv(const ScanResult& r, const std::filesystem::path& path);

}  // namespace rta
