#include "rta/outputs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace rta {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

double to_db(double linear) {
    return 10.0 * std::log10(std::max(linear, 1e-300));
}

}  // namespace

void write_pattern_grid_csv(const PatternGrid& p, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "u,v,P_db\n";
    char buf[80];
    for (int iv = 0; iv < p.resolution; ++iv) {
        for (int iu = 0; iu < p.resolution; ++iu) {
            if (p.is_visible(iu, iv)) {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", p.u[iu], p.v[iv], to_db(p.at(iu, iv)));
            } else {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,nan\n", p.u[iu], p.v[iv]);
            }
            out << buf;
        }
        out << '\n';
    }
}

void write_pattern_cut_csv(const PatternEvaluator& eval, const PatternGrid& p, const Mask& mask, bool azimuth,
                           const std::filesystem::path& path) {
    auto out = open_out(path);
    out << (azimuth ? "u" : "v") << ",P_db,mask_db\n";
    const double fixed = azimuth ? p.peak_v : p.peak_u;
    char buf[96];
    for (int i = 0; i < p.resolution; ++i) {
        const double x = azimuth ? p.u[i] : p.v[i];
        const double u = azimuth ? x : fixed;
        const double v = azimuth ? fixed : x;
        if (u * u + v * v > 1.0) {
            std::snprintf(buf, sizeof(buf), "%.6f,nan,nan\n", x);
        } else {
            const double pw = eval.power(u, v) / p.raw_peak;
            std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", x, to_db(pw), to_db(mask.value(u, v)));
        }
        out << buf;
    }
}

std::string metrics_to_json(const PatternMetrics& m) {
    nlohmann::ordered_json j;
    if (m.sll_db) {
        j["sll_db"] = *m.sll_db;
    } else {
        j["sll_db"] = nullptr;
    }
    j["directivity_db"] = m.directivity_db;
    if (m.hpbw_az_deg) {
        j["hpbw_az_deg"] = *m.hpbw_az_deg;
    } else {
        j["hpbw_az_deg"] = nullptr;
    }
    if (m.hpbw_el_deg) {
        j["hpbw_el_deg"] = *m.hpbw_el_deg;
    } else {
        j["hpbw_el_deg"] = nullptr;
    }
    j["gamma"] = m.gamma;
    j["peak_in_mainlobe"] = m.peak_in_mainlobe;
    return j.dump(2) + "\n";
}

void write_metrics_json(const PatternMetrics& m, const std::filesystem::path& path) {
    open_out(path) << metrics_to_json(m);
}

std::string trace_to_json(const SynthesisTrace& t) {
    nlohmann::ordered_json j;
    j["H"] = t.H();
    j["order_used"] = t.order_used;
    j["step1_candidates"] = t.step1_candidates;
    j["step1_exhaustive"] = t.step1_exhaustive;
    nlohmann::ordered_json its = nlohmann::ordered_json::array();
    for (const TraceIteration& it : t.iterations) {
        nlohmann::ordered_json e;
        e["h"] = it.h;
        e["Q"] = it.tile_count;
        nlohmann::ordered_json hist;
        for (const auto& [order, count] : it.order_histogram) hist[std::to_string(order)] = count;
        e["Q_r"] = hist;
        e["gamma"] = it.gamma;
        if (it.split_tile > 0) {
            e["split_tile"] = it.split_tile;
        } else {
            e["split_tile"] = nullptr;
        }
        e["delta_trm"] = it.delta_trm;
        its.push_back(e);
    }
    j["iterations"] = its;
    return j.dump(2) + "\n";
}

void write_trace_json(const SynthesisTrace& t, const std::filesystem::path& path) {
    open_out(path) << trace_to_json(t);
}

void write_pareto_csv(const SynthesisTrace& t, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "Q,gamma\n";
    char buf[64];
    for (const TraceIteration& it : t.iterations) {
        std::snprintf(buf, sizeof(buf), "%d,%.9e\n", it.tile_count, it.gamma);
        out << buf;
    }
}

void write_scan_csv(const ScanResult& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "theta_s_deg,phi_s_deg,sll_db\n";
    char buf[96];
    for (std::size_t it = 0; it < r.theta_s_deg.size(); ++it) {
        for (std::size_t ip = 0; ip < r.phi_s_deg.size(); ++ip) {
            const double s = r.at(static_cast<int>(it), static_cast<int>(ip));
            if (std::isnan(s)) {
                std::snprintf(buf, sizeof(buf), "%.4f,%.4f,nan\n", r.theta_s_deg[it], r.phi_s_deg[ip]);
            } else {
                std::snprintf(buf, sizeof(buf), "%.4f,%.4f,%.6f\n", r.theta_s_deg[it], r.phi_s_deg[ip], s);
            }
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace rta
