#include "rta/mask.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rta {

bool MaskRegion::contains(double u, double v, double cu, double cv) const {
    if (shape == Shape::Rect) {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
    const double r = std::hypot(u - cu, v - cv);
    return r >= r_min && r <= r_max;
}

Mask::Mask(double center_u, double center_v, double bw_u, double bw_v, std::vector<MaskRegion> regions,
           double default_level)
    : center_u_(center_u),
      center_v_(center_v),
      bw_u_(bw_u),
      bw_v_(bw_v),
      regions_(std::move(regions)),
      default_level_(default_level) {
    if (bw_u_ <= 0.0 || bw_v_ <= 0.0) throw std::invalid_argument("Mask: beamwidths must be > 0");
    if (default_level_ <= 0.0 || default_level_ > 1.0)
        throw std::invalid_argument("Mask: default level must be in (0, 1]");
    for (const MaskRegion& r : regions_) {
        if (r.level <= 0.0 || r.level > 1.0) throw std::invalid_argument("Mask: region level must be in (0, 1]");
    }
}

bool Mask::in_mainlobe(double u, double v) const {
    return std::abs(u - center_u_) <= bw_u_ / 2.0 && std::abs(v - center_v_) <= bw_v_ / 2.0;
}

double Mask::value(double u, double v) const {
    if (in_mainlobe(u, v)) return 1.0;
    for (const MaskRegion& r : regions_) {
        if (r.contains(u, v, center_u_, center_v_)) return r.level;
    }
    return default_level_;
}

Mask Mask::recentered(double u0, double v0) const {
    Mask m = *this;
    const double du = u0 - center_u_;
    const double dv = v0 - center_v_;
    m.center_u_ = u0;
    m.center_v_ = v0;
    for (MaskRegion& r : m.regions_) {
        if (r.shape == MaskRegion::Shape::Rect) {
            r.u_min += du;
            r.u_max += du;
            r.v_min += dv;
            r.v_max += dv;
        }
    }
    return m;
}

Mask Mask::simple(double u0, double v0, double bw_u, double bw_v, double sll_db) {
    return Mask(u0, v0, bw_u, bw_v, {}, std::pow(10.0, sll_db / 10.0));
}

namespace {

Mask parse_mask(const nlohmann::json& j) {
    for (const auto& [key, _] : j.items()) {
        if (key != "center_u" && key != "center_v" && key != "bw_u" && key != "bw_v" && key != "regions" &&
            key != "default_level_db")
            throw std::invalid_argument("mask: unknown key '" + key + "'");
    }
    const double cu = j.at("center_u").get<double>();
    const double cv = j.at("center_v").get<double>();
    const double bwu = j.at("bw_u").get<double>();
    const double bwv = j.at("bw_v").get<double>();
    const double def_db = j.at("default_level_db").get<double>();
    std::vector<MaskRegion> regions;
    if (j.contains("regions")) {
        for (const auto& rj : j.at("regions")) {
            MaskRegion r;
            const std::string shape = rj.at("shape").get<std::string>();
            if (shape == "rect") {
                r.shape = MaskRegion::Shape::Rect;
                r.u_min = rj.at("u_min").get<double>();
                r.u_max = rj.at("u_max").get<double>();
                r.v_min = rj.at("v_min").get<double>();
                r.v_max = rj.at("v_max").get<double>();
            } else if (shape == "annulus") {
                r.shape = MaskRegion::Shape::Annulus;
                r.r_min = rj.at("r_min").get<double>();
                r.r_max = rj.at("r_max").get<double>();
            } else {
                throw std::invalid_argument("mask region: shape must be 'rect' or 'annulus'");
            }
            r.level = std::pow(10.0, rj.at("level_db").get<double>() / 10.0);
            regions.push_back(r);
        }
    }
    return Mask(cu, cv, bwu, bwv, std::move(regions), std::pow(10.0, def_db / 10.0));
}

}  // namespace

Mask Mask::from_json_text(const std::string& text) {
    return parse_mask(nlohmann::json::parse(text));
}

Mask Mask::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mask file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return from_json_text(ss.str());
    } catch (const std::exception& e) {
        throw std::runtime_error("mask file " + path.string() + ": " + e.what());
    }
}

}  // namespace rta
