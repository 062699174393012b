#include "rta/element_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "rta/weights.hpp"

namespace rta {

ElementPattern ElementPattern::isotropic() {
    return ElementPattern{};
}

ElementPattern ElementPattern::tabulated(std::vector<double> theta_deg, std::vector<double> phi_deg,
                                         std::vector<double> magnitude, std::vector<double> phase_rad) {
    if (theta_deg.size() < 2 || phi_deg.size() < 1)
        throw std::invalid_argument("ElementPattern: need >= 2 theta and >= 1 phi samples");
    if (!std::is_sorted(theta_deg.begin(), theta_deg.end()) || !std::is_sorted(phi_deg.begin(), phi_deg.end()))
        throw std::invalid_argument("ElementPattern: axes must be ascending");
    if (theta_deg.front() > 0.0 || theta_deg.back() < 90.0)
        throw std::invalid_argument("ElementPattern: theta grid must cover [0, 90] deg");
    if (phi_deg.front() < 0.0 || phi_deg.back() >= 360.0)
        throw std::invalid_argument("ElementPattern: phi grid must live in [0, 360) deg");
    if (magnitude.size() != theta_deg.size() * phi_deg.size())
        throw std::invalid_argument("ElementPattern: magnitude size != theta x phi grid");
    if (!phase_rad.empty() && phase_rad.size() != magnitude.size())
        throw std::invalid_argument("ElementPattern: phase size != magnitude size");
    ElementPattern p;
    p.iso_ = false;
    p.theta_ = std::move(theta_deg);
    p.phi_ = std::move(phi_deg);
    p.mag_ = std::move(magnitude);
    p.phase_ = std::move(phase_rad);
    return p;
}

namespace {

// Index of the interval containing x in an ascending axis; clamped.
std::size_t interval_below(const std::vector<double>& axis, double x) {
    auto it = std::upper_bound(axis.begin(), axis.end(), x);
    if (it == axis.begin()) return 0;
    std::size_t i = static_cast<std::size_t>(it - axis.begin()) - 1;
    return std::min(i, axis.size() - 2);
}

}  // namespace

std::complex<double> ElementPattern::value(double u, double v) const {
    if (iso_) return {1.0, 0.0};
    const double r = std::min(1.0, std::hypot(u, v));
    const double theta = std::asin(r) * 180.0 / kPi;
    double phi = std::atan2(v, u) * 180.0 / kPi;
    if (phi < 0.0) phi += 360.0;

    const std::size_t np = phi_.size();
    const std::size_t it = interval_below(theta_, theta);
    const double t0 = theta_[it], t1 = theta_[it + 1];
    const double ft = std::clamp((theta - t0) / (t1 - t0), 0.0, 1.0);

    // phi wraps: the last interval joins phi.back() to phi.front()+360.
    std::size_t ip0, ip1;
    double fp;
    if (np == 1) {
        ip0 = ip1 = 0;
        fp = 0.0;
    } else if (phi < phi_.front() || phi >= phi_.back()) {
        ip0 = np - 1;
        ip1 = 0;
        const double span = phi_.front() + 360.0 - phi_.back();
        double d = phi - phi_.back();
        if (d < 0.0) d += 360.0;
        fp = span > 0.0 ? d / span : 0.0;
    } else {
        ip0 = interval_below(phi_, phi);
        ip1 = ip0 + 1;
        fp = std::clamp((phi - phi_[ip0]) / (phi_[ip0 + 1] - phi_[ip0]), 0.0, 1.0);
    }

    auto sample = [&](std::size_t ti, std::size_t pi) -> std::complex<double> {
        const std::size_t idx = ti * np + pi;
        if (phase_.empty()) return {mag_[idx], 0.0};
        return std::polar(mag_[idx], phase_[idx]);
    };
    const std::complex<double> a = sample(it, ip0) * (1.0 - fp) + sample(it, ip1) * fp;
    const std::complex<double> b = sample(it + 1, ip0) * (1.0 - fp) + sample(it + 1, ip1) * fp;
    return a * (1.0 - ft) + b * ft;
}

ElementPattern ElementPattern::from_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open element pattern file " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty element pattern file");
    const bool has_phase = line.find("phase") != std::string::npos;

    std::map<std::pair<double, double>, std::pair<double, double>> samples;
    std::set<double> thetas, phis;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t = 0.0, p = 0.0, mag = 0.0, ph = 0.0;
        const int want = has_phase ? 4 : 3;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &p, &mag, &ph) < want)
            throw std::runtime_error("malformed element pattern row: " + line);
        thetas.insert(t);
        phis.insert(p);
        samples[{t, p}] = {mag, ph * kPi / 180.0};
    }
    std::vector<double> ta(thetas.begin(), thetas.end());
    std::vector<double> pa(phis.begin(), phis.end());
    std::vector<double> mag(ta.size() * pa.size());
    std::vector<double> phase(has_phase ? mag.size() : 0);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        for (std::size_t j = 0; j < pa.size(); ++j) {
            auto it = samples.find({ta[i], pa[j]});
            if (it == samples.end())
                throw std::runtime_error("element pattern grid is incomplete at theta=" + std::to_string(ta[i]) +
                                         " phi=" + std::to_string(pa[j]));
            mag[i * pa.size() + j] = it->second.first;
            if (has_phase) phase[i * pa.size() + j] = it->second.second;
        }
    }
    return tabulated(std::move(ta), std::move(pa), std::move(mag), std::move(phase));
}

}  // namespace rta
