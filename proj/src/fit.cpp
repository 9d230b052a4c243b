#include "asq/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asq {

FitResult ols_loglinear(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3)
        throw std::domain_error("ols_loglinear: need at least 3 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : samples) {
        if (!(x > 1.0)) throw std::domain_error("ols_loglinear: x values must exceed 1");
        const double lx = std::log(x);
        sx += lx;
        sy += y;
        sxx += lx * lx;
        sxy += lx * y;
    }
    const double n = static_cast<double>(samples.size());
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-12 * n * sxx)
        throw std::domain_error("ols_loglinear: degenerate design matrix");
    FitResult r;
    r.lambda = (n * sxy - sx * sy) / det;
    r.kappa = (sy - r.lambda * sx) / n;
    r.samples = samples.size();
    double ss = 0;
    for (const auto& [x, y] : samples) {
        const double e = y - (r.lambda * std::log(x) + r.kappa);
        ss += e * e;
    }
    r.residual_rms = std::sqrt(ss / n);
    return r;
}

FitResult fit_loglinear(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                        bool dense) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = points;
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> used;
    for (const auto& p : pts)
        if (p.first > 1 && p.second > 0) used.push_back(p);
    if (used.empty()) throw std::domain_error("fit_loglinear: no usable samples");

    std::vector<std::pair<double, double>> samples;
    if (dense) {
        const std::uint64_t x_max = pts.back().first;
        std::size_t j = 0;
        std::uint64_t current = 0;
        samples.reserve(x_max - used.front().first + 1);
        for (std::uint64_t x = used.front().first; x <= x_max; ++x) {
            while (j < used.size() && used[j].first <= x) current = used[j++].second;
            samples.emplace_back(static_cast<double>(x), static_cast<double>(current));
        }
    } else {
        samples.reserve(used.size());
        for (const auto& [x, y] : used)
            samples.emplace_back(static_cast<double>(x), static_cast<double>(y));
    }
    FitResult r = ols_loglinear(samples);
    r.sample_mode = dense ? "dense" : "jumps";
    return r;
}

}  // namespace asq
