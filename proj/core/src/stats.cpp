#include "morrey/stats.hpp"

#include <cmath>
#include <vector>

namespace morrey {

namespace {

double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
    const std::size_t n = lx.size();
    if (n < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double d = static_cast<double>(n) * sxx - sx * sx;
    if (d == 0.0) return 0.0;
    return (static_cast<double>(n) * sxy - sx * sy) / d;
}

}  // namespace

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    return fit_slope(lx, ly);
}

double last_decade_slope(std::span<const double> x, std::span<const double> y) {
    double xmax = 0;
    for (double v : x) xmax = std::max(xmax, v);
    if (xmax <= 0) return 0.0;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] >= xmax / 10.0 && x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    return fit_slope(lx, ly);
}

SupScan scan_sup(std::span<const double> x, std::span<const double> terms, double slope_threshold) {
    SupScan out;
    if (terms.empty()) return out;
    out.value = terms[0];
    out.argmax = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] > out.value) {
            out.value = terms[i];
            out.argmax = i;
        }
    }
    out.at_boundary = out.argmax == 0 || out.argmax + 1 == terms.size();
    if (!out.at_boundary || terms.size() < 3) return out;

    if (out.argmax + 1 == terms.size()) {
        out.unbounded = last_decade_slope(x, terms) > slope_threshold;
    } else {
        // Growth toward x -> 0: fit the first decade.
        std::vector<double> fx, fy;
        const double x0 = x[0];
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] <= x0 * 10.0) {
                fx.push_back(x[i]);
                fy.push_back(terms[i]);
            }
        }
        out.unbounded = log_log_slope(fx, fy) < -slope_threshold;
    }
    return out;
}

}  // namespace morrey
