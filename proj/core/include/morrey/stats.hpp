#pragma once

#include <cstddef>
#include <span>

namespace morrey {

/// Least-squares slope of ln(y) against ln(x). Pairs with x<=0 or y<=0 are
/// skipped; fewer than two usable pairs give slope 0.
double log_log_slope(std::span<const double> x, std::span<const double> y);

/// Same fit restricted to the last decade of x, i.e. x in [max/10, max].
double last_decade_slope(std::span<const double> x, std::span<const double> y);

struct SupScan {
    double value = 0;
    std::size_t argmax = 0;
    bool at_boundary = false;  ///< argmax is the first or last abscissa
    bool unbounded = false;    ///< boundary argmax with a growth trend toward it
};

/// Max of `terms` over log-spaced abscissas `x`, flagging boundary argmaxes
/// and deciding "the sup escapes to 0 or infinity" from the trend of the
/// outermost decade (|slope| > slope_threshold toward the boundary).
SupScan scan_sup(std::span<const double> x, std::span<const double> terms, double slope_threshold);

}  // namespace morrey
