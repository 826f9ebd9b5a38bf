#include "morrey/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morrey/error.hpp"
#include "morrey/reduction.hpp"

namespace morrey {

double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double ball_volume(int dim, double radius) {
    const double pi = 3.14159265358979323846;
    return dim == 1 ? 2.0 * radius : pi * radius * radius;
}

double sphere_measure(int dim) {
    const double pi = 3.14159265358979323846;
    return dim == 1 ? 2.0 : 2.0 * pi;
}

Grid::Grid(int dim, double half_extent, int cells_per_axis)
    : dim_(dim), half_extent_(half_extent), cells_(cells_per_axis) {
    require(dim == 1 || dim == 2, "bad-grid", "dim must be 1 or 2");
    require(half_extent > 0, "bad-grid", "half_extent must be positive");
    require(cells_per_axis >= 2, "bad-grid", "cells_per_axis must be >= 2");
    spacing_ = 2.0 * half_extent_ / cells_;
    count_ = static_cast<std::size_t>(cells_);
    if (dim_ == 2) count_ *= static_cast<std::size_t>(cells_);
}

double Grid::cell_measure() const {
    return dim_ == 1 ? spacing_ : spacing_ * spacing_;
}

std::size_t Grid::cell_index(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * (dim_ == 2 ? static_cast<std::size_t>(cells_) : 1u) +
           static_cast<std::size_t>(dim_ == 2 ? iy : 0);
}

Point Grid::cell_center(std::size_t index) const {
    if (dim_ == 1) return {axis_center(static_cast<int>(index)), 0.0};
    const int ix = static_cast<int>(index / static_cast<std::size_t>(cells_));
    const int iy = static_cast<int>(index % static_cast<std::size_t>(cells_));
    return {axis_center(ix), axis_center(iy)};
}

namespace {

int clamp_axis(double coord, double R, double h, int n) {
    const int i = static_cast<int>(std::floor((coord + R) / h));
    return std::clamp(i, 0, n - 1);
}

}  // namespace

std::size_t Grid::nearest_cell(const Point& p) const {
    const int ix = clamp_axis(p.x, half_extent_, spacing_, cells_);
    if (dim_ == 1) return static_cast<std::size_t>(ix);
    const int iy = clamp_axis(p.y, half_extent_, spacing_, cells_);
    return cell_index(ix, iy);
}

bool Grid::contains(const Point& p) const {
    if (std::abs(p.x) > half_extent_) return false;
    if (dim_ == 2 && std::abs(p.y) > half_extent_) return false;
    return true;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    require(values_.size() == grid_.cell_count(), "bad-grid-function",
            "value count does not match the grid");
    for (double v : values_) {
        require(std::isfinite(v), "bad-grid-function", "non-finite sample value");
    }
}

GridFunction GridFunction::zeros(const Grid& grid) {
    return GridFunction(grid, std::vector<double>(grid.cell_count(), 0.0));
}

GridFunction scaled(const GridFunction& f, double factor) {
    std::vector<double> v(f.values().begin(), f.values().end());
    for (double& x : v) x *= factor;
    return GridFunction(f.grid(), std::move(v));
}

GridFunction added(const GridFunction& f, const GridFunction& g) {
    require(f.grid() == g.grid(), "grid-mismatch", "operands live on different grids");
    std::vector<double> v(f.values().begin(), f.values().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += g.value(i);
    return GridFunction(f.grid(), std::move(v));
}

namespace {

void check_ball(const Grid& grid, const BallSpec& ball) {
    require(ball.radius > 0, "bad-radius", "ball radius must be positive");
    // Distance from the ball center to the box; the ball must intersect it.
    const double R = grid.half_extent();
    double dx = std::max(0.0, std::abs(ball.center.x) - R);
    double dy = grid.dim() == 2 ? std::max(0.0, std::abs(ball.center.y) - R) : 0.0;
    require(std::hypot(dx, dy) < ball.radius, "empty-quadrature",
            "ball does not intersect the grid box");
}

}  // namespace

void for_each_ball_cell(const Grid& grid, const BallSpec& ball,
                        const std::function<void(std::size_t, const Point&)>& fn) {
    const double h = grid.spacing();
    const double R = grid.half_extent();
    const int n = grid.cells_per_axis();
    const double r = ball.radius;
    const Point c = ball.center;

    const int x_lo = std::max(0, static_cast<int>(std::floor((c.x - r + R) / h - 0.5)));
    const int x_hi = std::min(n - 1, static_cast<int>(std::ceil((c.x + r + R) / h - 0.5)));

    if (grid.dim() == 1) {
        for (int i = x_lo; i <= x_hi; ++i) {
            const double x = grid.axis_center(i);
            if (std::abs(x - c.x) < r) fn(static_cast<std::size_t>(i), {x, 0.0});
        }
        return;
    }
    for (int ix = x_lo; ix <= x_hi; ++ix) {
        const double x = grid.axis_center(ix);
        const double dx = x - c.x;
        if (std::abs(dx) >= r) continue;
        const double span = std::sqrt(r * r - dx * dx);
        const int y_lo = std::max(0, static_cast<int>(std::floor((c.y - span + R) / h - 0.5)));
        const int y_hi = std::min(n - 1, static_cast<int>(std::ceil((c.y + span + R) / h - 0.5)));
        for (int iy = y_lo; iy <= y_hi; ++iy) {
            const double y = grid.axis_center(iy);
            const Point p{x, y};
            if (distance(p, c) < r) fn(grid.cell_index(ix, iy), p);
        }
    }
}

double integrate_ball_transformed(const GridFunction& f, const BallSpec& ball,
                                  const std::function<double(double)>& fn) {
    check_ball(f.grid(), ball);
    std::vector<double> terms;
    for_each_ball_cell(f.grid(), ball, [&](std::size_t index, const Point&) {
        terms.push_back(fn(f.value(index)));
    });
    return pairwise_sum(terms) * f.grid().cell_measure();
}

BallQuadrature integrate_ball_report(const GridFunction& f, const BallSpec& ball) {
    check_ball(f.grid(), ball);
    const Grid& grid = f.grid();
    std::vector<double> terms;
    std::size_t inside = 0;
    for_each_ball_cell(grid, ball, [&](std::size_t index, const Point&) {
        terms.push_back(f.value(index));
        ++inside;
    });

    BallQuadrature out;
    out.value = pairwise_sum(terms) * grid.cell_measure();

    // Exact zero when the ball's bounding box fits inside the grid box;
    // otherwise estimate from the discrete measure.
    const double R = grid.half_extent();
    const bool fits = std::abs(ball.center.x) + ball.radius <= R &&
                      (grid.dim() == 1 || std::abs(ball.center.y) + ball.radius <= R);
    if (!fits) {
        const double covered = static_cast<double>(inside) * grid.cell_measure();
        const double full = ball_volume(grid.dim(), ball.radius);
        out.truncation_fraction = std::clamp(1.0 - covered / full, 0.0, 1.0);
    }
    return out;
}

double integrate_ball(const GridFunction& f, const BallSpec& ball) {
    return integrate_ball_report(f, ball).value;
}

double abs_power(double x, double p) {
    const double a = std::abs(x);
    if (p == 1.0) return a;
    if (p == 2.0) return x * x;
    if (p == 3.0) return x * x * a;
    if (p == 4.0) return (x * x) * (x * x);
    return std::pow(a, p);
}

double proot(double x, double p) {
    if (p == 1.0) return x;
    if (p == 2.0) return std::sqrt(x);
    return std::pow(x, 1.0 / p);
}

double lp_norm_ball(const GridFunction& f, double p, const BallSpec& ball) {
    require(p >= 1.0, "bad-exponent", "p must be >= 1");
    const double moment = integrate_ball_transformed(f, ball, [p](double v) { return abs_power(v, p); });
    return proot(moment, p);
}

double weak_lp_norm_ball(const GridFunction& f, double p, const BallSpec& ball) {
    require(p >= 1.0, "bad-exponent", "p must be >= 1");
    check_ball(f.grid(), ball);
    std::vector<double> mags;
    for_each_ball_cell(f.grid(), ball, [&](std::size_t index, const Point&) {
        const double a = std::abs(f.value(index));
        if (a > 0) mags.push_back(a);
    });
    if (mags.empty()) return 0.0;
    std::sort(mags.begin(), mags.end(), std::greater<>());

    // The sup over thresholds is attained at a sampled magnitude v with the
    // measure of {|f| >= v}; only the last index of a tie block realizes it.
    const double hd = f.grid().cell_measure();
    double best = 0.0;
    for (std::size_t k = 0; k < mags.size(); ++k) {
        if (k + 1 < mags.size() && mags[k + 1] == mags[k]) continue;
        const double candidate = mags[k] * proot(static_cast<double>(k + 1) * hd, p);
        best = std::max(best, candidate);
    }
    return best;
}

}  // namespace morrey
