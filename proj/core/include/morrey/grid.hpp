#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace morrey {

/// Point in the ambient space. For dim 1 the y component is always 0, which
/// lets geometry helpers stay dimension-agnostic.
struct Point {
    double x = 0;
    double y = 0;
};

double distance(const Point& a, const Point& b);

/// Unit-ball volume v_n r^n (v_1 = 2, v_2 = pi).
double ball_volume(int dim, double radius);

/// Surface measure of the unit sphere: |S^0| = 2, |S^1| = 2*pi.
double sphere_measure(int dim);

/// Uniform cell-centered grid on the box [-R, R]^dim, dim in {1,2}.
/// Cell centers sit at -R + (i + 1/2) h with h = 2R/N; the center set is
/// symmetric about the origin and, for even N, never contains the origin.
class Grid {
public:
    Grid(int dim, double half_extent, int cells_per_axis);

    int dim() const { return dim_; }
    double half_extent() const { return half_extent_; }
    int cells_per_axis() const { return cells_; }
    double spacing() const { return spacing_; }
    std::size_t cell_count() const { return count_; }
    double cell_measure() const;

    /// Row-major indexing for dim 2: index = ix * N + iy.
    std::size_t cell_index(int ix, int iy = 0) const;
    Point cell_center(std::size_t index) const;
    double axis_center(int i) const { return -half_extent_ + (i + 0.5) * spacing_; }

    /// Nearest cell center to p (clamped to the box).
    std::size_t nearest_cell(const Point& p) const;
    bool contains(const Point& p) const;

    bool operator==(const Grid& other) const {
        return dim_ == other.dim_ && half_extent_ == other.half_extent_ && cells_ == other.cells_;
    }

private:
    int dim_;
    double half_extent_;
    int cells_;
    double spacing_;
    std::size_t count_;
};

/// Function sampled at the cell centers of a Grid. Immutable after
/// construction; all values must be finite.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);

    static GridFunction zeros(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double value(std::size_t index) const { return values_[index]; }

private:
    Grid grid_;
    std::vector<double> values_;
};

GridFunction scaled(const GridFunction& f, double factor);
GridFunction added(const GridFunction& f, const GridFunction& g);  // throws grid-mismatch

/// Open ball B(center, radius). Membership of a cell is decided by its
/// center; balls reaching outside the box are silently truncated to it.
struct BallSpec {
    Point center;
    double radius = 0;
};

/// Visit the cells whose centers lie in ball, in fixed row-major order.
void for_each_ball_cell(const Grid& grid, const BallSpec& ball,
                        const std::function<void(std::size_t, const Point&)>& fn);

struct BallQuadrature {
    double value = 0;
    double truncation_fraction = 0;  ///< share of the analytic ball volume cut off by the box
};

/// Midpoint quadrature of f over the ball (pairwise-tree reduction in cell
/// order). Throws "empty-quadrature" when the ball misses the box entirely.
BallQuadrature integrate_ball_report(const GridFunction& f, const BallSpec& ball);
double integrate_ball(const GridFunction& f, const BallSpec& ball);

/// Same quadrature applied to fn(value). Used for |f|^p moments.
double integrate_ball_transformed(const GridFunction& f, const BallSpec& ball,
                                  const std::function<double(double)>& fn);

/// L_p norm over the ball, p >= 1 ("bad-exponent" otherwise).
double lp_norm_ball(const GridFunction& f, double p, const BallSpec& ball);

/// Distribution-function norm sup_l l |{x in B: |f(x)| > l}|^{1/p} over the
/// discrete measure. The sup is attained at a sampled value of |f|, so a
/// scan of those thresholds computes it exactly. Never exceeds lp_norm_ball.
double weak_lp_norm_ball(const GridFunction& f, double p, const BallSpec& ball);

/// |f|^p using plain multiplications for integer p <= 4 so that power-of-two
/// rescalings of f rescale moments exactly.
double abs_power(double x, double p);
/// x^{1/p}, with sqrt for p == 2.
double proot(double x, double p);

}  // namespace morrey
