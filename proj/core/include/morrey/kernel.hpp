#pragma once

#include <variant>
#include <vector>

namespace morrey {

/// Rough kernels are degree-zero homogeneous: they only ever see the
/// direction (x-y)/|x-y|, so homogeneity holds by construction.
struct ConstantShape {
    double value = 1;
};
struct SignPairShape {  // dim 1 only
    double plus = 1;
    double minus = 1;
};
enum class HarmonicKind { cosine, sine };
struct HarmonicShape {  // dim 2 only: cos(k*theta) or sin(k*theta)
    HarmonicKind kind = HarmonicKind::cosine;
    int order = 1;
};
struct AngularTableShape {  // dim 2 only: M >= 4 equal angular cells on [0, 2pi)
    std::vector<double> values;
};

using KernelShape = std::variant<ConstantShape, SignPairShape, HarmonicShape, AngularTableShape>;

class RoughKernel {
public:
    static RoughKernel constant(int dim, double value);
    static RoughKernel sign_pair(double plus, double minus);
    static RoughKernel harmonic(HarmonicKind kind, int order);
    static RoughKernel angular_table(std::vector<double> values);

    int dim() const { return dim_; }
    const KernelShape& shape() const { return shape_; }

    /// Evaluate at a unit direction (|d| = 1 within 1e-9, else "not-a-direction").
    double eval_direction(double dx, double dy = 0) const;

    /// Evaluate at the direction of a nonzero offset x - y.
    double eval_offset(double ux, double uy = 0) const;

private:
    RoughKernel(int dim, KernelShape shape) : dim_(dim), shape_(std::move(shape)) {}

    int dim_;
    KernelShape shape_;
};

/// Angular resolution used for sphere quadrature of harmonic kernels.
inline constexpr int kSphereQuadraturePoints = 4096;

/// (Int_{S^{n-1}} |Omega|^s dsigma)^{1/s} with the unnormalized surface
/// measure (|S^0| = 2, |S^1| = 2pi); s = infinity gives the essential sup.
/// Requires s > 1 ("bad-exponent").
double sphere_lnorm(const RoughKernel& k, double s);

/// Int_{S^{n-1}} Omega dsigma. |result| < 1e-8 qualifies the kernel for the
/// Marcinkiewicz operator.
double cancellation_defect(const RoughKernel& k);

/// Int_{S^{n-1}} |Omega| dsigma (used by self-cell corrections of the
/// maximal operators).
double sphere_abs_integral(const RoughKernel& k);

inline constexpr double kCancellationTolerance = 1e-8;

}  // namespace morrey
