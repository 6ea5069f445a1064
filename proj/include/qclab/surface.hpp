#ifndef QCLAB_SURFACE_HPP
#define QCLAB_SURFACE_HPP

#include <array>
#include <functional>
#include <string>

#include "qclab/field.hpp"

namespace qclab {

using Vec3 = std::array<double, 3>;

// Parametrized immersion X: closed unit disk -> R^3 with closed-form
// derivatives. Catalog entries below; isothermal unless noted.
struct SurfacePatch {
    std::string name;
    int l = 3;
    std::function<Vec3(double, double)> X, Xu, Xv, Xuu, Xuv, Xvv;
};

SurfacePatch patch_flat();
SurfacePatch patch_flat_scaled(double s);
// Stereographic parametrization of the unit sphere, precomposed with w -> scale*w.
SurfacePatch patch_sphere_cap(double scale = 1.0);
SurfacePatch patch_cylinder(double radius = 1.0);
SurfacePatch patch_catenoid();
SurfacePatch patch_enneper();
// Graph patch (u, v, u^2+v^2); not isothermal, kept as a rejection case.
SurfacePatch patch_paraboloid();

struct MetricTensor {
    double E, F, G;
};

// First fundamental form at a point of the closed unit disk.
MetricTensor metric_tensor(const SurfacePatch& p, double u, double v);

// max over in-domain grid nodes of | |Xu|^2 - |Xv|^2 | + |<Xu,Xv>|.
double conformality_residual(const SurfacePatch& p, const DiskGrid& grid);

constexpr double kIsothermalTol = 1e-10;

struct ChartConstants {
    double c = 0.0;        // min |Xu| over the sample set
    double C = 0.0;        // max |Xuu| + |Xuv| + |Xvv|
    double M_prime = 0.0;  // max |(log |Xu|^2)_w|
    size_t samples = 0;
    double resolution = 0.0;
};

// Extrema over grid nodes plus the dense boundary samples; asserts the
// pointwise bound |rho_w| <= 2|Xuu|/|Xu| at every sample.
ChartConstants chart_constants(const SurfacePatch& p, const DiskGrid& grid);

struct ConformalFactor {
    std::string name;
    std::function<double(cpx)> rho;
    std::function<cpx(cpx)> log_rho_w;
    double trust_radius = 1e9;  // evaluation domain for composed arguments
    bool is_constant = false;
};

ConformalFactor constant_factor(double value);

// rho = |Xu|^2, (log rho)_w = (<Xuu,Xu> - i<Xuv,Xu>)/|Xu|^2, cross-checked
// against the equivalent form (<Xuu,Xu> + i<Xuu,Xv>)/|Xu|^2.
ConformalFactor conformal_factor(const SurfacePatch& p, const DiskGrid& grid);

// Quadrature of rho(g) * (|gx|^2 + |gy|^2) over interior cells.
double weighted_energy(const ComplexField& g, const ConformalFactor& rho);

}  // namespace qclab

#endif
