#ifndef QCLAB_CONFORMAL_HPP
#define QCLAB_CONFORMAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "qclab/field.hpp"

namespace qclab {

// Holomorphic map of the closed unit disk with first and second derivative
// evaluators. boundary_param maps the disk boundary angle to the parameter of
// the image curve (used to transplant boundary data).
struct ConformalMap {
    std::string name;
    std::string source;  // "catalog" or "theodorsen(n_modes)"
    std::function<cpx(cpx)> f, d1, d2;
    std::function<double(double)> boundary_param;
    std::vector<double> params;  // mobius: {Re a, Im a, theta}
};

ConformalMap map_identity();

// Disk automorphism e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1.
ConformalMap map_mobius(cpx a, double theta);

// z -> z^k. Not injective for k > 1; catalog entry for composition checks.
ConformalMap map_power(int k);

// Parameters (a, theta) of m1 after m2 via the group law.
ConformalMap mobius_compose(const ConformalMap& m1, const ConformalMap& m2);
ConformalMap mobius_inverse(const ConformalMap& m);

struct TheodorsenResult {
    ConformalMap map;
    std::vector<double> residual_history;
    double residual = 0.0;          // final correspondence residual
    double boundary_misfit = 0.0;   // max |omega(e^{i phi}) - gamma(theta(phi))| via the series
    int sweeps = 0;
    int n_modes = 0;
    double epsilon = 0.0;           // max |r'/r|, the classical convergence indicator
};

// Boundary correspondence theta(phi) for a star-shaped domain r(theta) by
// conjugate-function iteration; forward map from the resulting power series of
// log(omega(z)/z). Normalization: omega(0) = 0, omega'(0) > 0.
TheodorsenResult theodorsen_map(const PolarSpec& spec, int n_modes = 256, double tol = 1e-10,
                                int max_sweeps = 500);

struct DerivativeBounds {
    double inf_abs = 0.0;
    double sup_abs = 0.0;
    bool anomaly = false;  // inf near zero on a smooth-tagged domain
};

// Extrema of |omega'| over the in-domain nodes of the grid.
DerivativeBounds derivative_bounds(const ConformalMap& m, const DiskGrid& grid,
                                   Smoothness tag = Smoothness::C2alpha);

}  // namespace qclab

#endif
