#ifndef QCLAB_CURVES_HPP
#define QCLAB_CURVES_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qclab {

using cpx = std::complex<double>;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct solver_error : std::runtime_error {
    solver_error(const std::string& msg, std::vector<double> history = {})
        : std::runtime_error(msg), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

enum class Smoothness { C1alpha, C2alpha };

// Star-shaped boundary in polar-graph form r(t) = r0 + sum c_k cos(kt) + sum s_k sin(kt).
struct PolarSpec {
    double r0 = 1.0;
    std::vector<std::pair<int, double>> cos_coeffs;
    std::vector<std::pair<int, double>> sin_coeffs;

    double r(double t) const;
    double rp(double t) const;   // dr/dt
    double rpp(double t) const;  // d2r/dt2
};

// Closed Jordan curve t in [0, 2pi) with derivative evaluators.
struct PlanarDomain {
    std::string name;
    Smoothness smoothness = Smoothness::C2alpha;
    std::function<cpx(double)> gamma;
    std::function<cpx(double)> dgamma;
    std::function<cpx(double)> ddgamma;
    bool is_unit_circle = false;
    bool has_polar = false;
    PolarSpec polar;
};

PlanarDomain domain_circle(double radius = 1.0);
PlanarDomain domain_polar(const PolarSpec& spec);

// Checks |gamma'| > 0 and r > 0 (polar case) on a sample set; throws config_error.
void validate_domain(const PlanarDomain& d, int samples = 2048);

}  // namespace qclab

#endif
