#include "qclab/curves.hpp"

#include <cmath>

namespace qclab {

double PolarSpec::r(double t) const {
    double v = r0;
    for (const auto& [k, c] : cos_coeffs) v += c * std::cos(k * t);
    for (const auto& [k, s] : sin_coeffs) v += s * std::sin(k * t);
    return v;
}

double PolarSpec::rp(double t) const {
    double v = 0.0;
    for (const auto& [k, c] : cos_coeffs) v -= c * k * std::sin(k * t);
    for (const auto& [k, s] : sin_coeffs) v += s * k * std::cos(k * t);
    return v;
}

double PolarSpec::rpp(double t) const {
    double v = 0.0;
    for (const auto& [k, c] : cos_coeffs) v -= c * k * k * std::cos(k * t);
    for (const auto& [k, s] : sin_coeffs) v -= s * k * k * std::sin(k * t);
    return v;
}

PlanarDomain domain_circle(double radius) {
    if (radius <= 0.0) throw config_error("domain_circle: radius must be positive");
    PlanarDomain d;
    d.name = "disk";
    d.smoothness = Smoothness::C2alpha;
    d.gamma = [radius](double t) { return radius * cpx(std::cos(t), std::sin(t)); };
    d.dgamma = [radius](double t) { return radius * cpx(-std::sin(t), std::cos(t)); };
    d.ddgamma = [radius](double t) { return radius * cpx(-std::cos(t), -std::sin(t)); };
    d.is_unit_circle = (radius == 1.0);
    d.has_polar = true;
    d.polar.r0 = radius;
    return d;
}

PlanarDomain domain_polar(const PolarSpec& spec) {
    PlanarDomain d;
    d.name = "polar";
    d.smoothness = Smoothness::C2alpha;
    d.has_polar = true;
    d.polar = spec;
    d.gamma = [spec](double t) {
        return spec.r(t) * cpx(std::cos(t), std::sin(t));
    };
    d.dgamma = [spec](double t) {
        cpx e(std::cos(t), std::sin(t));
        return (spec.rp(t) + cpx(0, 1) * spec.r(t)) * e;
    };
    d.ddgamma = [spec](double t) {
        cpx e(std::cos(t), std::sin(t));
        return (spec.rpp(t) + cpx(0, 2) * spec.rp(t) - spec.r(t)) * e;
    };
    d.is_unit_circle = spec.cos_coeffs.empty() && spec.sin_coeffs.empty() && spec.r0 == 1.0;
    validate_domain(d);
    return d;
}

void validate_domain(const PlanarDomain& d, int samples) {
    const double two_pi = 2.0 * M_PI;
    for (int k = 0; k < samples; ++k) {
        double t = two_pi * k / samples;
        if (d.has_polar && d.polar.r(t) <= 0.0)
            throw config_error("domain: polar radius must stay positive (t=" + std::to_string(t) + ")");
        if (std::abs(d.dgamma(t)) <= 0.0)
            throw config_error("domain: |gamma'(t)| vanishes at t=" + std::to_string(t));
    }
}

}  // namespace qclab
