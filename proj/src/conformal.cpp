#include "qclab/conformal.hpp"

#include <cmath>

#include "qclab/fft.hpp"

namespace qclab {

namespace {

double wrap_angle(double t) {
    double two_pi = 2.0 * M_PI;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

}  // namespace

ConformalMap map_identity() {
    ConformalMap m;
    m.name = "identity";
    m.source = "catalog";
    m.f = [](cpx z) { return z; };
    m.d1 = [](cpx) { return cpx(1.0, 0.0); };
    m.d2 = [](cpx) { return cpx(0.0, 0.0); };
    m.boundary_param = [](double phi) { return wrap_angle(phi); };
    return m;
}

ConformalMap map_mobius(cpx a, double theta) {
    if (std::abs(a) >= 1.0) throw config_error("mobius: |a| must be < 1");
    cpx rot = std::polar(1.0, theta);
    cpx ac = std::conj(a);
    double s = 1.0 - std::norm(a);
    ConformalMap m;
    m.name = "mobius";
    m.source = "catalog";
    m.params = {a.real(), a.imag(), theta};
    m.f = [rot, a, ac](cpx z) { return rot * (z - a) / (1.0 - ac * z); };
    m.d1 = [rot, ac, s](cpx z) {
        cpx d = 1.0 - ac * z;
        return rot * s / (d * d);
    };
    m.d2 = [rot, ac, s](cpx z) {
        cpx d = 1.0 - ac * z;
        return rot * 2.0 * ac * s / (d * d * d);
    };
    m.boundary_param = [rot, a, ac](double phi) {
        cpx z = std::polar(1.0, phi);
        return wrap_angle(std::arg(rot * (z - a) / (1.0 - ac * z)));
    };
    return m;
}

ConformalMap map_power(int k) {
    if (k < 1) throw config_error("power map: exponent must be >= 1");
    ConformalMap m;
    m.name = "power" + std::to_string(k);
    m.source = "catalog";
    m.f = [k](cpx z) { return std::pow(z, k); };
    m.d1 = [k](cpx z) { return static_cast<double>(k) * std::pow(z, k - 1); };
    m.d2 = [k](cpx z) {
        return k < 2 ? cpx(0.0, 0.0)
                     : static_cast<double>(k) * static_cast<double>(k - 1) * std::pow(z, k - 2);
    };
    m.boundary_param = [k](double phi) { return wrap_angle(k * phi); };
    return m;
}

ConformalMap mobius_inverse(const ConformalMap& m) {
    if (m.params.size() != 3) throw config_error("mobius_inverse: not a mobius map");
    cpx a(m.params[0], m.params[1]);
    double theta = m.params[2];
    return map_mobius(-a * std::polar(1.0, theta), -theta);
}

ConformalMap mobius_compose(const ConformalMap& m1, const ConformalMap& m2) {
    if (m1.params.size() != 3 || m2.params.size() != 3)
        throw config_error("mobius_compose: both maps must be mobius");
    cpx a1(m1.params[0], m1.params[1]);
    cpx a = mobius_inverse(m2).f(a1);
    double theta = std::arg(m1.d1(m2.f(a)) * m2.d1(a));
    return map_mobius(a, theta);
}

TheodorsenResult theodorsenmap_impl(const PolarSpec& spec, int n_modes, double tol,
                                    int max_sweeps) {
    const size_t M = detail::next_pow2(static_cast<size_t>(std::max(n_modes, 16)));
    const double two_pi = 2.0 * M_PI;

    TheodorsenResult res;
    res.n_modes = static_cast<int>(M);
    for (size_t j = 0; j < M; ++j) {
        double t = two_pi * j / M;
        double r = spec.r(t);
        if (r <= 0.0) throw config_error("theodorsen: r(theta) must be positive");
        res.epsilon = std::max(res.epsilon, std::abs(spec.rp(t) / r));
    }

    std::vector<double> phi(M), theta(M), logr(M);
    for (size_t j = 0; j < M; ++j) phi[j] = theta[j] = two_pi * j / M;

    double first_res = -1.0;
    bool converged = false;
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        for (size_t j = 0; j < M; ++j) logr[j] = std::log(spec.r(theta[j]));
        std::vector<double> conj = detail::conjugate_samples(logr);
        double delta = 0.0;
        for (size_t j = 0; j < M; ++j) {
            double next = phi[j] + conj[j];
            delta = std::max(delta, std::abs(next - theta[j]));
            theta[j] = next;
        }
        res.residual_history.push_back(delta);
        res.sweeps = sweep;
        if (first_res < 0.0) first_res = delta;
        if (!std::isfinite(delta) || delta > 100.0 * (1.0 + first_res))
            throw solver_error("theodorsen: iteration diverged (epsilon=" +
                                   std::to_string(res.epsilon) + ")",
                               res.residual_history);
        if (delta <= tol) {
            converged = true;
            break;
        }
    }
    res.residual = res.residual_history.empty() ? 0.0 : res.residual_history.back();
    if (!converged)
        throw solver_error("theodorsen: no convergence after " + std::to_string(max_sweeps) +
                               " sweeps (residual " + std::to_string(res.residual) + ")",
                           res.residual_history);

    // boundary correspondence must be a monotone homeomorphism
    for (size_t j = 0; j + 1 < M; ++j)
        if (theta[j + 1] <= theta[j])
            throw numeric_error("theodorsen: boundary correspondence is not strictly increasing");
    if (theta[0] + two_pi <= theta[M - 1])
        throw numeric_error("theodorsen: boundary correspondence is not strictly increasing");

    // coefficients of log(omega(z)/z) from the boundary values
    std::vector<cpx> F(M);
    for (size_t j = 0; j < M; ++j) logr[j] = std::log(spec.r(theta[j]));
    for (size_t j = 0; j < M; ++j) F[j] = cpx(logr[j], theta[j] - phi[j]);
    detail::fft(F, false);
    std::vector<cpx> coef(M / 2);
    for (size_t m = 0; m < M / 2; ++m) coef[m] = F[m] / static_cast<double>(M);
    coef[0] = cpx(coef[0].real(), 0.0);  // omega'(0) > 0

    auto P = [coef](cpx z) {
        cpx acc(0.0, 0.0);
        for (size_t m = coef.size(); m-- > 0;) acc = acc * z + coef[m];
        return acc;
    };
    auto Pp = [coef](cpx z) {
        cpx acc(0.0, 0.0);
        for (size_t m = coef.size(); m-- > 1;)
            acc = acc * z + static_cast<double>(m) * coef[m];
        return acc;
    };
    auto Ppp = [coef](cpx z) {
        cpx acc(0.0, 0.0);
        for (size_t m = coef.size(); m-- > 2;)
            acc = acc * z + static_cast<double>(m) * static_cast<double>(m - 1) * coef[m];
        return acc;
    };

    ConformalMap cm;
    cm.name = "theodorsen";
    cm.source = "theodorsen(" + std::to_string(M) + ")";
    cm.f = [P](cpx z) { return z * std::exp(P(z)); };
    cm.d1 = [P, Pp](cpx z) { return std::exp(P(z)) * (1.0 + z * Pp(z)); };
    cm.d2 = [P, Pp, Ppp](cpx z) {
        cpx p = Pp(z);
        return std::exp(P(z)) * (2.0 * p + z * p * p + z * Ppp(z));
    };
    // periodic linear interpolation of theta(phi) - phi
    std::vector<double> shift(M);
    for (size_t j = 0; j < M; ++j) shift[j] = theta[j] - phi[j];
    cm.boundary_param = [shift, two_pi](double ph) {
        const size_t M2 = shift.size();
        double u = wrap_angle(ph) / two_pi * M2;
        size_t j = static_cast<size_t>(u) % M2;
        double frac = u - std::floor(u);
        double s = (1.0 - frac) * shift[j] + frac * shift[(j + 1) % M2];
        return wrap_angle(ph + s);
    };

    for (size_t j = 0; j < M; ++j) {
        cpx w = cm.f(std::polar(1.0, phi[j]));
        cpx target = spec.r(theta[j]) * std::polar(1.0, theta[j]);
        res.boundary_misfit = std::max(res.boundary_misfit, std::abs(w - target));
    }
    res.map = std::move(cm);
    return res;
}

TheodorsenResult theodorsen_map(const PolarSpec& spec, int n_modes, double tol, int max_sweeps) {
    return theodorsenmap_impl(spec, n_modes, tol, max_sweeps);
}

DerivativeBounds derivative_bounds(const ConformalMap& m, const DiskGrid& grid, Smoothness tag) {
    DerivativeBounds b;
    b.inf_abs = 1e300;
    for (size_t id = 0; id < grid.node_count(); ++id) {
        double a = std::abs(m.d1(grid.point(static_cast<int>(id))));
        b.inf_abs = std::min(b.inf_abs, a);
        b.sup_abs = std::max(b.sup_abs, a);
    }
    (void)tag;
    b.anomaly = b.inf_abs < 1e-8 * b.sup_abs;
    return b;
}

}  // namespace qclab
