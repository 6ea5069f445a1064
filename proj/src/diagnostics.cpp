#include "qclab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace qclab {

BeltramiField beltrami(const ComplexField& f) {
    WirtingerPair w = wirtinger(f);
    double ms = 0.0;
    size_t cnt = 0;
    for (size_t id = 0; id < f.size(); ++id) {
        if (!w.fz.defined(id)) continue;
        ms += std::norm(w.fz[id]) + std::norm(w.fzbar[id]);
        ++cnt;
    }
    if (cnt == 0) throw numeric_error("beltrami: no derivative stencils available");

    BeltramiField b;
    b.floor = 1e-8 * std::sqrt(ms / cnt);
    b.mu = ComplexField(f.grid());
    for (size_t id = 0; id < f.size(); ++id) {
        if (!w.fz.defined(id)) {
            b.mu.set_defined(id, false);
            continue;
        }
        if (std::abs(w.fz[id]) < b.floor) {
            b.mu.set_defined(id, false);
            ++b.degenerate_count;
            continue;
        }
        b.mu[id] = w.fzbar[id] / w.fz[id];
        b.k = std::max(b.k, std::abs(b.mu[id]));
    }
    if (b.mu.defined_count() == 0) throw numeric_error("beltrami: all nodes degenerate");
    return b;
}

PoissonFit fit_poisson_constants(const ComplexField& f, const std::vector<double>& M_sweep) {
    if (M_sweep.empty()) throw config_error("fit_poisson_constants: empty sweep");
    WirtingerPair w = wirtinger(f);
    ComplexField lap = laplacian(f);
    std::vector<double> g2 = gradient_norm_sq(w);

    PoissonFit fit;
    double scale_acc = 0.0;
    size_t cnt = 0;
    for (size_t id = 0; id < f.size(); ++id) {
        if (!lap.defined(id) || !w.fz.defined(id)) continue;
        scale_acc += g2[id];
        ++cnt;
    }
    if (cnt == 0) throw numeric_error("fit_poisson_constants: no usable nodes");
    fit.scale = std::max(scale_acc / cnt, 1e-300);

    std::vector<double> sweep = M_sweep;
    std::sort(sweep.begin(), sweep.end());
    double best = 1e300;
    for (double M : sweep) {
        if (M < 0.0) throw config_error("fit_poisson_constants: negative M in sweep");
        double N = 0.0;
        for (size_t id = 0; id < f.size(); ++id) {
            if (!lap.defined(id) || !w.fz.defined(id)) continue;
            N = std::max(N, std::abs(lap[id]) - M * g2[id]);
        }
        N = std::max(N, 0.0);
        fit.curve.emplace_back(M, N);
        double cost = M + N / fit.scale;
        if (cost < best) {
            best = cost;
            fit.chosen_M = M;
            fit.chosen_N = N;
        }
    }

    // recheck the chosen pair pointwise
    fit.residual_ok = true;
    for (size_t id = 0; id < f.size(); ++id) {
        if (!lap.defined(id) || !w.fz.defined(id)) continue;
        if (std::abs(lap[id]) > fit.chosen_M * g2[id] + fit.chosen_N + 1e-12 * fit.scale) {
            fit.residual_ok = false;
            break;
        }
    }
    return fit;
}

ComponentInequalityReport check_component_inequality(const ComplexField& f, double M, double N) {
    BeltramiField b = beltrami(f);
    if (!(b.k < 1.0))
        throw numeric_error("check_component_inequality: field is not quasiconformal (k >= 1)");

    WirtingerPair w = wirtinger(f);
    ComplexField lap = laplacian(f);
    const double k = b.k;
    const double upper = (1.0 + k) * (1.0 + k) / ((1.0 - k) * (1.0 - k));
    const double lower = 1.0 / upper;

    ComponentInequalityReport rep;
    rep.k = k;
    for (size_t id = 0; id < f.size(); ++id) {
        if (!w.fz.defined(id) || !b.mu.defined(id)) {
            if (w.fz.defined(id)) ++rep.nodes_excluded;
            continue;
        }
        cpx fz = w.fz[id], fzb = w.fzbar[id];
        // A = |grad u|^2, B = |grad v|^2 via the half-sum formulas
        double A = 0.5 * (std::norm(fz + std::conj(fzb)) + std::norm(fzb + std::conj(fz)));
        double B = 0.5 * (std::norm(fz - std::conj(fzb)) + std::norm(fzb - std::conj(fz)));
        if (B <= 0.0) {
            ++rep.nodes_excluded;
            continue;
        }
        cpx nu = std::conj(fzb) / fz;
        double ratio = A / B;
        double formula = std::norm(1.0 + nu) / std::norm(1.0 - nu);
        rep.max_identity_dev = std::max(rep.max_identity_dev, std::abs(ratio - formula));
        rep.max_sandwich_violation =
            std::max({rep.max_sandwich_violation, lower - ratio, ratio - upper});
        if (lap.defined(id)) {
            // Delta u = Re Delta f, Delta v = Im Delta f
            double du = std::abs(lap[id].real()), dv = std::abs(lap[id].imag());
            rep.max_pdi_violation = std::max(rep.max_pdi_violation, du - (M * upper * A + N));
            rep.max_pdi_violation = std::max(rep.max_pdi_violation, dv - (M * upper * B + N));
        }
        ++rep.nodes_checked;
    }
    if (rep.nodes_checked == 0)
        throw numeric_error("check_component_inequality: no usable nodes");
    return rep;
}

namespace {

// Cubic Lagrange weights for the 4-node stencil {-1, 0, 1, 2} at offset s in [0,1].
void cubic_weights(double s, double w[4]) {
    w[0] = -s * (s - 1.0) * (s - 2.0) / 6.0;
    w[1] = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    w[2] = -(s + 1.0) * s * (s - 2.0) / 2.0;
    w[3] = (s + 1.0) * s * (s - 1.0) / 6.0;
}

// Bicubic interpolation of a field at point p; false if the 4x4 support is not
// fully in-domain and defined.
bool interp_bicubic(const ComplexField& f, cpx p, cpx& out) {
    const DiskGrid& g = *f.grid();
    double gx = (p.real() - g.x0()) / g.h();
    double gy = (p.imag() - g.y0()) / g.h();
    int i0 = static_cast<int>(std::floor(gx));
    int j0 = static_cast<int>(std::floor(gy));
    double sx = gx - i0, sy = gy - j0;
    double wx[4], wy[4];
    cubic_weights(sx, wx);
    cubic_weights(sy, wy);
    cpx acc(0.0, 0.0);
    for (int dj = -1; dj <= 2; ++dj) {
        for (int di = -1; di <= 2; ++di) {
            int32_t id = g.compact(i0 + di, j0 + dj);
            if (id < 0 || !f.defined(id)) return false;
            acc += wx[di + 1] * wy[dj + 1] * f[id];
        }
    }
    out = acc;
    return true;
}

}  // namespace

CompositionCheckReport composition_laplacian_check(const ConformalMap& phi, const ComplexField& f,
                                                   const ConformalMap& eta) {
    const DiskGrid& g = *f.grid();
    WirtingerPair w = wirtinger(f);
    ComplexField lap = laplacian(f);

    // fhat sampled through the composition; mask where interpolation fails
    ComplexField fhat(f.grid());
    std::vector<uint8_t> ok(f.size(), 0);
    for (size_t id = 0; id < f.size(); ++id) {
        cpx q = eta.f(g.point(static_cast<int>(id)));
        cpx fv;
        if (interp_bicubic(f, q, fv)) {
            fhat[id] = phi.f(fv);
            ok[id] = 1;
        } else {
            fhat.set_defined(id, false);
        }
    }
    WirtingerPair wh = wirtinger(fhat);
    ComplexField laph = laplacian(fhat);

    CompositionCheckReport rep;
    for (size_t id = 0; id < f.size(); ++id) {
        if (!ok[id]) {
            ++rep.nodes_skipped;
            continue;
        }
        cpx z = g.point(static_cast<int>(id));
        cpx q = eta.f(z);
        cpx fv, fzv, fzbv, lapv;
        if (!interp_bicubic(f, q, fv) || !interp_bicubic(w.fz, q, fzv) ||
            !interp_bicubic(w.fzbar, q, fzbv) || !interp_bicubic(lap, q, lapv)) {
            ++rep.nodes_skipped;
            continue;
        }
        cpx ep = eta.d1(z);
        cpx p1 = phi.d1(fv), p2 = phi.d2(fv);
        bool counted = false;
        if (wh.fz.defined(id)) {
            rep.max_dev_dz = std::max(rep.max_dev_dz, std::abs(wh.fz[id] - p1 * fzv * ep));
            rep.max_dev_dzbar =
                std::max(rep.max_dev_dzbar, std::abs(wh.fzbar[id] - p1 * fzbv * std::conj(ep)));
            counted = true;
        }
        if (laph.defined(id)) {
            cpx rhs = 4.0 * (p2 * fzv * fzbv + p1 * lapv / 4.0) * std::norm(ep);
            rep.max_dev_lap = std::max(rep.max_dev_lap, std::abs(laph[id] - rhs));
            counted = true;
        }
        if (counted)
            ++rep.nodes_checked;
        else
            ++rep.nodes_skipped;
    }
    if (rep.nodes_checked == 0)
        throw numeric_error("composition_laplacian_check: no common subgrid");
    rep.max_dev = std::max({rep.max_dev_dz, rep.max_dev_dzbar, rep.max_dev_lap});
    return rep;
}

GradientChainReport verify_gradient_chain(const ComplexField& f_hat) {
    BeltramiField b = beltrami(f_hat);
    if (!(b.k < 1.0)) throw numeric_error("verify_gradient_chain: k >= 1");
    WirtingerPair w = wirtinger(f_hat);

    GradientChainReport rep;
    rep.k = b.k;
    rep.left_slack = 1e300;
    for (size_t id = 0; id < f_hat.size(); ++id) {
        if (!w.fz.defined(id)) continue;
        cpx fz = w.fz[id], fzb = w.fzbar[id];
        // s = Im fhat: s_z = (fz - conj(fzb)) / (2i)
        double sz = 0.5 * std::abs(fz - std::conj(fzb));
        double grad_s = 2.0 * sz;  // |grad s| = 2|s_z| for real s
        rep.b_t = std::max(rep.b_t, grad_s);
        double lhs = (1.0 - rep.k) * std::abs(fz);
        rep.max_left_violation = std::max(rep.max_left_violation, lhs - 2.0 * sz);
        rep.left_slack = std::min(rep.left_slack, 2.0 * sz - lhs);
        rep.global_lhs = std::max(rep.global_lhs, std::abs(fz) + std::abs(fzb));
    }
    rep.global_rhs = std::sqrt(2.0) * (1.0 + rep.k) / (1.0 - rep.k) * rep.b_t;
    rep.global_ok = rep.global_lhs <= rep.global_rhs + 1e-12;
    return rep;
}

namespace {

// band index for a distance, or -1 if outside all bands
int band_of(double dist, double delta0, int n_collars) {
    if (dist >= delta0) return 0;
    for (int j = 1; j < n_collars; ++j) {
        double lo = delta0 * std::pow(0.5, j);
        if (dist >= lo) return j;
    }
    return -1;
}

}  // namespace

CollarProfile collar_profile(const ComplexField& f, int n_collars, double delta0) {
    if (n_collars < 3) throw config_error("collar_profile: need at least 3 collars");
    const DiskGrid& g = *f.grid();
    WirtingerPair w = wirtinger(f);
    std::vector<double> dist = g.boundary_distances();

    std::vector<double> sup(n_collars, -1.0);
    for (size_t id = 0; id < f.size(); ++id) {
        if (!w.fz.defined(id)) continue;
        int j = band_of(dist[id], delta0, n_collars);
        if (j < 0) continue;
        sup[j] = std::max(sup[j], std::abs(w.fz[id]) + std::abs(w.fzbar[id]));
    }

    CollarProfile cp;
    for (int j = 0; j < n_collars; ++j)
        if (sup[j] >= 0.0) cp.collars.emplace_back(delta0 * std::pow(0.5, j), sup[j]);
    if (cp.collars.size() < 3)
        throw numeric_error("collar_profile: fewer than 3 populated collars at this resolution");

    // finite-difference Lipschitz ratio over boundary-adjacent 4-neighbor pairs
    for (size_t id = 0; id < f.size(); ++id) {
        const GridNode& nd = g.node(static_cast<int>(id));
        if (nd.kind != NodeKind::Boundary) continue;
        for (int d = 0; d < 4; ++d) {
            int32_t nb = g.neighbor(static_cast<int>(id), d);
            if (nb < 0) continue;
            cp.lipschitz_estimate =
                std::max(cp.lipschitz_estimate, std::abs(f[id] - f[nb]) / g.h());
        }
    }

    // verdict from the last three populated collars
    size_t m = cp.collars.size();
    double lo = 1e300, hi = 0.0;
    for (size_t j = m - 3; j < m; ++j) {
        lo = std::min(lo, cp.collars[j].second);
        hi = std::max(hi, cp.collars[j].second);
    }
    cp.plateau = lo > 0.0 && hi / lo < 1.15;

    // log-log slope over the same window
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t j = m - 3; j < m; ++j) {
        double x = std::log(cp.collars[j].first);
        double y = std::log(std::max(cp.collars[j].second, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    cp.exponent = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
    return cp;
}

BilipschitzProbe bilipschitz_probe(const ComplexField& f, int n_collars, double delta0) {
    const DiskGrid& g = *f.grid();
    WirtingerPair w = wirtinger(f);
    std::vector<double> dist = g.boundary_distances();

    std::vector<double> inf(n_collars, 1e300);
    std::vector<uint8_t> seen(n_collars, 0);
    for (size_t id = 0; id < f.size(); ++id) {
        if (!w.fz.defined(id)) continue;
        int j = band_of(dist[id], delta0, n_collars);
        if (j < 0) continue;
        inf[j] = std::min(inf[j], std::abs(w.fz[id]) - std::abs(w.fzbar[id]));
        seen[j] = 1;
    }
    BilipschitzProbe bp;
    bp.overall_inf = 1e300;
    for (int j = 0; j < n_collars; ++j) {
        if (!seen[j]) continue;
        bp.collars.emplace_back(delta0 * std::pow(0.5, j), inf[j]);
        bp.overall_inf = std::min(bp.overall_inf, inf[j]);
    }
    if (bp.collars.empty()) throw numeric_error("bilipschitz_probe: no populated collars");
    bp.positive_floor = bp.overall_inf > 0.0;
    return bp;
}

}  // namespace qclab
