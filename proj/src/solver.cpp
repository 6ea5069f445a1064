#include "qclab/solver.hpp"

#include <cmath>
#include <iostream>

#include "qclab/fft.hpp"

namespace qclab {

ComplexField poisson_extension(const BoundaryFn& data, GridPtr grid, int samples) {
    const DiskGrid& g = *grid;
    if (!g.domain().is_unit_circle)
        throw config_error("poisson_extension: unit-disk grids only");
    const int want = 4 * g.n();
    size_t M = detail::next_pow2(static_cast<size_t>(samples > 0 ? samples : want));
    if (samples > 0 && samples < want)
        std::cerr << "poisson_extension: boundary under-sampled (" << samples << " < " << want
                  << "), accuracy may degrade\n";

    std::vector<cpx> c(M);
    const double two_pi = 2.0 * M_PI;
    for (size_t k = 0; k < M; ++k) c[k] = data(two_pi * k / M);
    detail::fft(c, false);
    for (auto& v : c) v /= static_cast<double>(M);

    // f(z) = sum_k c_k r^|k| e^{ik phi}: positive modes in powers of z,
    // negative modes in powers of conj(z)
    ComplexField out(grid);
    const size_t half = M / 2;
    for (size_t id = 0; id < out.size(); ++id) {
        cpx z = g.point(static_cast<int>(id));
        cpx zb = std::conj(z);
        cpx pos(0.0, 0.0), neg(0.0, 0.0);
        for (size_t m = half; m >= 1; --m) pos = (pos + c[m]) * z;      // modes 1..half
        for (size_t m = half + 1; m < M; ++m) neg = (neg + c[m]) * zb;  // modes -(half-1)..-1
        out[id] = c[0] + pos + neg;
    }
    return out;
}

namespace {

// Precomputed Shortley-Weller stencil: diag * u_C = sum coef[d] * u_nb[d] + rhs_bnd - rhs.
struct Stencil {
    double coef[4];
    double diag;
    cpx bnd;  // Dirichlet contribution from cut arms
};

std::vector<Stencil> build_stencils(const DiskGrid& g, const BoundaryFn& data) {
    std::vector<Stencil> st(g.node_count());
    const double h2 = g.h() * g.h();
    for (size_t id = 0; id < g.node_count(); ++id) {
        const GridNode& nd = g.node(static_cast<int>(id));
        double tE = nd.arm[DirE].frac, tW = nd.arm[DirW].frac;
        double tN = nd.arm[DirN].frac, tS = nd.arm[DirS].frac;
        Stencil& s = st[id];
        s.coef[DirE] = 2.0 / (tE * (tE + tW) * h2);
        s.coef[DirW] = 2.0 / (tW * (tE + tW) * h2);
        s.coef[DirN] = 2.0 / (tN * (tN + tS) * h2);
        s.coef[DirS] = 2.0 / (tS * (tN + tS) * h2);
        s.diag = 2.0 / (tE * tW * h2) + 2.0 / (tN * tS * h2);
        s.bnd = cpx(0.0, 0.0);
        for (int d = 0; d < 4; ++d)
            if (nd.arm[d].cut) s.bnd += s.coef[d] * data(nd.arm[d].t);
    }
    return st;
}

double sor_omega(const DiskGrid& g, double requested) {
    if (requested > 0.0) return requested;
    double span = g.h() * (g.n() - 1);
    return 2.0 / (1.0 + std::sin(M_PI * g.h() / span));
}

ComplexField sor_solve(GridPtr grid, const BoundaryFn& data, const std::vector<cpx>* rhs,
                       SorStats* stats, const SorOptions& opt) {
    const DiskGrid& g = *grid;
    std::vector<Stencil> st = build_stencils(g, data);
    const double omega_reg = sor_omega(g, opt.omega);
    // plain Gauss-Seidel at cut nodes: the Shortley-Weller rows are
    // nonsymmetric and do not tolerate near-2 overrelaxation
    std::vector<double> omega(g.node_count());
    for (size_t id = 0; id < g.node_count(); ++id)
        omega[id] = g.node(static_cast<int>(id)).kind == NodeKind::Interior ? omega_reg : 1.0;

    // red-black partition by lattice parity
    std::vector<int32_t> color[2];
    for (size_t id = 0; id < g.node_count(); ++id) {
        const GridNode& nd = g.node(static_cast<int>(id));
        color[(nd.i + nd.j) & 1].push_back(static_cast<int32_t>(id));
    }

    ComplexField u(grid);
    // PDE-scale residual at regular nodes (the certificate domain); cut rows
    // carry O(1/frac) coefficients whose PDE-scale residual floor sits above
    // roundoff, so they are judged in diagonal-scaled (solution) units.
    auto residual = [&](double& regular_res) {
        double r = 0.0;
        regular_res = 0.0;
        for (size_t id = 0; id < g.node_count(); ++id) {
            const Stencil& s = st[id];
            cpx acc = s.bnd - s.diag * u[id];
            for (int d = 0; d < 4; ++d) {
                int32_t nb = g.neighbor(static_cast<int>(id), d);
                if (nb >= 0) acc += s.coef[d] * u[nb];
            }
            if (rhs) acc -= (*rhs)[id];
            if (g.node(static_cast<int>(id)).kind == NodeKind::Interior) {
                regular_res = std::max(regular_res, std::abs(acc));
                r = std::max(r, std::abs(acc));
            } else {
                r = std::max(r, std::abs(acc) / s.diag);
            }
        }
        return r;
    };

    SorStats local;
    double regular_res = 0.0;
    double res = residual(regular_res);
    int sweep = 0;
    while (res > opt.tol && sweep < opt.max_sweeps) {
        for (int c = 0; c < 2; ++c) {
            for (int32_t id : color[c]) {
                const Stencil& s = st[id];
                cpx acc = s.bnd;
                for (int d = 0; d < 4; ++d) {
                    int32_t nb = g.neighbor(id, d);
                    if (nb >= 0) acc += s.coef[d] * u[nb];
                }
                if (rhs) acc -= (*rhs)[id];
                u[id] += omega[id] * (acc / s.diag - u[id]);
            }
        }
        ++sweep;
        if (sweep % 10 == 0 || sweep < 10) {
            res = residual(regular_res);
            if (!std::isfinite(res))
                throw solver_error("sor: residual diverged at sweep " + std::to_string(sweep));
        }
    }
    res = residual(regular_res);
    local.sweeps = sweep;
    local.residual = regular_res;
    local.converged = res <= opt.tol;
    if (stats) *stats = local;
    if (!local.converged)
        throw solver_error("sor: no convergence after " + std::to_string(sweep) +
                           " sweeps (residual " + std::to_string(res) + ")");
    return u;
}

}  // namespace

ComplexField solve_laplace_dirichlet(GridPtr grid, const BoundaryFn& data, SorStats* stats,
                                     const SorOptions& opt) {
    return sor_solve(std::move(grid), data, nullptr, stats, opt);
}

ComplexField solve_poisson(GridPtr grid, const BoundaryFn& data, const std::vector<cpx>& rhs,
                           SorStats* stats, const SorOptions& opt) {
    if (rhs.size() != grid->node_count())
        throw numeric_error("solve_poisson: rhs size mismatch");
    return sor_solve(std::move(grid), data, &rhs, stats, opt);
}

namespace {

// First-order fallback where no second-order one-sided stencil exists; counts uses.
void fill_derivatives(const ComplexField& f, WirtingerPair& w, int* fallbacks) {
    const DiskGrid& g = *f.grid();
    const double h = g.h();
    const cpx I(0, 1);
    for (size_t id = 0; id < f.size(); ++id) {
        if (w.fz.defined(id)) continue;
        cpx fx(0, 0), fy(0, 0);
        int32_t e = g.neighbor(static_cast<int>(id), DirE);
        int32_t wn = g.neighbor(static_cast<int>(id), DirW);
        int32_t n = g.neighbor(static_cast<int>(id), DirN);
        int32_t s = g.neighbor(static_cast<int>(id), DirS);
        fx = e >= 0 ? (f[e] - f[id]) / h : (wn >= 0 ? (f[id] - f[wn]) / h : cpx(0, 0));
        fy = n >= 0 ? (f[n] - f[id]) / h : (s >= 0 ? (f[id] - f[s]) / h : cpx(0, 0));
        w.fz[id] = 0.5 * (fx - I * fy);
        w.fzbar[id] = 0.5 * (fx + I * fy);
        w.fz.set_defined(id, true);
        w.fzbar.set_defined(id, true);
        if (fallbacks) ++(*fallbacks);
    }
}

using RhsBuilder = std::function<cpx(size_t id, cpx g, cpx gz, cpx gzbar)>;

ComplexField picard_solve(GridPtr grid, const BoundaryFn& data, const RhsBuilder& rhs_of,
                          PicardStats* stats, const PicardOptions& opt) {
    SorOptions inner = opt.inner;
    inner.tol = std::min(inner.tol, 0.01 * opt.tol);

    PicardStats local;
    local.relax_final = opt.relax;

    ComplexField g = sor_solve(grid, data, nullptr, nullptr, inner);
    double lambda = opt.relax;
    if (lambda <= 0.0 || lambda > 1.0) throw config_error("picard: relaxation must be in (0,1]");
    double prev_res = 1e300;

    for (int outer = 1; outer <= opt.max_outer; ++outer) {
        local.outer = outer;
        WirtingerPair w = wirtinger(g);
        fill_derivatives(g, w, &local.fallback_stencils);
        std::vector<cpx> rhs(g.size());
        for (size_t id = 0; id < g.size(); ++id)
            rhs[id] = rhs_of(id, g[id], w.fz[id], w.fzbar[id]);

        // nonlinear residual through the field Laplacian
        ComplexField lap = laplacian(g);
        double res = 0.0;
        for (size_t id = 0; id < g.size(); ++id)
            if (lap.defined(id)) res = std::max(res, std::abs(lap[id] - rhs[id]));
        local.residual = res;
        local.residual_history.push_back(res);
        if (!std::isfinite(res) || res > 1e6 * (1.0 + local.residual_history.front()))
            throw solver_error("picard: iteration diverged", local.residual_history);
        if (res <= opt.tol) {
            local.converged = true;
            break;
        }
        if (res > prev_res && lambda > 1.0 / 64.0) lambda *= 0.5;
        prev_res = res;

        ComplexField gt = sor_solve(grid, data, &rhs, nullptr, inner);
        for (size_t id = 0; id < g.size(); ++id)
            g[id] = (1.0 - lambda) * g[id] + lambda * gt[id];
    }
    local.relax_final = lambda;
    if (stats) *stats = local;
    if (!local.converged)
        throw solver_error("picard: no convergence after " + std::to_string(local.outer) +
                               " iterations (residual " + std::to_string(local.residual) + ")",
                           local.residual_history);
    return g;
}

}  // namespace

ComplexField solve_rho_harmonic(const ConformalFactor& rho, const BoundaryFn& data, GridPtr grid,
                                PicardStats* stats, const PicardOptions& opt) {
    const double trust = rho.trust_radius;
    RhsBuilder rhs = [&rho, trust](size_t, cpx g, cpx gz, cpx gzbar) {
        if (std::abs(g) > trust)
            throw solver_error("rho_harmonic: iterate escaped the factor's domain (|g| = " +
                               std::to_string(std::abs(g)) + ")");
        return -4.0 * rho.log_rho_w(g) * gz * gzbar;
    };
    return picard_solve(std::move(grid), data, rhs, stats, opt);
}

double rho_harmonic_residual(const ConformalFactor& rho, const ComplexField& g,
                             const ComplexField& lap, const ComplexField& gz,
                             const ComplexField& gzbar) {
    double res = 0.0;
    for (size_t id = 0; id < g.size(); ++id) {
        if (!lap.defined(id) || !gz.defined(id) || !gzbar.defined(id)) continue;
        res = std::max(res, std::abs(lap[id] + 4.0 * rho.log_rho_w(g[id]) * gz[id] * gzbar[id]));
    }
    return res;
}

CoeffFn coeff_zero() {
    return [](cpx, cpx) { return cpx(0.0, 0.0); };
}

CoeffFn coeff_const(cpx v) {
    return [v](cpx, cpx) { return v; };
}

void EllipticCoeffs::validate() const {
    if (alpha <= 0.0) throw config_error("elliptic: alpha must be positive");
    if (alpha * gamma - beta * beta <= 0.0)
        throw config_error("elliptic: alpha*gamma - beta^2 must be positive");
}

ReducedCoeffs reduce_elliptic(const EllipticCoeffs& ec, const DiskGrid& grid, double sup_w) {
    ec.validate();
    const double s = std::sqrt(ec.alpha * ec.gamma - ec.beta * ec.beta);
    const double tau = std::sqrt(ec.alpha + ec.gamma + 2.0 * s);

    ReducedCoeffs rc;
    // S = A^{1/2} = (A + s I)/tau, T = S^{-1}
    rc.substitution_inv = {(ec.alpha + s) / tau, ec.beta / tau, (ec.gamma + s) / tau};
    rc.substitution = {(ec.gamma + s) / (tau * s), -ec.beta / (tau * s), (ec.alpha + s) / (tau * s)};
    rc.sup_w = sup_w;

    const Sym2 T = rc.substitution;
    const Sym2 S = rc.substitution_inv;
    const double t11 = T.m11, t12 = T.m12, t22 = T.m22;

    // grad_x w = T grad_u W; coefficients are evaluated at x = S u
    auto at = [S](const CoeffFn& f) {
        return [S, f](cpx u, cpx w) { return f(S.apply(u), w); };
    };
    CoeffFn a1 = at(ec.a1), b1 = at(ec.b1), c1 = at(ec.c1);
    CoeffFn a = at(ec.a), b = at(ec.b);
    rc.cp = at(ec.c);
    rc.dp = at(ec.d);
    rc.a1p = [a1, b1, c1, t11, t12](cpx u, cpx w) {
        return a1(u, w) * (t11 * t11) + b1(u, w) * (t11 * t12) + c1(u, w) * (t12 * t12);
    };
    rc.b1p = [a1, b1, c1, t11, t12, t22](cpx u, cpx w) {
        return 2.0 * a1(u, w) * (t11 * t12) + b1(u, w) * (t11 * t22 + t12 * t12) +
               2.0 * c1(u, w) * (t12 * t22);
    };
    rc.c1p = [a1, b1, c1, t12, t22](cpx u, cpx w) {
        return a1(u, w) * (t12 * t12) + b1(u, w) * (t12 * t22) + c1(u, w) * (t22 * t22);
    };
    rc.ap = [a, b, t11, t12](cpx u, cpx w) { return a(u, w) * t11 + b(u, w) * t12; };
    rc.bp = [a, b, t12, t22](cpx u, cpx w) { return a(u, w) * t12 + b(u, w) * t22; };

    // sup-norms over the grid nodes mapped into Omega', w over a spiral in |w| <= sup_w
    std::vector<cpx> wprobe{cpx(0.0, 0.0)};
    for (int k = 1; k <= 16; ++k) {
        double r = sup_w * k / 16.0;
        wprobe.push_back(std::polar(r, 0.39996 * k * 2.0 * M_PI));
    }
    auto supmod = [&](const CoeffFn& f) {
        double m = 0.0;
        for (size_t id = 0; id < grid.node_count(); ++id) {
            cpx u = T.apply(grid.point(static_cast<int>(id)));
            for (cpx w : wprobe) m = std::max(m, std::abs(f(u, w)));
        }
        return m;
    };
    const double na1 = supmod(rc.a1p), nb1 = supmod(rc.b1p), nc1 = supmod(rc.c1p);
    const double na = supmod(rc.ap), nb = supmod(rc.bp), nc = supmod(rc.cp), nd = supmod(rc.dp);
    rc.M = 0.5 * (na + nb) + std::max(na1, nc1) + 0.5 * nb1;
    rc.N = 0.5 * (na + nb) + nc * sup_w + nd;
    return rc;
}

GeneralEllipticResult solve_general_elliptic(const EllipticCoeffs& ec, const PlanarDomain& dom,
                                             const BoundaryFn& data, int n,
                                             const PicardOptions& opt, double sup_w) {
    ec.validate();
    // bound for |w| in the N formula: boundary data maximum unless supplied
    double wb = sup_w;
    if (wb < 0.0) {
        wb = 0.0;
        for (int k = 0; k < 1024; ++k) wb = std::max(wb, std::abs(data(2.0 * M_PI * k / 1024)));
    }

    GeneralEllipticResult out;
    {
        // reduction constants sampled on the original domain's grid
        DiskGrid base(dom, n);
        out.reduced = reduce_elliptic(ec, base, wb);
    }
    const Sym2 T = out.reduced.substitution;

    PlanarDomain mapped;
    mapped.name = dom.name + "_reduced";
    mapped.smoothness = dom.smoothness;
    auto gamma = dom.gamma, dgamma = dom.dgamma, ddgamma = dom.ddgamma;
    mapped.gamma = [T, gamma](double t) { return T.apply(gamma(t)); };
    mapped.dgamma = [T, dgamma](double t) { return T.apply(dgamma(t)); };
    mapped.ddgamma = [T, ddgamma](double t) { return T.apply(ddgamma(t)); };
    out.grid = make_grid(mapped, n);

    const ReducedCoeffs& rc = out.reduced;
    auto position = [&](size_t id) { return out.grid->point(static_cast<int>(id)); };
    RhsBuilder rhs = [&rc, position](size_t id, cpx wv, cpx wz, cpx wzbar) {
        cpx u = position(id);
        cpx wu = wz + wzbar;                 // d/du
        cpx wvv = cpx(0, 1) * (wz - wzbar);  // d/dv
        return -(rc.a1p(u, wv) * wu * wu + rc.b1p(u, wv) * wu * wvv + rc.c1p(u, wv) * wvv * wvv +
                 rc.ap(u, wv) * wu + rc.bp(u, wv) * wvv + rc.cp(u, wv) * wv + rc.dp(u, wv));
    };
    out.field = picard_solve(out.grid, data, rhs, &out.stats, opt);
    return out;
}

BoundaryFn transplant_boundary(const ConformalMap& m, const BoundaryFn& data) {
    if (!m.boundary_param)
        throw config_error("transplant_boundary: map lacks a boundary correspondence");
    auto bp = m.boundary_param;
    return [bp, data](double phi) { return data(bp(phi)); };
}

}  // namespace qclab
