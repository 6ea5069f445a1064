#include "qclab/surface.hpp"

#include <cmath>

namespace qclab {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 scaled(const Vec3& a, double s) { return {s * a[0], s * a[1], s * a[2]}; }

}  // namespace

SurfacePatch patch_flat() {
    SurfacePatch p;
    p.name = "flat";
    p.X = [](double u, double v) { return Vec3{u, v, 0.0}; };
    p.Xu = [](double, double) { return Vec3{1.0, 0.0, 0.0}; };
    p.Xv = [](double, double) { return Vec3{0.0, 1.0, 0.0}; };
    p.Xuu = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    p.Xuv = p.Xuu;
    p.Xvv = p.Xuu;
    return p;
}

SurfacePatch patch_flat_scaled(double s) {
    if (s <= 0.0) throw config_error("flat_scaled: scale must be positive");
    SurfacePatch p;
    p.name = "flat_scaled";
    p.X = [s](double u, double v) { return Vec3{s * u, s * v, 0.0}; };
    p.Xu = [s](double, double) { return Vec3{s, 0.0, 0.0}; };
    p.Xv = [s](double, double) { return Vec3{0.0, s, 0.0}; };
    p.Xuu = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    p.Xuv = p.Xuu;
    p.Xvv = p.Xuu;
    return p;
}

SurfacePatch patch_sphere_cap(double scale) {
    if (scale <= 0.0) throw config_error("sphere_cap: scale must be positive");
    const double s = scale;
    // stereographic sphere S(u,v) = (2u, 2v, u^2+v^2-1)/(1+u^2+v^2), precomposed with w -> s*w
    auto S = [](double u, double v) {
        double D = 1.0 + u * u + v * v;
        return Vec3{2.0 * u / D, 2.0 * v / D, (u * u + v * v - 1.0) / D};
    };
    auto Su = [](double u, double v) {
        double D = 1.0 + u * u + v * v, D2 = D * D;
        return Vec3{2.0 * (1.0 - u * u + v * v) / D2, -4.0 * u * v / D2, 4.0 * u / D2};
    };
    auto Sv = [](double u, double v) {
        double D = 1.0 + u * u + v * v, D2 = D * D;
        return Vec3{-4.0 * u * v / D2, 2.0 * (1.0 + u * u - v * v) / D2, 4.0 * v / D2};
    };
    auto Suu = [](double u, double v) {
        double D = 1.0 + u * u + v * v, D3 = D * D * D;
        return Vec3{-4.0 * u * (3.0 - u * u + 3.0 * v * v) / D3,
                    -4.0 * v * (1.0 - 3.0 * u * u + v * v) / D3,
                    4.0 * (1.0 - 3.0 * u * u + v * v) / D3};
    };
    auto Suv = [](double u, double v) {
        double D = 1.0 + u * u + v * v, D3 = D * D * D;
        return Vec3{4.0 * v * (3.0 * u * u - v * v - 1.0) / D3,
                    -4.0 * u * (1.0 + u * u - 3.0 * v * v) / D3, -16.0 * u * v / D3};
    };
    auto Svv = [](double u, double v) {
        double D = 1.0 + u * u + v * v, D3 = D * D * D;
        return Vec3{-4.0 * u * (1.0 + u * u - 3.0 * v * v) / D3,
                    -4.0 * v * (3.0 + 3.0 * u * u - v * v) / D3,
                    4.0 * (1.0 + u * u - 3.0 * v * v) / D3};
    };
    SurfacePatch p;
    p.name = "sphere_cap";
    p.X = [S, s](double u, double v) { return S(s * u, s * v); };
    p.Xu = [Su, s](double u, double v) { return scaled(Su(s * u, s * v), s); };
    p.Xv = [Sv, s](double u, double v) { return scaled(Sv(s * u, s * v), s); };
    p.Xuu = [Suu, s](double u, double v) { return scaled(Suu(s * u, s * v), s * s); };
    p.Xuv = [Suv, s](double u, double v) { return scaled(Suv(s * u, s * v), s * s); };
    p.Xvv = [Svv, s](double u, double v) { return scaled(Svv(s * u, s * v), s * s); };
    return p;
}

SurfacePatch patch_cylinder(double radius) {
    if (radius <= 0.0) throw config_error("cylinder: radius must be positive");
    const double R = radius;
    SurfacePatch p;
    p.name = "cylinder";
    p.X = [R](double u, double v) { return Vec3{R * std::cos(u / R), R * std::sin(u / R), v}; };
    p.Xu = [R](double u, double) { return Vec3{-std::sin(u / R), std::cos(u / R), 0.0}; };
    p.Xv = [](double, double) { return Vec3{0.0, 0.0, 1.0}; };
    p.Xuu = [R](double u, double) {
        return Vec3{-std::cos(u / R) / R, -std::sin(u / R) / R, 0.0};
    };
    p.Xuv = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    p.Xvv = p.Xuv;
    return p;
}

SurfacePatch patch_catenoid() {
    SurfacePatch p;
    p.name = "catenoid";
    p.X = [](double u, double v) {
        return Vec3{std::cosh(v) * std::cos(u), std::cosh(v) * std::sin(u), v};
    };
    p.Xu = [](double u, double v) {
        return Vec3{-std::cosh(v) * std::sin(u), std::cosh(v) * std::cos(u), 0.0};
    };
    p.Xv = [](double u, double v) {
        return Vec3{std::sinh(v) * std::cos(u), std::sinh(v) * std::sin(u), 1.0};
    };
    p.Xuu = [](double u, double v) {
        return Vec3{-std::cosh(v) * std::cos(u), -std::cosh(v) * std::sin(u), 0.0};
    };
    p.Xuv = [](double u, double v) {
        return Vec3{-std::sinh(v) * std::sin(u), std::sinh(v) * std::cos(u), 0.0};
    };
    p.Xvv = [](double u, double v) {
        return Vec3{std::cosh(v) * std::cos(u), std::cosh(v) * std::sin(u), 0.0};
    };
    return p;
}

SurfacePatch patch_enneper() {
    SurfacePatch p;
    p.name = "enneper";
    p.X = [](double u, double v) {
        return Vec3{u - u * u * u / 3.0 + u * v * v, -v + v * v * v / 3.0 - u * u * v,
                    u * u - v * v};
    };
    p.Xu = [](double u, double v) {
        return Vec3{1.0 - u * u + v * v, -2.0 * u * v, 2.0 * u};
    };
    p.Xv = [](double u, double v) {
        return Vec3{2.0 * u * v, -(1.0 + u * u - v * v), -2.0 * v};
    };
    p.Xuu = [](double u, double v) { return Vec3{-2.0 * u, -2.0 * v, 2.0}; };
    p.Xuv = [](double u, double v) { return Vec3{2.0 * v, -2.0 * u, 0.0}; };
    p.Xvv = [](double u, double v) { return Vec3{2.0 * u, 2.0 * v, -2.0}; };
    return p;
}

SurfacePatch patch_paraboloid() {
    SurfacePatch p;
    p.name = "paraboloid_graph";
    p.X = [](double u, double v) { return Vec3{u, v, u * u + v * v}; };
    p.Xu = [](double u, double) { return Vec3{1.0, 0.0, 2.0 * u}; };
    p.Xv = [](double, double v) { return Vec3{0.0, 1.0, 2.0 * v}; };
    p.Xuu = [](double, double) { return Vec3{0.0, 0.0, 2.0}; };
    p.Xuv = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    p.Xvv = p.Xuu;
    return p;
}

MetricTensor metric_tensor(const SurfacePatch& p, double u, double v) {
    Vec3 xu = p.Xu(u, v), xv = p.Xv(u, v);
    MetricTensor m{dot(xu, xu), dot(xu, xv), dot(xv, xv)};
    if (m.E * m.G - m.F * m.F <= 1e-14)
        throw numeric_error("metric_tensor: degenerate point (rank < 2)");
    return m;
}

double conformality_residual(const SurfacePatch& p, const DiskGrid& grid) {
    double worst = 0.0;
    for (size_t id = 0; id < grid.node_count(); ++id) {
        cpx w = grid.point(static_cast<int>(id));
        Vec3 xu = p.Xu(w.real(), w.imag()), xv = p.Xv(w.real(), w.imag());
        double r = std::abs(dot(xu, xu) - dot(xv, xv)) + std::abs(dot(xu, xv));
        worst = std::max(worst, r);
    }
    return worst;
}

namespace {

cpx log_rho_w_form1(const SurfacePatch& p, double u, double v) {
    Vec3 xu = p.Xu(u, v), xuu = p.Xuu(u, v), xuv = p.Xuv(u, v);
    double n2 = dot(xu, xu);
    return cpx(dot(xuu, xu), -dot(xuv, xu)) / n2;
}

cpx log_rho_w_form2(const SurfacePatch& p, double u, double v) {
    Vec3 xu = p.Xu(u, v), xv = p.Xv(u, v), xuu = p.Xuu(u, v);
    double n2 = dot(xu, xu);
    return cpx(dot(xuu, xu), dot(xuu, xv)) / n2;
}

template <typename Fn>
void for_each_sample(const DiskGrid& grid, Fn&& fn) {
    for (size_t id = 0; id < grid.node_count(); ++id) {
        cpx w = grid.point(static_cast<int>(id));
        fn(w.real(), w.imag());
    }
    for (const BoundarySample& s : grid.boundary_samples()) fn(s.x, s.y);
}

}  // namespace

ChartConstants chart_constants(const SurfacePatch& p, const DiskGrid& grid) {
    double res = conformality_residual(p, grid);
    if (res > kIsothermalTol)
        throw numeric_error("chart_constants: patch '" + p.name + "' is not isothermal (residual " +
                            std::to_string(res) + ")");
    ChartConstants cc;
    cc.c = 1e300;
    cc.resolution = grid.h();
    for_each_sample(grid, [&](double u, double v) {
        Vec3 xu = p.Xu(u, v), xuu = p.Xuu(u, v), xuv = p.Xuv(u, v), xvv = p.Xvv(u, v);
        double nu = norm(xu);
        cc.c = std::min(cc.c, nu);
        cc.C = std::max(cc.C, norm(xuu) + norm(xuv) + norm(xvv));
        double lw = std::abs(log_rho_w_form1(p, u, v));
        cc.M_prime = std::max(cc.M_prime, lw);
        if (lw > 2.0 * norm(xuu) / nu + 1e-12)
            throw numeric_error("chart_constants: |rho_w| <= 2|Xuu|/|Xu| violated");
        ++cc.samples;
    });
    if (cc.c <= 0.0) throw numeric_error("chart_constants: |Xu| vanishes on the sample set");
    return cc;
}

ConformalFactor constant_factor(double value) {
    if (value <= 0.0) throw config_error("constant factor must be positive");
    ConformalFactor f;
    f.name = "constant";
    f.rho = [value](cpx) { return value; };
    f.log_rho_w = [](cpx) { return cpx(0.0, 0.0); };
    f.is_constant = true;
    return f;
}

ConformalFactor conformal_factor(const SurfacePatch& p, const DiskGrid& grid) {
    double res = conformality_residual(p, grid);
    if (res > kIsothermalTol)
        throw numeric_error("conformal_factor: patch '" + p.name + "' is not isothermal (residual " +
                            std::to_string(res) + ")");
    double cross = 0.0;
    for_each_sample(grid, [&](double u, double v) {
        Vec3 xu = p.Xu(u, v);
        if (dot(xu, xu) <= 0.0) throw numeric_error("conformal_factor: rho vanishes");
        cross = std::max(cross, std::abs(log_rho_w_form1(p, u, v) - log_rho_w_form2(p, u, v)));
    });
    if (cross > 1e-9)
        throw numeric_error("conformal_factor: the two (log rho)_w forms disagree by " +
                            std::to_string(cross));
    ConformalFactor f;
    f.name = p.name;
    f.rho = [p](cpx w) {
        Vec3 xu = p.Xu(w.real(), w.imag());
        return dot(xu, xu);
    };
    f.log_rho_w = [p](cpx w) { return log_rho_w_form1(p, w.real(), w.imag()); };
    f.trust_radius = 2.0;
    return f;
}

double weighted_energy(const ComplexField& g, const ConformalFactor& rho) {
    const DiskGrid& gr = *g.grid();
    const double h = gr.h();
    struct Kahan {
        double sum = 0.0, c = 0.0;
        void add(double x) {
            double y = x - c, t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
    } acc;
    size_t cells = 0;
    for (int j = 0; j + 1 < gr.n(); ++j) {
        for (int i = 0; i + 1 < gr.n(); ++i) {
            int32_t c00 = gr.compact(i, j), c10 = gr.compact(i + 1, j);
            int32_t c01 = gr.compact(i, j + 1), c11 = gr.compact(i + 1, j + 1);
            if (c00 < 0 || c10 < 0 || c01 < 0 || c11 < 0) continue;
            if (!g.defined(c00) || !g.defined(c10) || !g.defined(c01) || !g.defined(c11)) continue;
            cpx center = 0.25 * (g[c00] + g[c10] + g[c01] + g[c11]);
            if (std::abs(center) > rho.trust_radius)
                throw numeric_error("weighted_energy: g escapes the factor's domain");
            cpx gx = (g[c10] - g[c00] + g[c11] - g[c01]) / (2.0 * h);
            cpx gy = (g[c01] - g[c00] + g[c11] - g[c10]) / (2.0 * h);
            acc.add(rho.rho(center) * (std::norm(gx) + std::norm(gy)));
            ++cells;
        }
    }
    if (cells == 0) throw numeric_error("weighted_energy: no interior cells");
    return acc.sum * h * h;
}

}  // namespace qclab
