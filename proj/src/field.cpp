#include "qclab/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace qclab {

ComplexField ComplexField::sample(GridPtr g, const std::function<cpx(cpx)>& f) {
    ComplexField out(std::move(g));
    for (size_t id = 0; id < out.size(); ++id) {
        cpx v = f(out.grid_->point(static_cast<int>(id)));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw numeric_error("field::sample: non-finite value at node");
        out.values_[id] = v;
    }
    return out;
}

size_t ComplexField::defined_count() const {
    size_t c = 0;
    for (uint8_t d : defined_) c += d;
    return c;
}

void ComplexField::require_same_grid(const ComplexField& o) const {
    if (grid_.get() != o.grid_.get())
        throw numeric_error("field: operands live on different grids");
}

ComplexField& ComplexField::operator+=(const ComplexField& o) {
    require_same_grid(o);
    for (size_t id = 0; id < values_.size(); ++id) {
        values_[id] += o.values_[id];
        defined_[id] = defined_[id] && o.defined_[id];
    }
    return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& o) {
    require_same_grid(o);
    for (size_t id = 0; id < values_.size(); ++id) {
        values_[id] -= o.values_[id];
        defined_[id] = defined_[id] && o.defined_[id];
    }
    return *this;
}

ComplexField& ComplexField::operator*=(cpx s) {
    for (cpx& v : values_) v *= s;
    return *this;
}

double ComplexField::max_abs_diff(const ComplexField& a, const ComplexField& b) {
    a.require_same_grid(b);
    double m = 0.0;
    for (size_t id = 0; id < a.values_.size(); ++id)
        if (a.defined_[id] && b.defined_[id])
            m = std::max(m, std::abs(a.values_[id] - b.values_[id]));
    return m;
}

double ComplexField::max_abs() const {
    double m = 0.0;
    for (size_t id = 0; id < values_.size(); ++id)
        if (defined_[id]) m = std::max(m, std::abs(values_[id]));
    return m;
}

VectorField VectorField::sample(GridPtr g, int l, const std::function<std::vector<double>(cpx)>& f) {
    VectorField out(std::move(g), l);
    for (size_t id = 0; id < out.grid_->node_count(); ++id) {
        std::vector<double> v = f(out.grid_->point(static_cast<int>(id)));
        if (static_cast<int>(v.size()) != l)
            throw numeric_error("vector field: sampler returned wrong component count");
        for (int c = 0; c < l; ++c) out.values_[id * l + c] = v[c];
    }
    return out;
}

void write_csv(const ComplexField& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw numeric_error("write_csv: cannot open " + path);
    os << "x,y,re,im\n";
    char buf[128];
    const DiskGrid& g = *f.grid();
    for (size_t id = 0; id < f.size(); ++id) {
        if (!f.defined(id)) continue;
        cpx p = g.point(static_cast<int>(id));
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.real(), p.imag(),
                      f[id].real(), f[id].imag());
        os << buf;
    }
}

namespace {

// d/dx (dir_p = E, dir_m = W) or d/dy along one axis, one-sided when needed.
// Returns false when no second-order stencil exists.
bool axis_derivative(const ComplexField& f, const DiskGrid& g, int id, int dir_p, int dir_m,
                     double h, cpx& out) {
    int32_t p = g.neighbor(id, dir_p);
    int32_t m = g.neighbor(id, dir_m);
    bool okp = p >= 0 && f.defined(p);
    bool okm = m >= 0 && f.defined(m);
    if (okp && okm) {
        out = (f[p] - f[m]) / (2.0 * h);
        return true;
    }
    if (okp) {
        int32_t pp = g.neighbor(p, dir_p);
        if (pp >= 0 && f.defined(pp)) {
            out = (-3.0 * f[id] + 4.0 * f[p] - f[pp]) / (2.0 * h);
            return true;
        }
    }
    if (okm) {
        int32_t mm = g.neighbor(m, dir_m);
        if (mm >= 0 && f.defined(mm)) {
            out = (3.0 * f[id] - 4.0 * f[m] + f[mm]) / (2.0 * h);
            return true;
        }
    }
    return false;
}

}  // namespace

WirtingerPair wirtinger(const ComplexField& f) {
    const DiskGrid& g = *f.grid();
    WirtingerPair w{ComplexField(f.grid()), ComplexField(f.grid())};
    const double h = g.h();
    const cpx I(0, 1);
    for (size_t id = 0; id < f.size(); ++id) {
        cpx fx, fy;
        bool ok = f.defined(id) &&
                  axis_derivative(f, g, static_cast<int>(id), DirE, DirW, h, fx) &&
                  axis_derivative(f, g, static_cast<int>(id), DirN, DirS, h, fy);
        if (!ok) {
            w.fz.set_defined(id, false);
            w.fzbar.set_defined(id, false);
            continue;
        }
        w.fz[id] = 0.5 * (fx - I * fy);
        w.fzbar[id] = 0.5 * (fx + I * fy);
    }
    return w;
}

ComplexField laplacian(const ComplexField& f) {
    const DiskGrid& g = *f.grid();
    ComplexField out(f.grid());
    const double h2 = g.h() * g.h();
    for (size_t id = 0; id < f.size(); ++id) {
        const GridNode& nd = g.node(static_cast<int>(id));
        if (nd.kind != NodeKind::Interior || !f.defined(id)) {
            out.set_defined(id, false);
            continue;
        }
        int32_t e = g.neighbor(static_cast<int>(id), DirE);
        int32_t wn = g.neighbor(static_cast<int>(id), DirW);
        int32_t n = g.neighbor(static_cast<int>(id), DirN);
        int32_t s = g.neighbor(static_cast<int>(id), DirS);
        if (!f.defined(e) || !f.defined(wn) || !f.defined(n) || !f.defined(s)) {
            out.set_defined(id, false);
            continue;
        }
        out[id] = (f[e] + f[wn] + f[n] + f[s] - 4.0 * f[id]) / h2;
    }
    return out;
}

std::vector<double> gradient_norm_sq(const WirtingerPair& w) {
    std::vector<double> out(w.fz.size(), 0.0);
    for (size_t id = 0; id < out.size(); ++id)
        out[id] = 2.0 * (std::norm(w.fz[id]) + std::norm(w.fzbar[id]));
    return out;
}

std::vector<double> gradient_op_norm(const WirtingerPair& w) {
    std::vector<double> out(w.fz.size(), 0.0);
    for (size_t id = 0; id < out.size(); ++id)
        out[id] = std::abs(w.fz[id]) + std::abs(w.fzbar[id]);
    return out;
}

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

template <typename CellFn>
double cell_quadrature(const DiskGrid& g, CellFn&& integrand_at_cell) {
    Kahan acc;
    size_t cells = 0;
    for (int j = 0; j + 1 < g.n(); ++j) {
        for (int i = 0; i + 1 < g.n(); ++i) {
            int32_t c00 = g.compact(i, j);
            int32_t c10 = g.compact(i + 1, j);
            int32_t c01 = g.compact(i, j + 1);
            int32_t c11 = g.compact(i + 1, j + 1);
            if (c00 < 0 || c10 < 0 || c01 < 0 || c11 < 0) continue;
            double v;
            if (!integrand_at_cell(c00, c10, c01, c11, v)) continue;
            acc.add(v);
            ++cells;
        }
    }
    if (cells == 0) throw numeric_error("quadrature: no interior cells");
    return acc.sum * g.h() * g.h();
}

}  // namespace

double dirichlet_energy(const ComplexField& f) {
    const DiskGrid& g = *f.grid();
    const double h = g.h();
    return cell_quadrature(g, [&](int32_t c00, int32_t c10, int32_t c01, int32_t c11, double& v) {
        if (!f.defined(c00) || !f.defined(c10) || !f.defined(c01) || !f.defined(c11)) return false;
        cpx fx = (f[c10] - f[c00] + f[c11] - f[c01]) / (2.0 * h);
        cpx fy = (f[c01] - f[c00] + f[c11] - f[c10]) / (2.0 * h);
        v = std::norm(fx) + std::norm(fy);
        return true;
    });
}

double dirichlet_energy(const VectorField& f) {
    const DiskGrid& g = *f.grid();
    const double h = g.h();
    const int l = f.components();
    return cell_quadrature(g, [&](int32_t c00, int32_t c10, int32_t c01, int32_t c11, double& v) {
        v = 0.0;
        for (int c = 0; c < l; ++c) {
            double fx = (f.value(c10, c) - f.value(c00, c) + f.value(c11, c) - f.value(c01, c)) / (2.0 * h);
            double fy = (f.value(c01, c) - f.value(c00, c) + f.value(c11, c) - f.value(c10, c)) / (2.0 * h);
            v += fx * fx + fy * fy;
        }
        return true;
    });
}

}  // namespace qclab
