#include "qclab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace qclab {

namespace {

constexpr double kMinFrac = 1e-6;

struct Crossing {
    double pos;  // x for a row crossing, y for a column crossing
    double t;
};

// Refine a sign change of comp(gamma(t)) - level bracketed by [ta, tb].
double bisect_crossing(const std::function<cpx(double)>& gamma, bool use_y, double level,
                       double ta, double tb, double fa) {
    for (int it = 0; it < 80 && tb - ta > 1e-15; ++it) {
        double tm = 0.5 * (ta + tb);
        cpx g = gamma(tm);
        double fm = (use_y ? g.imag() : g.real()) - level;
        if ((fm < 0.0) == (fa < 0.0)) {
            ta = tm;
            fa = fm;
        } else {
            tb = tm;
        }
    }
    return 0.5 * (ta + tb);
}

// All crossings of the curve with the line {y = level} (use_y) or {x = level}.
// Brackets come from the dense polyline, the parameter is refined on the true curve.
std::vector<Crossing> line_crossings(const std::vector<BoundarySample>& poly,
                                     const std::function<cpx(double)>& gamma, bool use_y,
                                     double level) {
    std::vector<Crossing> out;
    const size_t m = poly.size();
    for (size_t k = 0; k < m; ++k) {
        const BoundarySample& a = poly[k];
        const BoundarySample& b = poly[(k + 1) % m];
        double fa = (use_y ? a.y : a.x) - level;
        double fb = (use_y ? b.y : b.x) - level;
        if (fa == 0.0) fa = 1e-300;  // nudge exact hits to one side, deterministic
        if (fb == 0.0) fb = 1e-300;
        if ((fa < 0.0) == (fb < 0.0)) continue;
        double tb = (k + 1 == m) ? poly[0].t + 2.0 * M_PI : b.t;
        double t = bisect_crossing(gamma, use_y, level, a.t, tb, fa);
        cpx g = gamma(t);
        out.push_back({use_y ? g.real() : g.imag(), std::fmod(t, 2.0 * M_PI)});
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.pos < b.pos; });
    return out;
}

bool parity_inside(const std::vector<Crossing>& cr, double coord) {
    // odd number of crossings strictly to the right => inside
    size_t cnt = 0;
    for (const Crossing& c : cr)
        if (c.pos > coord) ++cnt;
    return (cnt % 2) == 1;
}

// Crossing nearest to `from` within (from, from + h]; returns false if none.
bool arm_crossing(const std::vector<Crossing>& cr, double from, double h, bool forward,
                  Crossing& out) {
    bool found = false;
    for (const Crossing& c : cr) {
        double d = forward ? c.pos - from : from - c.pos;
        if (d <= 0.0 || d > h + 1e-13) continue;
        if (!found || d < (forward ? out.pos - from : from - out.pos)) {
            out = c;
            found = true;
        }
    }
    return found;
}

}  // namespace

DiskGrid::DiskGrid(const PlanarDomain& dom, int n, int poly_samples) : domain_(dom), n_(n) {
    if (n < 33) throw config_error("grid: resolution floor is n >= 33");
    build(dom, poly_samples);
}

void DiskGrid::build(const PlanarDomain& dom, int poly_samples) {
    const double two_pi = 2.0 * M_PI;
    int m = poly_samples > 0 ? poly_samples : std::max(8192, 16 * n_);

    poly_.resize(m);
    double arclen = 0.0;
    cpx prev = dom.gamma(0.0);
    for (int k = 0; k < m; ++k) {
        double t = two_pi * k / m;
        cpx g = dom.gamma(t);
        arclen += std::abs(g - prev);
        poly_[k] = {t, g.real(), g.imag(), arclen};
        prev = g;
    }

    double xmin = poly_[0].x, xmax = poly_[0].x, ymin = poly_[0].y, ymax = poly_[0].y;
    for (const BoundarySample& s : poly_) {
        xmin = std::min(xmin, s.x);
        xmax = std::max(xmax, s.x);
        ymin = std::min(ymin, s.y);
        ymax = std::max(ymax, s.y);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    h_ = span / (n_ - 1);
    x0_ = 0.5 * (xmin + xmax) - 0.5 * span;
    y0_ = 0.5 * (ymin + ymax) - 0.5 * span;

    std::vector<std::vector<Crossing>> row_cr(n_), col_cr(n_);
    for (int j = 0; j < n_; ++j) row_cr[j] = line_crossings(poly_, dom.gamma, true, y_of(j));
    for (int i = 0; i < n_; ++i) col_cr[i] = line_crossings(poly_, dom.gamma, false, x_of(i));

    std::vector<uint8_t> inside(static_cast<size_t>(n_) * n_, 0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            inside[static_cast<size_t>(j) * n_ + i] = parity_inside(row_cr[j], x_of(i)) ? 1 : 0;

    auto is_in = [&](int i, int j) {
        return i >= 0 && j >= 0 && i < n_ && j < n_ && inside[static_cast<size_t>(j) * n_ + i];
    };

    compact_.assign(static_cast<size_t>(n_) * n_, -1);
    nodes_.clear();
    interior_count_ = 0;
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            if (!is_in(i, j)) continue;
            GridNode nd;
            nd.i = i;
            nd.j = j;
            bool all_in = is_in(i + 1, j) && is_in(i - 1, j) && is_in(i, j + 1) && is_in(i, j - 1);
            nd.kind = all_in ? NodeKind::Interior : NodeKind::Boundary;
            if (all_in) ++interior_count_;
            compact_[static_cast<size_t>(j) * n_ + i] = static_cast<int32_t>(nodes_.size());
            nodes_.push_back(nd);
        }
    }
    if (nodes_.empty()) throw numeric_error("grid: empty interior");

    auto nearest_poly_t = [&](double px, double py) {
        size_t best = 0;
        double bestd = 1e300;
        for (size_t k = 0; k < poly_.size(); ++k) {
            double d = std::hypot(poly_[k].x - px, poly_[k].y - py);
            if (d < bestd) {
                bestd = d;
                best = k;
            }
        }
        return poly_[best].t;
    };

    nb_.assign(nodes_.size() * 4, -1);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (size_t id = 0; id < nodes_.size(); ++id) {
        GridNode& nd = nodes_[id];
        double x = x_of(nd.i), y = y_of(nd.j);
        double best_frac = 2.0;
        for (int d = 0; d < 4; ++d) {
            int ii = nd.i + di[d], jj = nd.j + dj[d];
            int32_t nbid = compact(ii, jj);
            nb_[id * 4 + d] = nbid;
            if (nbid >= 0) continue;
            // cut arm: locate the boundary crossing along this arm
            Crossing c;
            bool found;
            if (d == DirE)
                found = arm_crossing(row_cr[nd.j], x, h_, true, c);
            else if (d == DirW)
                found = arm_crossing(row_cr[nd.j], x, h_, false, c);
            else if (d == DirN)
                found = arm_crossing(col_cr[nd.i], y, h_, true, c);
            else
                found = arm_crossing(col_cr[nd.i], y, h_, false, c);
            Arm& a = nd.arm[d];
            a.cut = true;
            if (found) {
                double dist = (d == DirE)   ? c.pos - x
                              : (d == DirW) ? x - c.pos
                              : (d == DirN) ? c.pos - y
                                            : y - c.pos;
                a.frac = std::clamp(dist / h_, kMinFrac, 1.0);
                a.t = c.t;
            } else {
                // near-tangency fallback: treat the lattice neighbor as on the curve
                a.frac = 1.0;
                a.t = nearest_poly_t(x + di[d] * h_, y + dj[d] * h_);
            }
            if (a.frac < best_frac) {
                best_frac = a.frac;
                nd.boundary_t = a.t;
            }
        }
    }

    // interior set must be 4-connected
    std::vector<uint8_t> seen(nodes_.size(), 0);
    std::queue<int32_t> q;
    q.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!q.empty()) {
        int32_t id = q.front();
        q.pop();
        for (int d = 0; d < 4; ++d) {
            int32_t nbid = nb_[static_cast<size_t>(id) * 4 + d];
            if (nbid >= 0 && !seen[nbid]) {
                seen[nbid] = 1;
                ++reached;
                q.push(nbid);
            }
        }
    }
    if (reached != nodes_.size())
        throw numeric_error("grid: in-domain node set is not 4-connected at this resolution");
}

std::vector<double> DiskGrid::boundary_distances() const {
    const size_t m = poly_.size();
    const int stride = 16;
    std::vector<double> out(nodes_.size());
    for (size_t id = 0; id < nodes_.size(); ++id) {
        cpx p = point(static_cast<int>(id));
        // coarse scan then local window
        size_t best = 0;
        double bestd = 1e300;
        for (size_t k = 0; k < m; k += stride) {
            double d = std::hypot(poly_[k].x - p.real(), poly_[k].y - p.imag());
            if (d < bestd) {
                bestd = d;
                best = k;
            }
        }
        size_t lo = best >= static_cast<size_t>(2 * stride) ? best - 2 * stride : 0;
        size_t hi = std::min(m - 1, best + 2 * stride);
        for (size_t k = lo; k <= hi; ++k) {
            double d = std::hypot(poly_[k].x - p.real(), poly_[k].y - p.imag());
            if (d < bestd) {
                bestd = d;
                best = k;
            }
        }
        // project onto the two adjacent polyline segments
        double result = bestd;
        for (int s = -1; s <= 0; ++s) {
            size_t ka = (best + m + s) % m;
            size_t kb = (ka + 1) % m;
            double ax = poly_[ka].x, ay = poly_[ka].y;
            double bx = poly_[kb].x, by = poly_[kb].y;
            double vx = bx - ax, vy = by - ay;
            double len2 = vx * vx + vy * vy;
            if (len2 == 0.0) continue;
            double u = ((p.real() - ax) * vx + (p.imag() - ay) * vy) / len2;
            u = std::clamp(u, 0.0, 1.0);
            double qx = ax + u * vx, qy = ay + u * vy;
            result = std::min(result, std::hypot(p.real() - qx, p.imag() - qy));
        }
        out[id] = result;
    }
    return out;
}

GridPtr make_grid(const PlanarDomain& dom, int n, int poly_samples) {
    return std::make_shared<DiskGrid>(dom, n, poly_samples);
}

}  // namespace qclab
