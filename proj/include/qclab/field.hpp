#ifndef QCLAB_FIELD_HPP
#define QCLAB_FIELD_HPP

#include <functional>
#include <string>
#include <vector>

#include "qclab/grid.hpp"

namespace qclab {

// Complex samples on the in-domain nodes of a DiskGrid. `defined` masks nodes
// excluded from a derived field's output domain (e.g. no Laplacian stencil).
class ComplexField {
  public:
    ComplexField() = default;
    explicit ComplexField(GridPtr g, cpx fill = cpx(0, 0))
        : grid_(std::move(g)), values_(grid_->node_count(), fill), defined_(grid_->node_count(), 1) {}

    static ComplexField sample(GridPtr g, const std::function<cpx(cpx)>& f);

    const GridPtr& grid() const { return grid_; }
    size_t size() const { return values_.size(); }

    cpx operator[](size_t id) const { return values_[id]; }
    cpx& operator[](size_t id) { return values_[id]; }
    bool defined(size_t id) const { return defined_[id] != 0; }
    void set_defined(size_t id, bool v) { defined_[id] = v ? 1 : 0; }
    size_t defined_count() const;

    const std::vector<cpx>& values() const { return values_; }
    std::vector<cpx>& values() { return values_; }

    ComplexField& operator+=(const ComplexField& o);
    ComplexField& operator-=(const ComplexField& o);
    ComplexField& operator*=(cpx s);

    friend ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
    friend ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
    friend ComplexField operator*(cpx s, ComplexField a) { return a *= s; }

    // max of |a - b| over commonly defined nodes
    static double max_abs_diff(const ComplexField& a, const ComplexField& b);
    double max_abs() const;

    void require_same_grid(const ComplexField& o) const;

  private:
    GridPtr grid_;
    std::vector<cpx> values_;
    std::vector<uint8_t> defined_;
};

// l real components per node, for surface-valued maps.
class VectorField {
  public:
    VectorField() = default;
    VectorField(GridPtr g, int l) : grid_(std::move(g)), l_(l), values_(grid_->node_count() * l, 0.0) {}

    static VectorField sample(GridPtr g, int l, const std::function<std::vector<double>(cpx)>& f);

    const GridPtr& grid() const { return grid_; }
    int components() const { return l_; }
    double value(size_t id, int c) const { return values_[id * l_ + c]; }
    double& value(size_t id, int c) { return values_[id * l_ + c]; }

  private:
    GridPtr grid_;
    int l_ = 0;
    std::vector<double> values_;
};

// x, y, re, im per non-exterior node, with a header line.
void write_csv(const ComplexField& f, const std::string& path);

struct WirtingerPair {
    ComplexField fz;
    ComplexField fzbar;
};

// fz = (fx - i fy)/2, fzbar = (fx + i fy)/2. Central differences where both
// axis neighbors exist, second-order one-sided stencils at cut nodes.
WirtingerPair wirtinger(const ComplexField& f);

// 5-point stencil at Interior nodes; Boundary (cut) nodes carry no Laplacian
// and are masked out of the result.
ComplexField laplacian(const ComplexField& f);

// |grad f|^2 = 2(|fz|^2 + |fzbar|^2), the Hilbert-Schmidt convention.
std::vector<double> gradient_norm_sq(const WirtingerPair& w);

// |fz| + |fzbar|, the operator-norm convention.
std::vector<double> gradient_op_norm(const WirtingerPair& w);

// Midpoint quadrature of |fx|^2 + |fy|^2 over cells with all four corners
// in-domain and defined.
double dirichlet_energy(const ComplexField& f);
double dirichlet_energy(const VectorField& f);

}  // namespace qclab

#endif
