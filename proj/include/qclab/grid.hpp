#ifndef QCLAB_GRID_HPP
#define QCLAB_GRID_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "qclab/curves.hpp"

namespace qclab {

enum class NodeKind : uint8_t { Exterior = 0, Interior = 1, Boundary = 2 };

// Axis directions for stencil arms: E = +x, W = -x, N = +y, S = -y.
enum Dir { DirE = 0, DirW = 1, DirN = 2, DirS = 3 };

// One stencil arm from an in-domain node. frac = 1 for a full arm ending at an
// in-domain neighbor; frac in (0,1) when the arm is cut by the boundary curve,
// in which case t is the curve parameter of the crossing.
struct Arm {
    double frac = 1.0;
    double t = 0.0;
    bool cut = false;
};

struct GridNode {
    int i = 0, j = 0;
    NodeKind kind = NodeKind::Exterior;
    std::array<Arm, 4> arm;
    double boundary_t = 0.0;  // parameter of nearest curve point (boundary nodes)
};

struct BoundarySample {
    double t;
    double x, y;
    double arclen;
};

// Masked square lattice over a Jordan domain. Nodes strictly inside the curve
// are in-domain; an in-domain node with all four axis neighbors in-domain is
// Interior, otherwise Boundary (its outward arms carry curve crossings).
class DiskGrid {
  public:
    DiskGrid(const PlanarDomain& dom, int n, int poly_samples = 0);

    int n() const { return n_; }
    double h() const { return h_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }

    double x_of(int i) const { return x0_ + i * h_; }
    double y_of(int j) const { return y0_ + j * h_; }
    cpx point(int node) const {
        const GridNode& nd = nodes_[node];
        return {x_of(nd.i), y_of(nd.j)};
    }

    // Compact index of lattice site (i,j), or -1 for exterior / out of range.
    int32_t compact(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) return -1;
        return compact_[static_cast<size_t>(j) * n_ + i];
    }

    size_t node_count() const { return nodes_.size(); }
    const GridNode& node(int id) const { return nodes_[id]; }
    const std::vector<GridNode>& nodes() const { return nodes_; }

    // Compact index of the axis neighbor along dir, or -1.
    int32_t neighbor(int node, int dir) const { return nb_[static_cast<size_t>(node) * 4 + dir]; }

    size_t interior_count() const { return interior_count_; }
    size_t boundary_count() const { return nodes_.size() - interior_count_; }

    const std::vector<BoundarySample>& boundary_samples() const { return poly_; }
    const PlanarDomain& domain() const { return domain_; }

    // Distance from each in-domain node to the boundary curve (nearest dense
    // sample refined by projection onto the adjacent polyline segments).
    std::vector<double> boundary_distances() const;

  private:
    void build(const PlanarDomain& dom, int poly_samples);

    PlanarDomain domain_;
    int n_ = 0;
    double h_ = 0.0, x0_ = 0.0, y0_ = 0.0;
    std::vector<int32_t> compact_;
    std::vector<GridNode> nodes_;
    std::vector<int32_t> nb_;
    size_t interior_count_ = 0;
    std::vector<BoundarySample> poly_;
};

using GridPtr = std::shared_ptr<const DiskGrid>;

GridPtr make_grid(const PlanarDomain& dom, int n, int poly_samples = 0);

}  // namespace qclab

#endif
