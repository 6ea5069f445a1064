#ifndef QCLAB_SOLVER_HPP
#define QCLAB_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qclab/conformal.hpp"
#include "qclab/surface.hpp"

namespace qclab {

using BoundaryFn = std::function<cpx(double)>;  // curve parameter -> value

struct SorOptions {
    double tol = 1e-10;     // max-norm residual of the discrete equation
    int max_sweeps = 200000;
    double omega = 0.0;     // 0 = choose from grid spacing
};

struct SorStats {
    int sweeps = 0;
    double residual = 0.0;
    bool converged = false;
};

// Harmonic extension of boundary data by Fourier synthesis of >= 4n boundary
// samples (the stable evaluation of the Poisson kernel quadrature). Unit-disk
// grids only.
ComplexField poisson_extension(const BoundaryFn& data, GridPtr grid, int samples = 0);

// Red-black SOR for the 5-point Laplacian with Shortley-Weller stencils at
// boundary-cut nodes; Dirichlet data is imposed at the curve crossings.
ComplexField solve_laplace_dirichlet(GridPtr grid, const BoundaryFn& data,
                                     SorStats* stats = nullptr, const SorOptions& opt = {});

// Same discretization with a right-hand side: Delta u = rhs.
ComplexField solve_poisson(GridPtr grid, const BoundaryFn& data, const std::vector<cpx>& rhs,
                           SorStats* stats = nullptr, const SorOptions& opt = {});

struct PicardOptions {
    double tol = 1e-8;      // max-norm residual of the nonlinear equation
    int max_outer = 500;
    double relax = 0.5;
    SorOptions inner;
};

struct PicardStats {
    int outer = 0;
    double residual = 0.0;
    double relax_final = 0.0;
    bool converged = false;
    std::vector<double> residual_history;
    int fallback_stencils = 0;  // nodes where only a first-order derivative stencil existed
};

// Damped Picard iteration for g_zzbar + (log rho)_w(g) g_z g_zbar = 0 with
// Dirichlet data; each step solves Delta g = -4 (log rho)_w(g) g_z g_zbar.
ComplexField solve_rho_harmonic(const ConformalFactor& rho, const BoundaryFn& data, GridPtr grid,
                                PicardStats* stats = nullptr, const PicardOptions& opt = {});

// Nonlinear residual of the rho-harmonic equation given the field and its
// derivative fields: max |lap + 4 (log rho)_w(g) gz gzbar| over defined nodes.
double rho_harmonic_residual(const ConformalFactor& rho, const ComplexField& g,
                             const ComplexField& lap, const ComplexField& gz,
                             const ComplexField& gzbar);

// Coefficient function of position and (optionally) the solution value.
using CoeffFn = std::function<cpx(cpx, cpx)>;

CoeffFn coeff_zero();
CoeffFn coeff_const(cpx v);

// alpha w_xx + 2 beta w_xy + gamma w_yy + a1 w_x^2 + b1 w_x w_y + c1 w_y^2
//   + a w_x + b w_y + c w + d = 0
struct EllipticCoeffs {
    double alpha = 1.0, beta = 0.0, gamma = 1.0;
    CoeffFn a1 = coeff_zero(), b1 = coeff_zero(), c1 = coeff_zero();
    CoeffFn a = coeff_zero(), b = coeff_zero(), c = coeff_zero(), d = coeff_zero();

    void validate() const;
};

struct Sym2 {
    double m11 = 1.0, m12 = 0.0, m22 = 1.0;

    cpx apply(cpx z) const {
        return {m11 * z.real() + m12 * z.imag(), m12 * z.real() + m22 * z.imag()};
    }
};

struct ReducedCoeffs {
    Sym2 substitution;        // T = A^{-1/2}: u = T x
    Sym2 substitution_inv;    // S = A^{1/2}:  x = S u
    CoeffFn a1p, b1p, c1p, ap, bp, cp, dp;  // primed coefficients on Omega' = T(Omega)
    double M = 0.0;
    double N = 0.0;
    double sup_w = 0.0;       // |w| bound used in the N formula
};

// Principal-part reduction by the SPD square root of the inverse principal
// matrix; M, N from max-reductions of the primed coefficient moduli over the
// grid nodes mapped into Omega' (and |w| <= sup_w for solution-dependent
// coefficients).
ReducedCoeffs reduce_elliptic(const EllipticCoeffs& ec, const DiskGrid& grid, double sup_w = 1.0);

struct GeneralEllipticResult {
    ComplexField field;      // solution on the transformed grid
    GridPtr grid;            // grid over Omega'
    ReducedCoeffs reduced;
    PicardStats stats;
};

// Reduce, build a grid over the transformed domain, then damped Picard with
// every lower-order term treated as right-hand side.
GeneralEllipticResult solve_general_elliptic(const EllipticCoeffs& ec, const PlanarDomain& dom,
                                             const BoundaryFn& data, int n,
                                             const PicardOptions& opt = {}, double sup_w = -1.0);

// Data for solving on the disk in place of a mapped domain: data_tilde(phi) =
// data(boundary_param(phi)).
BoundaryFn transplant_boundary(const ConformalMap& m, const BoundaryFn& data);

}  // namespace qclab

#endif
