#ifndef QCLAB_DIAGNOSTICS_HPP
#define QCLAB_DIAGNOSTICS_HPP

#include <optional>
#include <vector>

#include "qclab/conformal.hpp"
#include "qclab/field.hpp"

namespace qclab {

struct BeltramiField {
    ComplexField mu;          // f_zbar / f_z, masked at degenerate nodes
    double k = 0.0;           // max |mu| where |f_z| clears the floor
    size_t degenerate_count = 0;
    double floor = 0.0;       // 1e-8 of the RMS gradient scale
    bool qc_verdict() const { return k < 1.0 && degenerate_count == 0; }
};

BeltramiField beltrami(const ComplexField& f);

struct PoissonFit {
    std::vector<std::pair<double, double>> curve;  // (M, N(M))
    double chosen_M = 0.0;
    double chosen_N = 0.0;
    double scale = 0.0;  // mean |grad f|^2, normalizes N against M
    bool residual_ok = false;
};

// Exact N(M) = max(|lap f| - M |grad f|^2)_+ per sweep value; chosen pair
// minimizes M + N/scale.
PoissonFit fit_poisson_constants(const ComplexField& f, const std::vector<double>& M_sweep);

struct ComponentInequalityReport {
    double k = 0.0;
    double max_identity_dev = 0.0;   // | A/B - |1+nu|^2/|1-nu|^2 |
    double max_sandwich_violation = 0.0;
    double max_pdi_violation = 0.0;  // against |Delta u| <= M (1+k)^2/(1-k)^2 |grad u|^2 + N
    size_t nodes_checked = 0;
    size_t nodes_excluded = 0;       // B = 0 or degenerate f_z
};

// Lemma checks for f = u + iv: the ratio identity A/B = |1+nu|^2/|1-nu|^2
// with nu = conj(f_zbar)/f_z, the k-sandwich, and the component Poisson
// inequality with supplied M, N.
ComponentInequalityReport check_component_inequality(const ComplexField& f, double M, double N);

struct CompositionCheckReport {
    double max_dev_dz = 0.0;
    double max_dev_dzbar = 0.0;
    double max_dev_lap = 0.0;
    double max_dev = 0.0;
    size_t nodes_checked = 0;
    size_t nodes_skipped = 0;
};

// Builds fhat = phi . f . eta by bicubic sampling and compares the chain-rule
// identities for d fhat, dbar fhat and Delta fhat against direct stencils.
// Restricted to nodes whose eta-image has full interpolation support.
CompositionCheckReport composition_laplacian_check(const ConformalMap& phi, const ComplexField& f,
                                                   const ConformalMap& eta);

struct GradientChainReport {
    double k = 0.0;
    double b_t = 0.0;                   // sup |grad Im fhat|
    double max_left_violation = 0.0;    // (1-k)|d fhat| <= 2|s_z| pointwise
    double left_slack = 0.0;            // min of 2|s_z| - (1-k)|d fhat|
    double global_lhs = 0.0;            // sup(|d fhat| + |dbar fhat|)
    double global_rhs = 0.0;            // sqrt(2) (1+k)/(1-k) b_t
    bool global_ok = false;
};

GradientChainReport verify_gradient_chain(const ComplexField& f_hat);

struct CollarProfile {
    std::vector<std::pair<double, double>> collars;  // (delta_j, sup op-norm gradient)
    double lipschitz_estimate = 0.0;
    bool plateau = false;
    double exponent = 0.0;  // fitted log-log slope over the last three collars
};

// Dyadic collars delta_j = 2^{-j} delta0; sup of |f_z| + |f_zbar| per band.
CollarProfile collar_profile(const ComplexField& f, int n_collars, double delta0 = 0.25);

struct BilipschitzProbe {
    std::vector<std::pair<double, double>> collars;  // (delta_j, inf |f_z| - |f_zbar|)
    double overall_inf = 0.0;
    bool positive_floor = false;
};

BilipschitzProbe bilipschitz_probe(const ComplexField& f, int n_collars = 5, double delta0 = 0.25);

}  // namespace qclab

#endif
