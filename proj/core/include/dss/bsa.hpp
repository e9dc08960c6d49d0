#pragma once

#include <span>
#include <vector>

#include "dss/hermitian.hpp"
#include "dss/state.hpp"

namespace dss {

/// Parameters of a symmetric product vector (X, Y e^{i phi})^{(x) N} expressed
/// in the Dicke basis. X and Y are real and carry the normalization; the
/// phase can be given directly or as the index m meaning phi = m*pi/N.
struct ProductVectorSpec {
    int n;
    double x;
    double y;
    double phase;

    ProductVectorSpec(int n_, double x_, double y_, double phase_);

    static ProductVectorSpec from_phase_index(int n_, double x_, double y_, int m);
};

/// Closed-form best separable approximation of a full-NPT DSS state:
/// rho = lambda * rho_S + (1 - lambda) * rho_E with maximal separable
/// weight lambda.
struct BsaResult {
    double lambda;                      // separable weight, in (0,1)
    double x;                           // p_0^{1/2N}
    double y;                           // p_N^{1/2N}
    std::vector<double> bsa_diag;       // Dicke diagonal of the separable part
    std::vector<double> remainder_diag; // q_k = p_k - bsa_diag_k, zero at ends
    double weight_per_projector;        // uniform 1/(2N) over the 2N projectors
};

/// Result of one maximality identity check.
struct LemmaReport {
    double quantity;  // value computed
    double expected;  // target value
    double deviation; // worst absolute error across the identity's parts
    bool passed;
};

/// Coefficients b_k = e^{i phi (N-k)} sqrt(C(N,k)) x^{N-k} y^k, k = 0..N.
cvector product_vector(const ProductVectorSpec& spec);

/// The 2N product vectors with phases phi = m*pi/N, m = 0..2N-1.
std::vector<cvector> phase_family(int n, double x, double y);

/// Dicke diagonal C(N,k) x^{2(N-k)} y^{2k} of the uniform mixture of the
/// phase family; the mixture's off-diagonal entries cancel through the
/// 2N-roots-of-unity sum.
std::vector<double> separable_diagonal(int n, double x, double y);

/// Maximal weight with which the projector onto b can be subtracted from s
/// while the remainder stays positive semidefinite:
/// 1 / sum_k |b_k|^2 / p_k over the support. Returns 0 when b has a
/// component outside the range of the state.
double subtraction_weight(const DssState& s, std::span<const cdouble> b);

/// Evaluates the closed-form BSA. Requires strictly positive probabilities
/// (full rank) and a full-NPT state; otherwise throws RankDeficientError or
/// NotFullNptError naming the first failing inequality. The analytic formula
/// is only proven on the full-NPT region, so anything else is rejected
/// rather than answered best-effort.
BsaResult compute_bsa(const DssState& s);

/// Single-projector maximality: with rho_m = rho - rho_S + (1/2N) P_m, the
/// identity <p_m| rho_m^+ |p_m> = 2N must hold for every m in 0..2N-1.
LemmaReport verify_single_maximality(const DssState& s, int m, double tol = 1e-9);

/// Pair maximality for projectors (P_m, P_l), m != l. For odd |m-l| checks
/// <p_i| rho_ml^+ |p_j> = 2N delta_ij; for even |m-l| checks the sum identity
/// <p_m| rho_ml^+ |p_m> + <p_l| rho_ml^+ |p_m> = 2N and that the pairwise
/// optimal weight (A/B form) evaluates to 1/(2N).
LemmaReport verify_pair_maximality(const DssState& s, int m, int l,
                                   double tol = 1e-9);

/// Certifies on an (x, phi) grid over the unit circle x^2 + y^2 = 1 that no
/// product-vector projector can be subtracted from the BSA remainder: the
/// Dicke diagonal of remainder - epsilon |p><p| goes negative at k = 0 or
/// k = N for every grid point. Returns true iff every point is certified.
bool verify_remainder_entangled(const DssState& s, int grid_points = 50,
                                double epsilon = 1e-6);

} // namespace dss
