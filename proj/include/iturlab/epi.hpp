#ifndef ITURLAB_EPI_HPP
#define ITURLAB_EPI_HPP

#include "iturlab/core.hpp"

namespace iturlab {

/// Outcome of a generalized entropy-power inequality check.
/// holds <=> lhsPower >= rhsPower - 1e-9 * max(1, rhsPower); the
/// tolerance lives on the power scale because entropy errors double on
/// exponentiation.
struct EpiReport {
    double lhsPower = 0.0;
    double rhsPower = 0.0;
    double lambda = 0.0;
    double r = 0.0;
    bool holds = false;
};

/// Density of the sum of two independent variables: zero-padded linear
/// convolution of the sample vectors scaled by the cell width. Grids
/// must share their spacing; the output grid spans the combined domain
/// shrunk by half a cell at each end (where the midpoint samples live).
GriddedDensity convolve(const GriddedDensity& f1, const GriddedDensity& f2);

/// Sharp Young constant C = C_p C_q / C_r with C_x^2 = x^(1/x) / x'^(1/x'),
/// for a Hoelder triple 1/q + 1/p = 1 + 1/r with q, p, r >= 1
/// (C_1 = C_inf = 1 at the endpoints).
double young_constant(double q, double p, double r);

/// Verify N_r(X1+X2) >= (N_q(X1)/(1-lambda))^(1-lambda) (N_p(X2)/lambda)^lambda
/// with q = r/((1-lambda) + lambda r) and p = r/(lambda + (1-lambda) r).
/// r = 1 is the Shannon entropy power inequality.
EpiReport check_generalized_epi(const GriddedDensity& f1,
                                const GriddedDensity& f2, double lambda,
                                double r);

/// The lambda extremizing the weighted EPI right-hand side:
/// lambda = N2/(N1+N2). Substituted back it reproduces the Shannon
/// bound N1 + N2.
double optimal_lambda(double n1, double n2);

struct VarianceEntropyChain {
    double variance = 0.0;
    double entropyPower = 0.0;
    bool holds = false;  // entropyPower <= variance within tolerance
};

/// Variance and Shannon entropy power of a density; N(X) <= sigma^2 with
/// equality only for Gaussians. Heavy tails with non-convergent second
/// moment raise InfiniteVarianceError.
VarianceEntropyChain variance_entropy_chain(const GriddedDensity& density);

/// Hausdorff-Young inequalities for an hbar-convention Fourier pair,
/// evaluated on the unit-scaled functions (2 pi hbar)^(1/4) psi(sqrt(2 pi
/// hbar) x) that make the transform kernel exp(-2 pi i x y).
/// classical: ||dual||_n >= ||psi||_n'  (n in [1,2])
/// beckner:   C_n ||psi||_n >= ||dual||_n', saturated by Gaussians;
///            n = 2 is the Plancherel equality.
struct HausdorffYoungReport {
    BoundReport classical;
    BoundReport beckner;
};

HausdorffYoungReport hausdorff_young_check(const GriddedWaveFunction& psi,
                                           double n);

} // namespace iturlab

#endif
