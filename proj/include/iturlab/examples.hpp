#ifndef ITURLAB_EXAMPLES_HPP
#define ITURLAB_EXAMPLES_HPP

#include <utility>
#include <vector>

#include "iturlab/core.hpp"

namespace iturlab {

/// Modified Bessel function of the second kind, order zero. Power
/// series for x <= 2; for larger x the exponentially scaled integral
/// representation evaluated by Gauss-Legendre quadrature (the plain
/// asymptotic series cannot reach 1e-12 below x ~ 15). Relative error
/// <= 1e-12 on [1e-6, 100].
double bessel_k0(double x);

/// int_0^inf K0(u)^2 log2 K0(u) du; the tail constant of the
/// Cauchy-pair Shannon entropy in bits.
inline constexpr double kK0SqLog2K0Integral = 2.894512609355240;

/// Cauchy-Lorentz position wavefunction parameters: scale c, location m.
struct CauchyParams {
    double c = 1.0;
    double m = 0.0;
    double hbar = 1.0;
};

/// Grid layout for the Cauchy pair. Position half-width scales with c
/// (heavy tail), momentum half-width with hbar/c (exponential tail).
struct CauchyGrid {
    Eigen::Index n_pos = Eigen::Index(1) << 16;
    double pos_half_width_over_c = 5e3;
    Eigen::Index n_mom = Eigen::Index(1) << 16;
    double mom_half_width_c_over_hbar = 40.0;
};

/// Position PDF (c/pi)/(c^2 + (x-m)^2) and momentum PDF
/// (2c/pi^2 hbar) K0^2(c|p|/hbar), gridded and renormalized. The
/// position grid must span at least 1e4 c (TailMassError otherwise);
/// the momentum grid is half-cell shifted so no sample hits the
/// logarithmic singularity at p = 0. The position density carries the
/// analytic peak 1/(pi c).
std::pair<GriddedDensity, GriddedDensity> cauchy_pdfs(
    const CauchyParams& params, const CauchyGrid& grid = {});

/// Closed-form entropies of the Cauchy pair, in bits:
///   Hpos = log2(4 pi c)
///   Hmom = log2(pi^2 hbar / 2c) - (8/pi^2) * kK0SqLog2K0Integral
///   Ihalf_mom = log2(2 hbar / c)
///   Iinf_pos = log2(pi c)
struct CauchyEntropies {
    double Hpos = 0.0;
    double Hmom = 0.0;
    double Ihalf_mom = 0.0;
    double Iinf_pos = 0.0;

    double shannon_sum() const { return Hpos + Hmom; }
    double renyi_sum() const { return Ihalf_mom + Iinf_pos; }
};

CauchyEntropies cauchy_closed_entropies(const CauchyParams& params);

/// The same four entropies by adaptive quadrature on the analytic PDFs
/// (wide tails and the momentum-side log singularity integrated in the
/// log variable, with a leading-log patch at the origin), plus the tail
/// constant recovered from the momentum Shannon entropy. Independent of
/// the closed forms above.
struct CauchyQuadEntropies {
    double Hpos = 0.0;
    double Hmom = 0.0;
    double Ihalf_mom = 0.0;
    double Iinf_pos = 0.0;
    double recovered_constant = 0.0;

    double shannon_sum() const { return Hpos + Hmom; }
    double renyi_sum() const { return Ihalf_mom + Iinf_pos; }
};

CauchyQuadEntropies cauchy_quadrature_entropies(const CauchyParams& params);

/// Finite integration cutoff making divergent heavy-tail entropies
/// finite before the R -> infinity limit.
struct RegulatorWindow {
    double R = 0.0;
};

/// Regulated entropies of the indeterminate Renyi pairing:
///   Ihalf_pos = 2 log2( sqrt(c/pi) ln(4R^2/c^2) )   (diverges with R)
///   Iinf_mom  = -log2( (2c/hbar pi^2) K0^2(c/R) )   (-> -inf with R)
/// The divergences cancel in the sum, which tends to log2(2 pi hbar).
struct CauchyRegulated {
    double Ihalf_pos = 0.0;
    double Iinf_mom = 0.0;
    double sum = 0.0;
};

CauchyRegulated cauchy_regulated(const CauchyParams& params,
                                 const RegulatorWindow& window);

/// Levy-Smirnov wavefunction
///   psi(x) = (c/2pi)^(1/4) exp(-(c/4)(x-m)^(-1) + i p0 x/hbar) / (x-m)^(3/4)
/// on a uniform grid over [m + lo_offset, m + hi_offset], renormalized.
/// Samples at or below the support edge x = m raise SupportError.
GriddedWaveFunction levy_smirnov_wavefunction(
    double c, double m, double p0, double hbar,
    double lo_offset_over_c = 1e-6, double hi_offset_over_c = 1e4,
    Eigen::Index n = Eigen::Index(1) << 18);

/// Coherent state superposition (|beta> + |-beta>), normalized by
/// N+- = 1/sqrt(2(1 +- exp(-2 beta^2))). All derived quantities are even
/// in beta. sign = -1 with beta = 0 is the null vector and is rejected.
struct CatParams {
    double beta = 0.0;
    int sign = +1;

    double normalization() const;
};

/// Quadrature PDFs of the even cat state:
///   F_x0(x) = |2 N+ pi^(-1/4) cosh(sqrt 2 beta x) exp(-x^2/2 - beta^2)|^2
///   F_xq(x) = |2 N+ pi^(-1/4) cos(sqrt 2 beta x) exp(-x^2/2)|^2
/// on [-W, W] with W = max(8, sqrt 2 |beta| + 8).
std::pair<GriddedDensity, GriddedDensity> cat_pdfs(
    const CatParams& params, Eigen::Index n = Eigen::Index(1) << 13);

/// Closed-form quadrature variances of the even cat state:
///   var_x0 = N^2 [1 + exp(-2 beta^2) + 4 beta^2]
///   var_xq = N^2 [1 + exp(-2 beta^2)(1 - 4 beta^2)]
/// In this convention the vacuum (beta = 0) variance is 1/2; an
/// eigenvalue convention with commutator i/2 would halve the spreads to
/// 1/4. The PDFs above integrate to the former, which fixes the
/// convention used throughout.
struct CatVariances {
    double var_x0 = 0.0;
    double var_xq = 0.0;
};

CatVariances cat_variances(const CatParams& params);

/// One row of the cat-state uncertainty curves:
///   shannon_sum  = H(F_x0) + H(F_xq)          vs shannon_bound = log2(e pi)
///   renyi_iii    = I_1/2(F_xq) + I_inf(F_x0)  vs renyi_bound  = log2(2 pi)
///   renyi_iv     = I_1/2(F_x0) + I_inf(F_xq)  (tracks the bound in beta)
struct CatCurvePoint {
    double beta = 0.0;
    double shannon_sum = 0.0;
    double shannon_bound = 0.0;
    double renyi_iii = 0.0;
    double renyi_iv = 0.0;
    double renyi_bound = 0.0;
};

std::vector<CatCurvePoint> cat_itur_curves(
    const Eigen::ArrayXd& betas, Eigen::Index n = Eigen::Index(1) << 13);

/// Default beta grid: 40 points on [0, 4].
Eigen::ArrayXd default_beta_grid();

} // namespace iturlab

#endif
