#ifndef ITURLAB_ITUR_CONTINUOUS_HPP
#define ITURLAB_ITUR_CONTINUOUS_HPP

#include "iturlab/core.hpp"

namespace iturlab {

/// Momentum-space wavefunction through the unitary hbar-scaled kernel
/// exp(-i p x / hbar) / sqrt(2 pi hbar), evaluated by FFT. The momentum
/// grid is centred on zero with a half-cell shift, spacing
/// 2 pi hbar / (N l), so the L2 norm is preserved exactly (Plancherel).
/// Mass outside the central 80% of the position grid beyond
/// tail_tolerance raises AliasingError.
GriddedWaveFunction fourier_dual(const GriddedWaveFunction& psi,
                                 double tail_tolerance = 1e-10);

/// Strong Beckner-Babenko right-hand side for the entropy sum
/// I_{1+t}(|psi|^2) + I_{1+r}(|psi-hat|^2), in bits:
///   (D/2) [ 2 log2(pi hbar) + (g(t) + g(r)) / ln 2 ],  g(u) = ln(1+u)/u,
/// with r = -t/(2t+1). Continuous limits: t -> 0 gives D log2(e pi hbar)
/// (the Shannon/Hirschman bound), t in {-1/2, inf} gives the universal
/// weak bound D log2(2 pi hbar).
double bb_rhs(double t, int dim, double hbar);

/// Universal weak bound D log2(2 pi hbar).
double bb_weak_rhs(int dim, double hbar);

struct ContinuousIturReport {
    double t = 0.0;
    double r = 0.0;
    double positionEntropy = 0.0;  // I_{1+t}(|psi|^2), bits
    double momentumEntropy = 0.0;  // I_{1+r}(|psi-hat|^2), bits
    BoundReport strong;            // against bb_rhs
    BoundReport weak;              // against log2(2 pi hbar)^D
};

/// Evaluate the continuous ITUR for a wavefunction at parameter t in
/// [-1/2, inf]. Divergent entropies (heavy tails at order < 1) raise
/// DivergentEntropyError naming the offending side.
ContinuousIturReport check_continuous_itur(const GriddedWaveFunction& psi,
                                           double t,
                                           double tolerance_bits = 1e-6,
                                           double tail_tolerance = 1e-10);

/// Mesh-level ITUR: discretize |psi|^2 with cells of width l and
/// |psi-hat|^2 with the dual mesh coarsened by the same factor, then
/// check I_{1+t} + I_{1+r} >= -2D log2 l_eff with l_eff the geometric
/// mean of the two meshes in the hbar = 1/(2 pi) normalization,
/// i.e. bound = -log2(l_x l_p / (2 pi hbar)).
BoundReport coarse_itur_check(const GriddedWaveFunction& psi, double t,
                              double cell, double tolerance_bits = 1e-6);

/// Entropy-power form of the continuous ITUR:
/// N_{1+t}(|psi|^2) N_{1+r}(|psi-hat|^2), always >= hbar^2/4.
double entropy_power_product(const GriddedWaveFunction& psi, double t,
                             double tail_tolerance = 1e-10);

struct HeavyTailGap {
    double lhsGap = 0.0;  // H(Fx) - I_{p/2}(Fx)
    double rhsGap = 0.0;  // I_{q/2}(Fp) - H(Fp)
    bool improves = false;
};

/// Gap inequality deciding when the order-(p/2, q/2) Renyi power bound
/// beats the Shannon one (q the Hoelder conjugate of p >= 2): improves
/// <=> H(Fx) - I_{p/2}(Fx) >= I_{q/2}(Fp) - H(Fp).
HeavyTailGap heavy_tail_gap(const GriddedDensity& fx, const GriddedDensity& fp,
                            double p);

} // namespace iturlab

#endif
