#include "iturlab/itur_continuous.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <vector>

#include "iturlab/quadrature.hpp"
#include "iturlab/renyi.hpp"

namespace iturlab {

namespace {

/// The involution u -> -u/(2u+1) on [-1/2, inf] (exchanging endpoints).
double dual_order(double u) {
    if (std::isnan(u) || u < -0.5) {
        throw DomainError("itur parameter must lie in [-1/2, inf]");
    }
    if (u == -0.5) return kInf;
    if (std::isinf(u)) return -0.5;
    return -u / (2.0 * u + 1.0);
}

/// ln(1+u)/u extended by its limits: 1 at 0, 0 at inf, 2 ln 2 at -1/2.
double log1p_over(double u) {
    if (std::isinf(u)) return 0.0;
    if (u == 0.0) return 1.0;
    return std::log1p(u) / u;
}

} // namespace

GriddedWaveFunction fourier_dual(const GriddedWaveFunction& psi,
                                 double tail_tolerance) {
    const Eigen::Index n = psi.size();
    if (n < 4) throw GridError("fourier_dual: grid too small");
    const double l = psi.cell();
    const double hbar = psi.hbar();

    // Tail-mass guard: the outer 10% of cells on each side.
    const Eigen::Index margin = n / 10;
    if (margin > 0) {
        const Eigen::ArrayXd pdf = psi.amplitudes().abs2();
        const double tail = l * (pdf.head(margin).sum() + pdf.tail(margin).sum());
        if (tail > tail_tolerance) {
            throw AliasingError("fourier_dual: tail mass " +
                                std::to_string(tail) +
                                " outside the central 80% of the grid");
        }
    }

    const double dp = 2.0 * M_PI * hbar / (double(n) * l);
    const double mid = 0.5 * double(n - 1);

    // psi_hat(p_k) = l/sqrt(2 pi hbar) sum_j exp(-i p_k x_j/hbar) psi_j with
    // p_k = dp (k - mid), x_j = lo + (j + 1/2) l. Splitting the phase turns
    // the sum into a plain DFT with pre- and post-twiddles.
    std::vector<std::complex<double>> in(static_cast<size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        const double phase = M_PI * double(n - 1) * double(j) / double(n);
        in[size_t(j)] = psi.amplitudes()[j] * std::polar(1.0, phase);
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> out;
    fft.fwd(out, in);

    const double scale = l / std::sqrt(2.0 * M_PI * hbar);
    Eigen::ArrayXcd dual(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double pk = dp * (double(k) - mid);
        const double phase =
            -M_PI * double(k) / double(n) + M_PI * mid / double(n) -
            pk * psi.lo() / hbar;
        dual[k] = scale * std::polar(1.0, phase) * out[size_t(k)];
    }
    const double span = dp * double(n);
    return GriddedWaveFunction(-0.5 * span, 0.5 * span, std::move(dual), hbar);
}

double bb_rhs(double t, int dim, double hbar) {
    if (dim < 1) throw DomainError("bb_rhs: dimension must be >= 1");
    if (!(hbar > 0.0)) throw DomainError("bb_rhs: hbar must be positive");
    const double r = dual_order(t);
    const double d = double(dim);
    return 0.5 * d *
           (2.0 * std::log2(M_PI * hbar) +
            (log1p_over(t) + log1p_over(r)) / M_LN2);
}

double bb_weak_rhs(int dim, double hbar) {
    if (dim < 1) throw DomainError("bb_weak_rhs: dimension must be >= 1");
    if (!(hbar > 0.0)) throw DomainError("bb_weak_rhs: hbar must be positive");
    return double(dim) * std::log2(2.0 * M_PI * hbar);
}

namespace {

double finite_entropy_or_throw(const GriddedDensity& density, double alpha,
                               const char* side) {
    const double bits = renyi_differential(density, RenyiOrder(alpha));
    if (!std::isfinite(bits)) {
        throw DivergentEntropyError(std::string("order-") +
                                    std::to_string(alpha) + " entropy of the " +
                                    side + " density is divergent");
    }
    return bits;
}

} // namespace

ContinuousIturReport check_continuous_itur(const GriddedWaveFunction& psi,
                                           double t, double tolerance_bits,
                                           double tail_tolerance) {
    const double r = dual_order(t);
    const GriddedWaveFunction dual = fourier_dual(psi, tail_tolerance);

    ContinuousIturReport rep;
    rep.t = t;
    rep.r = r;
    rep.positionEntropy =
        finite_entropy_or_throw(psi.density(), 1.0 + t, "position-side");
    rep.momentumEntropy =
        finite_entropy_or_throw(dual.density(), 1.0 + r, "momentum-side");
    const double lhs = rep.positionEntropy + rep.momentumEntropy;
    rep.strong = make_bound_report(lhs, bb_rhs(t, 1, psi.hbar()), tolerance_bits);
    rep.weak = make_bound_report(lhs, bb_weak_rhs(1, psi.hbar()), tolerance_bits);
    return rep;
}

BoundReport coarse_itur_check(const GriddedWaveFunction& psi, double t,
                              double cell, double tolerance_bits) {
    const double r = dual_order(t);
    const double factor = cell / psi.cell();
    const auto m = static_cast<Eigen::Index>(std::llround(factor));
    if (m < 1 || std::abs(factor - double(m)) > 1e-9 * std::max(1.0, factor)) {
        throw GridMismatchError(
            "coarse_itur_check: mesh is not a multiple of the grid cell");
    }
    const GriddedWaveFunction dual = fourier_dual(psi);
    const double cell_p = double(m) * dual.cell();

    const DiscreteDistribution px = discretize(psi.density(), cell);
    const DiscreteDistribution pp = discretize(dual.density(), cell_p);
    const double lhs = renyi_discrete(px, RenyiOrder(1.0 + t)) +
                       renyi_discrete(pp, RenyiOrder(1.0 + r));
    const double bound =
        -std::log2(cell * cell_p / (2.0 * M_PI * psi.hbar()));
    return make_bound_report(lhs, bound, tolerance_bits);
}

double entropy_power_product(const GriddedWaveFunction& psi, double t,
                             double tail_tolerance) {
    const double r = dual_order(t);
    const GriddedWaveFunction dual = fourier_dual(psi, tail_tolerance);
    const double ix =
        finite_entropy_or_throw(psi.density(), 1.0 + t, "position-side");
    const double ip =
        finite_entropy_or_throw(dual.density(), 1.0 + r, "momentum-side");
    return renyi_entropy_power(EntropyNats{nats_from_bits(ix)}, 1.0 + t) *
           renyi_entropy_power(EntropyNats{nats_from_bits(ip)}, 1.0 + r);
}

HeavyTailGap heavy_tail_gap(const GriddedDensity& fx, const GriddedDensity& fp,
                            double p) {
    if (std::isnan(p) || p < 2.0) {
        throw DomainError("heavy_tail_gap: requires p >= 2");
    }
    const double q = conjugate(p).pPrime;
    HeavyTailGap gap;
    const double hx = finite_entropy_or_throw(fx, 1.0, "position-side");
    const double ix = finite_entropy_or_throw(fx, 0.5 * p, "position-side");
    const double hp = finite_entropy_or_throw(fp, 1.0, "momentum-side");
    const double ip = finite_entropy_or_throw(fp, 0.5 * q, "momentum-side");
    gap.lhsGap = hx - ix;
    gap.rhsGap = ip - hp;
    gap.improves = gap.lhsGap >= gap.rhsGap;
    return gap;
}

} // namespace iturlab
