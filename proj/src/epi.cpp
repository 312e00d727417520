#include "iturlab/epi.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <vector>

#include "iturlab/itur_continuous.hpp"
#include "iturlab/quadrature.hpp"
#include "iturlab/renyi.hpp"

namespace iturlab {

GriddedDensity convolve(const GriddedDensity& f1, const GriddedDensity& f2) {
    const double l = f1.cell();
    if (std::abs(f2.cell() - l) > 1e-12 * l) {
        throw GridMismatchError("convolve: grids must share their spacing");
    }
    const Eigen::Index n1 = f1.size(), n2 = f2.size();
    const Eigen::Index out = n1 + n2 - 1;
    Eigen::Index m = 1;
    while (m < out) m *= 2;

    std::vector<double> a(size_t(m), 0.0), b(size_t(m), 0.0);
    Eigen::Map<Eigen::ArrayXd>(a.data(), n1) = f1.values();
    Eigen::Map<Eigen::ArrayXd>(b.data(), n2) = f2.values();

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> fa, fb;
    fft.fwd(fa, a);
    fft.fwd(fb, b);
    for (Eigen::Index k = 0; k < m; ++k) fa[size_t(k)] *= fb[size_t(k)];
    std::vector<double> conv;
    fft.inv(conv, fa);

    Eigen::ArrayXd values(out);
    for (Eigen::Index k = 0; k < out; ++k) {
        values[k] = std::max(0.0, l * conv[size_t(k)]);
    }
    // The sum's support is [lo1+lo2, hi1+hi2]; the midpoint samples sit at
    // lo1+lo2+(k+1)l, i.e. on that interval shrunk by half a cell per end.
    const double lo = f1.lo() + f2.lo() + 0.5 * l;
    const double hi = f1.hi() + f2.hi() - 0.5 * l;
    const double mass = cell_quadrature(values, l);
    if (std::abs(mass - 1.0) > 1e-6) {
        throw NormalizationError("convolve: output mass drifted to " +
                                 std::to_string(mass));
    }
    values /= mass;
    return GriddedDensity(lo, hi, std::move(values));
}

namespace {

/// log C_x with C_x^2 = x^(1/x) / x'^(1/x'); C_1 = C_inf = 1.
double log_young_cx(double x) {
    if (std::isnan(x) || x < 1.0) {
        throw DomainError("young_constant: exponent below 1");
    }
    auto log_term = [](double e) {
        return std::isinf(e) ? 0.0 : std::log(e) / e;
    };
    const double xp = std::isinf(x) ? 1.0 : (x == 1.0 ? kInf : x / (x - 1.0));
    return 0.5 * (log_term(x) - log_term(xp));
}

} // namespace

double young_constant(double q, double p, double r) {
    auto inv = [](double e) { return std::isinf(e) ? 0.0 : 1.0 / e; };
    if (std::abs(inv(q) + inv(p) - 1.0 - inv(r)) > 1e-10) {
        throw DomainError("young_constant: (q,p,r) is not a Hoelder triple");
    }
    return std::exp(log_young_cx(p) + log_young_cx(q) - log_young_cx(r));
}

EpiReport check_generalized_epi(const GriddedDensity& f1,
                                const GriddedDensity& f2, double lambda,
                                double r) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw DomainError("check_generalized_epi: lambda must be in (0,1)");
    }
    if (std::isnan(r) || r < 1.0) {
        throw DomainError("check_generalized_epi: requires r >= 1");
    }
    const double q = std::isinf(r) ? 1.0 / lambda : r / ((1.0 - lambda) + lambda * r);
    const double p = std::isinf(r) ? 1.0 / (1.0 - lambda)
                                   : r / (lambda + (1.0 - lambda) * r);
    const double nq = renyi_entropy_power(f1, q);
    const double np = renyi_entropy_power(f2, p);
    const GriddedDensity sum = convolve(f1, f2);
    const double nr = renyi_entropy_power(sum, r);

    EpiReport rep;
    rep.lambda = lambda;
    rep.r = r;
    rep.lhsPower = nr;
    rep.rhsPower = std::exp((1.0 - lambda) * std::log(nq / (1.0 - lambda)) +
                            lambda * std::log(np / lambda));
    rep.holds = rep.lhsPower >= rep.rhsPower - 1e-9 * std::max(1.0, rep.rhsPower);
    return rep;
}

double optimal_lambda(double n1, double n2) {
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw DomainError("optimal_lambda: entropy powers must be positive");
    }
    return n2 / (n1 + n2);
}

VarianceEntropyChain variance_entropy_chain(const GriddedDensity& density) {
    const Eigen::ArrayXd& f = density.values();
    Eigen::ArrayXd xs(f.size());
    for (Eigen::Index k = 0; k < f.size(); ++k) xs[k] = density.x(k);
    const double mean = cell_quadrature(xs * f, density.cell());
    const Eigen::ArrayXd second = (xs - mean).square() * f;
    if (window_growth_divergent(second, mass_median_index(f))) {
        throw InfiniteVarianceError(
            "variance_entropy_chain: second moment does not converge");
    }
    VarianceEntropyChain chain;
    chain.variance = cell_quadrature(second, density.cell());
    const double h_bits = renyi_differential(density, RenyiOrder(1.0));
    chain.entropyPower =
        renyi_entropy_power(EntropyNats{nats_from_bits(h_bits)}, 1.0);
    chain.holds =
        chain.entropyPower <= chain.variance + 1e-9 * std::max(1.0, chain.variance);
    return chain;
}

namespace {

/// Quadrature a-norm of amplitudes on a uniform grid.
double amplitude_norm(const Eigen::ArrayXcd& amp, double cell, double a) {
    if (std::isinf(a)) return amp.abs().maxCoeff();
    const Eigen::ArrayXd powered = amp.abs().pow(a);
    return std::pow(cell_quadrature(powered, cell), 1.0 / a);
}

} // namespace

HausdorffYoungReport hausdorff_young_check(const GriddedWaveFunction& psi,
                                           double n) {
    if (std::isnan(n) || n < 1.0 || n > 2.0) {
        throw DomainError("hausdorff_young_check: n must lie in [1,2]");
    }
    const double np = conjugate(n).pPrime;
    const GriddedWaveFunction dual = fourier_dual(psi);

    // Norms of the unit-scaled pair f(x) = (2 pi hbar)^(1/4) psi(sqrt(2 pi
    // hbar) x): a change of variables gives a pure power of 2 pi hbar.
    const double s = 2.0 * M_PI * psi.hbar();
    auto scaled = [s](double norm, double a) {
        const double expo = std::isinf(a) ? 0.25 : (a - 2.0) / (4.0 * a);
        return norm * std::pow(s, expo);
    };
    const double psi_n = scaled(amplitude_norm(psi.amplitudes(), psi.cell(), n), n);
    const double psi_np =
        scaled(amplitude_norm(psi.amplitudes(), psi.cell(), np), np);
    const double dual_n =
        scaled(amplitude_norm(dual.amplitudes(), dual.cell(), n), n);
    const double dual_np =
        scaled(amplitude_norm(dual.amplitudes(), dual.cell(), np), np);

    const double cn = std::exp(log_young_cx(n));

    HausdorffYoungReport rep;
    rep.classical = make_bound_report(dual_n, psi_np, 1e-10);
    rep.beckner = make_bound_report(cn * psi_n, dual_np, 1e-10);
    return rep;
}

} // namespace iturlab
