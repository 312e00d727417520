#include "iturlab/renyi.hpp"

#include <algorithm>
#include <cmath>

#include "iturlab/quadrature.hpp"

namespace iturlab {

namespace {

constexpr double kShannonBranch = 1e-6;

/// ln(p)/(p - 1) with its limits: 1 at p = 1, 0 at p = inf. This is the
/// exponent in the entropy-power prefactor p^(-p'/p) = exp(-ln p/(p-1)).
double prefactor_exponent(double p) {
    if (std::isinf(p)) return 0.0;
    const double u = p - 1.0;
    if (u == 0.0) return 1.0;
    return std::log1p(u) / u;
}

double shannon_discrete_bits(const Eigen::ArrayXd& probs) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

/// Variance of log2 p under P; the first-order coefficient of the
/// expansion of I_alpha around alpha = 1.
double log_variance_discrete_bits(const Eigen::ArrayXd& probs) {
    double mean = 0.0, second = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (p > 0.0) {
            const double lp = std::log(p);
            mean += p * lp;
            second += p * lp * lp;
        }
    }
    return (second - mean * mean) / M_LN2;
}

/// log2 sum p^alpha via max-factoring: alpha log2 pmax + log2 sum
/// (p/pmax)^alpha, safe against under/overflow at extreme alpha.
double log2_power_sum_discrete(const Eigen::ArrayXd& probs, double alpha) {
    const double pmax = probs.maxCoeff();
    double s = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (p > 0.0) s += std::pow(p / pmax, alpha);
    }
    return alpha * std::log2(pmax) + std::log2(s);
}

} // namespace

double renyi_discrete(const DiscreteDistribution& dist, RenyiOrder order) {
    const double alpha = order.alpha();
    const Eigen::ArrayXd& p = dist.probs();
    if (std::isinf(alpha)) return -std::log2(dist.max_prob());
    if (alpha == 1.0) return shannon_discrete_bits(p);
    if (std::abs(alpha - 1.0) < kShannonBranch) {
        return shannon_discrete_bits(p) -
               0.5 * (alpha - 1.0) * log_variance_discrete_bits(p);
    }
    if (alpha == 0.0) {
        return std::log2(double((p > 0.0).count()));
    }
    return log2_power_sum_discrete(p, alpha) / (1.0 - alpha);
}

namespace {

double shannon_differential_bits(const GriddedDensity& density) {
    const Eigen::ArrayXd& f = density.values();
    Eigen::ArrayXd integrand(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        integrand[i] = f[i] > 0.0 ? -f[i] * std::log2(f[i]) : 0.0;
    }
    return cell_quadrature(integrand, density.cell());
}

double log_variance_differential_bits(const GriddedDensity& density) {
    const Eigen::ArrayXd& f = density.values();
    Eigen::ArrayXd fl(f.size()), fll(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double lf = f[i] > 0.0 ? std::log(f[i]) : 0.0;
        fl[i] = f[i] * lf;
        fll[i] = f[i] * lf * lf;
    }
    const double mean = cell_quadrature(fl, density.cell());
    const double second = cell_quadrature(fll, density.cell());
    return (second - mean * mean) / M_LN2;
}

} // namespace

double renyi_differential(const GriddedDensity& density, RenyiOrder order) {
    const double alpha = order.alpha();
    const Eigen::ArrayXd& f = density.values();
    if (std::isinf(alpha)) return -std::log2(density.peak());
    if (alpha == 1.0) return shannon_differential_bits(density);
    if (std::abs(alpha - 1.0) < kShannonBranch) {
        return shannon_differential_bits(density) -
               0.5 * (alpha - 1.0) * log_variance_differential_bits(density);
    }
    if (alpha == 0.0) {
        const double support = density.cell() * double((f > 0.0).count());
        return std::log2(support);
    }
    const double fmax = f.maxCoeff();
    if (!(fmax > 0.0)) {
        throw QuadratureError("renyi_differential: density is identically 0");
    }
    Eigen::ArrayXd powered(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        powered[i] = f[i] > 0.0 ? std::pow(f[i] / fmax, alpha) : 0.0;
    }
    // Divergence is a statement about the represented tail. Two signs
    // must coincide: the density's own mass says the grid reaches deep
    // into a light outer region (otherwise the support simply ends with
    // the grid, or the samples are scattered), yet the window integrals
    // of F^alpha keep growing out there.
    if (alpha < 1.0) {
        const Eigen::Index margin = std::max<Eigen::Index>(1, f.size() / 10);
        const double outer_mass = f.head(margin).sum() + f.tail(margin).sum();
        const bool tail_regime = outer_mass < 1e-2 * f.sum();
        if (tail_regime &&
            window_growth_divergent(powered, mass_median_index(f))) {
            return kInf;  // divergence flag
        }
    }
    const double integral = cell_quadrature(powered, density.cell());
    const double log2_integral = alpha * std::log2(fmax) + std::log2(integral);
    return log2_integral / (1.0 - alpha);
}

double renyi_relative_volume(const GriddedDensity& density, RenyiOrder order) {
    return renyi_differential(density, order) - std::log2(density.volume());
}

DiscreteDistribution discretize(const GriddedDensity& density, double cell) {
    const double fine = density.cell();
    const double ratio = cell / fine;
    const auto m = static_cast<Eigen::Index>(std::llround(ratio));
    if (m < 1 || std::abs(ratio - double(m)) > 1e-9 * std::max(1.0, ratio)) {
        throw GridMismatchError(
            "discretize: cell width is not an integer multiple of the grid's");
    }
    const Eigen::Index n = density.size();
    if (n % m != 0) {
        throw GridMismatchError("discretize: cell width does not divide the domain");
    }
    const Eigen::Index bins = n / m;
    Eigen::ArrayXd probs(bins);
    for (Eigen::Index k = 0; k < bins; ++k) {
        probs[k] = fine * density.values().segment(k * m, m).sum();
    }
    probs /= probs.sum();
    return DiscreteDistribution(std::move(probs));
}

double renyi_entropy_power(EntropyNats entropy, double p, int dim) {
    if (std::isnan(p) || !(p > 0.0)) {
        throw DomainError("renyi_entropy_power: requires p > 0");
    }
    if (dim < 1) throw DomainError("renyi_entropy_power: dimension must be >= 1");
    if (!std::isfinite(entropy.value)) {
        throw DomainError("renyi_entropy_power: entropy must be finite");
    }
    return std::exp(-prefactor_exponent(p) + 2.0 * entropy.value / dim) /
           (2.0 * M_PI);
}

double renyi_entropy_power(const GriddedDensity& density, double p, int dim) {
    const double bits = renyi_differential(density, RenyiOrder(p));
    return renyi_entropy_power(EntropyNats{nats_from_bits(bits)}, p, dim);
}

double gaussian_renyi_closed(double sigma, double p, int dim) {
    if (!(sigma > 0.0)) throw DomainError("gaussian_renyi_closed: sigma <= 0");
    if (std::isnan(p) || !(p > 0.0)) {
        throw DomainError("gaussian_renyi_closed: requires p > 0");
    }
    const double d = double(dim);
    return 0.5 * d * (std::log2(2.0 * M_PI) + prefactor_exponent(p) / M_LN2) +
           d * std::log2(sigma);
}

} // namespace iturlab
