#include "iturlab/densities.hpp"

#include <cmath>

#include "iturlab/quadrature.hpp"

namespace iturlab {

namespace {

GriddedDensity from_samples(double lo, double hi, Eigen::ArrayXd values) {
    const double cell = (hi - lo) / double(values.size());
    const double mass = cell_quadrature(values, cell);
    if (!(mass > 0.0)) throw GridError("density grid carries no mass");
    values /= mass;
    return GriddedDensity(lo, hi, std::move(values));
}

} // namespace

GriddedDensity uniform_density(double a, double b, double lo, double hi,
                               Eigen::Index n) {
    if (!(b > a)) throw DomainError("uniform_density: requires b > a");
    const double cell = (hi - lo) / double(n);
    Eigen::ArrayXd v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = lo + (double(k) + 0.5) * cell;
        v[k] = (x >= a && x <= b) ? 1.0 / (b - a) : 0.0;
    }
    return from_samples(lo, hi, std::move(v));
}

GriddedDensity gaussian_density(double mu, double sigma, double lo, double hi,
                                Eigen::Index n) {
    if (!(sigma > 0.0)) throw DomainError("gaussian_density: sigma <= 0");
    const double cell = (hi - lo) / double(n);
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
    Eigen::ArrayXd v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double z = (lo + (double(k) + 0.5) * cell - mu) / sigma;
        v[k] = norm * std::exp(-0.5 * z * z);
    }
    return from_samples(lo, hi, std::move(v));
}

GriddedDensity gaussian_mixture_density(const Eigen::ArrayXd& weights,
                                        const Eigen::ArrayXd& means,
                                        const Eigen::ArrayXd& sigmas,
                                        double lo, double hi, Eigen::Index n) {
    if (weights.size() != means.size() || weights.size() != sigmas.size() ||
        weights.size() < 1) {
        throw DomainError("gaussian_mixture_density: component size mismatch");
    }
    if ((weights < 0.0).any() || !(weights.sum() > 0.0)) {
        throw DomainError("gaussian_mixture_density: bad weights");
    }
    const Eigen::ArrayXd w = weights / weights.sum();
    const double cell = (hi - lo) / double(n);
    Eigen::ArrayXd v = Eigen::ArrayXd::Zero(n);
    for (Eigen::Index c = 0; c < w.size(); ++c) {
        if (!(sigmas[c] > 0.0)) {
            throw DomainError("gaussian_mixture_density: sigma <= 0");
        }
        const double norm = w[c] / (sigmas[c] * std::sqrt(2.0 * M_PI));
        for (Eigen::Index k = 0; k < n; ++k) {
            const double z = (lo + (double(k) + 0.5) * cell - means[c]) / sigmas[c];
            v[k] += norm * std::exp(-0.5 * z * z);
        }
    }
    return from_samples(lo, hi, std::move(v));
}

GriddedDensity laplace_density(double mu, double b, double lo, double hi,
                               Eigen::Index n) {
    if (!(b > 0.0)) throw DomainError("laplace_density: scale <= 0");
    const double cell = (hi - lo) / double(n);
    Eigen::ArrayXd v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = lo + (double(k) + 0.5) * cell;
        v[k] = std::exp(-std::abs(x - mu) / b) / (2.0 * b);
    }
    return from_samples(lo, hi, std::move(v));
}

GriddedWaveFunction gaussian_wave_packet(double mu, double sigma, double p0,
                                         double hbar, double lo, double hi,
                                         Eigen::Index n) {
    if (!(sigma > 0.0)) throw DomainError("gaussian_wave_packet: sigma <= 0");
    const double cell = (hi - lo) / double(n);
    Eigen::ArrayXcd a(n);
    const double norm = std::pow(2.0 * M_PI * sigma * sigma, -0.25);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = lo + (double(k) + 0.5) * cell;
        const double u = (x - mu) / (2.0 * sigma);
        a[k] = std::polar(norm * std::exp(-u * u), p0 * x / hbar);
    }
    const double l2 = std::sqrt(cell_quadrature(a.abs2(), cell));
    a /= l2;
    return GriddedWaveFunction(lo, hi, std::move(a), hbar);
}

} // namespace iturlab
