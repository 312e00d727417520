#include "iturlab/core.hpp"

#include <cmath>

#include "iturlab/quadrature.hpp"

namespace iturlab {

HoelderPair conjugate(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw DomainError("conjugate: exponent must satisfy p >= 1");
    }
    if (std::isinf(p)) return {kInf, 1.0};
    if (p == 1.0) return {1.0, kInf};
    return {p, p / (p - 1.0)};
}

IturPair itur_pair(double r) {
    if (std::isnan(r) || r < -0.5) {
        throw DomainError("itur_pair: parameter must satisfy r >= -1/2");
    }
    if (r == -0.5) return {kInf, r};
    if (std::isinf(r)) return {-0.5, r};
    return {-r / (2.0 * r + 1.0), r};
}

BoundReport make_bound_report(double lhs, double bound, double tolerance) {
    BoundReport rep;
    rep.lhs = lhs;
    rep.bound = bound;
    rep.slack = lhs - bound;
    rep.holds = rep.slack >= -tolerance;
    rep.saturated = std::abs(rep.slack) <= tolerance;
    return rep;
}

DiscreteDistribution::DiscreteDistribution(Eigen::ArrayXd probs)
    : probs_(std::move(probs)) {
    if (probs_.size() < 1) {
        throw DomainError("DiscreteDistribution: needs at least one outcome");
    }
    if ((probs_ < 0.0).any()) {
        throw NegativeProbabilityError(
            "DiscreteDistribution: negative probability entry");
    }
    const double sum = probs_.sum();
    if (std::abs(sum - 1.0) > kDiscreteTol) {
        throw NormalizationError("DiscreteDistribution: probabilities sum to " +
                                 std::to_string(sum));
    }
}

DiscreteDistribution validate_distribution(const Eigen::ArrayXd& raw) {
    Eigen::ArrayXd probs = raw;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        if (probs[i] < -1e-14) {
            throw NegativeProbabilityError(
                "validate_distribution: entry " + std::to_string(i) + " is " +
                std::to_string(probs[i]));
        }
        if (probs[i] < 0.0) probs[i] = 0.0;
    }
    const double sum = probs.sum();
    if (std::abs(sum - 1.0) > kDiscreteTol) {
        throw NormalizationError(
            "validate_distribution: probabilities sum to " +
            std::to_string(sum) + ", drift exceeds 1e-12");
    }
    if (sum != 1.0 && sum > 0.0) probs /= sum;
    return DiscreteDistribution(std::move(probs));
}

GriddedDensity::GriddedDensity(double lo, double hi, Eigen::ArrayXd values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
    if (values_.size() < 1) throw GridError("GriddedDensity: empty grid");
    if (!(hi_ > lo_)) throw GridError("GriddedDensity: requires hi > lo");
    cell_ = (hi_ - lo_) / double(values_.size());
    if (!(cell_ > 0.0)) throw GridError("GriddedDensity: non-positive cell");
    if ((values_ < 0.0).any()) {
        throw NegativeProbabilityError("GriddedDensity: negative PDF sample");
    }
    const double mass = cell_quadrature(values_, cell_);
    if (std::abs(mass - 1.0) > kGriddedTol) {
        throw NormalizationError("GriddedDensity: quadrature mass " +
                                 std::to_string(mass));
    }
}

double GriddedDensity::peak() const {
    if (analytic_peak_) return *analytic_peak_;
    Eigen::Index k = 0;
    const double m = values_.maxCoeff(&k);
    if (k == 0 || k == values_.size() - 1) return m;
    const double fl = values_[k - 1], fr = values_[k + 1];
    const double denom = fl - 2.0 * m + fr;
    if (denom >= 0.0) return m;  // flat or kinked top: keep the sample
    const double correction = -(fr - fl) * (fr - fl) / (8.0 * denom);
    return m + correction;
}

GriddedDensity GriddedDensity::with_analytic_peak(double peak) const {
    GriddedDensity out = *this;
    out.analytic_peak_ = peak;
    return out;
}

GriddedWaveFunction::GriddedWaveFunction(double lo, double hi,
                                         Eigen::ArrayXcd amplitudes,
                                         double hbar)
    : lo_(lo), hi_(hi), hbar_(hbar), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) throw GridError("GriddedWaveFunction: empty");
    if (!(hi_ > lo_)) throw GridError("GriddedWaveFunction: requires hi > lo");
    if (!(hbar_ > 0.0)) throw DomainError("GriddedWaveFunction: hbar <= 0");
    cell_ = (hi_ - lo_) / double(amplitudes_.size());
    const double norm = l2_norm();
    if (std::abs(norm - 1.0) > kGriddedTol) {
        throw NormalizationError("GriddedWaveFunction: L2 norm " +
                                 std::to_string(norm));
    }
}

GriddedDensity GriddedWaveFunction::density() const {
    Eigen::ArrayXd pdf = amplitudes_.abs2();
    // |psi|^2 integrates to ||psi||_2^2 = 1 within the construction
    // tolerance; normalize the residual drift away.
    pdf /= cell_quadrature(pdf, cell_);
    return GriddedDensity(lo_, hi_, std::move(pdf));
}

double GriddedWaveFunction::l2_norm() const {
    return std::sqrt(cell_quadrature(amplitudes_.abs2(), cell_));
}

} // namespace iturlab
