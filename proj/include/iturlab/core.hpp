#ifndef ITURLAB_CORE_HPP
#define ITURLAB_CORE_HPP

#include <Eigen/Dense>
#include <limits>
#include <optional>

#include "iturlab/errors.hpp"

namespace iturlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerance separating modeling error from float noise on discrete data.
inline constexpr double kDiscreteTol = 1e-12;
/// Same, for quadrature-validated gridded data.
inline constexpr double kGriddedTol = 1e-8;

/// Hoelder conjugate pair (p, p') with 1/p + 1/p' = 1, extended-real
/// conventions 1/inf = 0 at the endpoints.
struct HoelderPair {
    double p;
    double pPrime;
};

/// Conjugate exponent of p >= 1 (p = 1 -> inf, p = inf -> 1).
HoelderPair conjugate(double p);

/// Parameter pair (t, r) with t = -r/(2r+1), equivalently 1/t + 1/r = -2.
/// Both live in [-1/2, +inf]; the map is an involution exchanging the
/// endpoints -1/2 <-> +inf with fixed point 0.
struct IturPair {
    double t;
    double r;
};

/// Build the (t, r) pair from r in [-1/2, +inf].
IturPair itur_pair(double r);

/// Outcome of a single inequality evaluation: lhs >= bound is the claim,
/// slack = lhs - bound, saturated when |slack| <= the tolerance the caller
/// supplied. Both sides carry the same unit (bits for entropy sums,
/// squared units for entropy powers, plain norms for norm inequalities).
struct BoundReport {
    double lhs = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool holds = false;
    bool saturated = false;
};

BoundReport make_bound_report(double lhs, double bound, double tolerance);

/// Finite probability vector. Immutable after construction; the
/// square-root likelihood view xi_i = sqrt(p_i) embeds it on the unit
/// sphere's positive orthant.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(Eigen::ArrayXd probs);

    const Eigen::ArrayXd& probs() const { return probs_; }
    Eigen::Index size() const { return probs_.size(); }
    double operator[](Eigen::Index i) const { return probs_[i]; }

    /// Square-root likelihood vector.
    Eigen::ArrayXd sqrt_likelihood() const { return probs_.sqrt(); }

    double max_prob() const { return probs_.maxCoeff(); }

private:
    Eigen::ArrayXd probs_;
};

/// Validate a raw vector into a distribution. Entries below -1e-14 are
/// rejected; tiny negatives are clamped to zero and the vector is
/// renormalized when the total drift stays within 1e-12.
DiscreteDistribution validate_distribution(const Eigen::ArrayXd& raw);

/// Non-negative PDF sampled at the midpoints of a uniform 1-D grid.
/// values[k] = F(lo + (k + 1/2) * cell()). The quadrature integral over
/// [lo, hi] must be 1 within 1e-8 at construction. Immutable.
class GriddedDensity {
public:
    GriddedDensity(double lo, double hi, Eigen::ArrayXd values);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double volume() const { return hi_ - lo_; }
    double cell() const { return cell_; }
    Eigen::Index size() const { return values_.size(); }
    const Eigen::ArrayXd& values() const { return values_; }

    /// Midpoint coordinate of cell k.
    double x(Eigen::Index k) const { return lo_ + (double(k) + 0.5) * cell_; }

    /// Largest sample; see peak() for the refined estimate.
    double max_value() const { return values_.maxCoeff(); }

    /// Peak of the underlying PDF: the registered closed form when one is
    /// known, otherwise the max sample refined by a parabola through its
    /// neighbours.
    double peak() const;

    /// Register a closed-form peak value (used by the case studies where
    /// the analytic maximum is known, e.g. 1/(pi c) for Cauchy).
    GriddedDensity with_analytic_peak(double peak) const;

    std::optional<double> analytic_peak() const { return analytic_peak_; }

private:
    double lo_;
    double hi_;
    double cell_;
    Eigen::ArrayXd values_;
    std::optional<double> analytic_peak_;
};

/// Complex amplitudes on a uniform midpoint grid with unit L2 norm
/// (quadrature, within 1e-8). Carries the hbar convention used by the
/// Fourier kernel exp(-i p x / hbar) / sqrt(2 pi hbar).
class GriddedWaveFunction {
public:
    GriddedWaveFunction(double lo, double hi, Eigen::ArrayXcd amplitudes,
                        double hbar = 1.0);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double cell() const { return cell_; }
    double hbar() const { return hbar_; }
    Eigen::Index size() const { return amplitudes_.size(); }
    const Eigen::ArrayXcd& amplitudes() const { return amplitudes_; }

    double x(Eigen::Index k) const { return lo_ + (double(k) + 0.5) * cell_; }

    /// |psi|^2 as a density on the same grid.
    GriddedDensity density() const;

    /// Quadrature L2 norm of the amplitudes.
    double l2_norm() const;

private:
    double lo_;
    double hi_;
    double cell_;
    double hbar_;
    Eigen::ArrayXcd amplitudes_;
};

} // namespace iturlab

#endif
