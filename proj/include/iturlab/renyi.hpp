#ifndef ITURLAB_RENYI_HPP
#define ITURLAB_RENYI_HPP

#include "iturlab/core.hpp"

namespace iturlab {

/// Order parameter alpha in [0, inf]. alpha = 1 routes to the Shannon
/// branch, alpha = inf to the min-entropy branch.
class RenyiOrder {
public:
    RenyiOrder(double alpha) : alpha_(alpha) {
        if (std::isnan(alpha_) || alpha_ < 0.0) {
            throw DomainError("RenyiOrder: alpha must be >= 0");
        }
    }
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

/// Order-alpha Renyi entropy of a discrete distribution, in bits:
/// (1/(1-alpha)) log2 sum_k p_k^alpha, with the Shannon limit at
/// alpha = 1 and -log2 max_k p_k at alpha = inf. Always lies in
/// [-log2 max p_k, log2 n].
double renyi_discrete(const DiscreteDistribution& dist, RenyiOrder order);

/// Differential Renyi entropy of a gridded density, in bits:
/// (1/(1-alpha)) log2 integral F^alpha dx. Can be negative. For
/// alpha < 1 a heavy tail can make the integral diverge; the
/// doubling-window growth test detects this and the function returns
/// +inf (the only way +inf is produced).
double renyi_differential(const GriddedDensity& density, RenyiOrder order);

/// Differential entropy relative to the uniform density on the grid's
/// own interval: renyi_differential(F, alpha) - log2(hi - lo).
double renyi_relative_volume(const GriddedDensity& density, RenyiOrder order);

/// Bin a gridded density into cells of width `cell` (an integer multiple
/// of the density's own cell that divides the domain). p_k is the
/// quadrature integral over bin k, renormalized.
DiscreteDistribution discretize(const GriddedDensity& density, double cell);

/// Strong type for an entropy value measured in nats.
struct EntropyNats {
    double value;
};

/// p-th Renyi entropy power from a precomputed order-p entropy in nats:
/// N_p = (1/2pi) p^(-p'/p) exp((2/D) I_p), where the prefactor exponent
/// ln(p)/(p-1) is evaluated by its limits at p = 1 (giving 1/(2 pi e))
/// and p = inf (giving 1/(2 pi)). Valid for every order p > 0; orders
/// below 1 appear on the wide-tail side of the uncertainty products.
double renyi_entropy_power(EntropyNats entropy, double p, int dim = 1);

/// Same, with I_p computed from the density by quadrature.
double renyi_entropy_power(const GriddedDensity& density, double p,
                           int dim = 1);

/// Closed-form order-p Renyi entropy of an isotropic Gaussian with
/// standard deviation sigma in D dimensions, in bits:
/// (D/2) log2(2 pi p^(p'/p)) + D log2 sigma.
double gaussian_renyi_closed(double sigma, double p, int dim = 1);

/// bits <-> nats helpers.
inline double nats_from_bits(double bits) { return bits * M_LN2; }
inline double bits_from_nats(double nats) { return nats / M_LN2; }

} // namespace iturlab

#endif
