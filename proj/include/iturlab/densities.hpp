#ifndef ITURLAB_DENSITIES_HPP
#define ITURLAB_DENSITIES_HPP

#include "iturlab/core.hpp"

namespace iturlab {

/// Uniform density on [a, b], gridded over [lo, hi].
GriddedDensity uniform_density(double a, double b, double lo, double hi,
                               Eigen::Index n);

/// Normal density N(mu, sigma^2) gridded over [lo, hi] (renormalized on
/// the grid; choose the domain wide enough that the correction is tiny).
GriddedDensity gaussian_density(double mu, double sigma, double lo, double hi,
                                Eigen::Index n);

/// Mixture sum_i w_i N(mu_i, sigma_i^2), weights normalized internally.
GriddedDensity gaussian_mixture_density(const Eigen::ArrayXd& weights,
                                        const Eigen::ArrayXd& means,
                                        const Eigen::ArrayXd& sigmas,
                                        double lo, double hi, Eigen::Index n);

/// Laplace density (1/2b) exp(-|x - mu|/b) gridded over [lo, hi].
GriddedDensity laplace_density(double mu, double b, double lo, double hi,
                               Eigen::Index n);

/// Real Gaussian wave packet with position spread sigma centred at mu,
/// momentum boost p0: psi ~ exp(-(x-mu)^2/(4 sigma^2) + i p0 x / hbar).
/// sigma = sqrt(hbar/2) gives the harmonic ground state.
GriddedWaveFunction gaussian_wave_packet(double mu, double sigma, double p0,
                                         double hbar, double lo, double hi,
                                         Eigen::Index n);

} // namespace iturlab

#endif
