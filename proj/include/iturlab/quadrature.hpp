#ifndef ITURLAB_QUADRATURE_HPP
#define ITURLAB_QUADRATURE_HPP

#include <Eigen/Dense>
#include <functional>

namespace iturlab {

/// Integral of midpoint samples over [lo, hi] with cell width
/// l = (hi - lo) / n: the midpoint rule, i.e. the exact integral of the
/// sampled representation.
double cell_quadrature(const Eigen::ArrayXd& samples, double cell);

/// Adaptive Simpson integral of an analytic integrand on [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12);

/// Nodes and weights of the n-point Gauss-Legendre rule on [0, 1].
void gauss_legendre(int n, Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights);

/// Doubling-window growth test on non-negative integrand samples.
/// Windows [c - R, c + R] around the given center (default: the
/// integrand's own mass median) with R doubling up to the grid span. A
/// convergent integrand settles: the final doubling adds < 1e-6
/// relative mass. When it has not settled, divergence is declared if
/// the window-to-window excess is not collapsing geometrically (log-
/// and power-law growth keep a near-constant excess, decaying tails
/// crush it). Pass the parent density's median as the center when the
/// integrand itself is tail-dominated.
bool window_growth_divergent(const Eigen::ArrayXd& integrand,
                             Eigen::Index center = -1);

/// Index holding the mass median of non-negative weights.
Eigen::Index mass_median_index(const Eigen::ArrayXd& weights);

} // namespace iturlab

#endif
