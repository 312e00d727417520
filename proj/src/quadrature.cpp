#include "iturlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>
#include <unordered_map>

#include "iturlab/errors.hpp"

namespace iturlab {

double cell_quadrature(const Eigen::ArrayXd& samples, double cell) {
    // Midpoint rule. On this data model it is the exact integral of the
    // piecewise representation, which keeps discretization, permutation
    // invariance and the discrete Plancherel identity exact; smooth
    // decaying densities make it spectrally accurate as well.
    return cell * samples.sum();
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) * (fa + 4.0 * fm + fb) / 6.0;
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double fm, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double diff = left + right - whole;
    // Accept on the tolerance, or once refinement is limited by machine
    // precision on this piece.
    if (std::abs(diff) < 15.0 * tol ||
        std::abs(diff) <= 4e-15 * (std::abs(left) + std::abs(right))) {
        return left + right + diff / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureError("integrate_adaptive: refinement did not converge");
    }
    return adaptive(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive(f, a, fa, b, fb, fm, whole, tol, 60);
}

Eigen::Index mass_median_index(const Eigen::ArrayXd& w) {
    const double half = 0.5 * w.sum();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        acc += w[i];
        if (acc >= half) return i;
    }
    return w.size() - 1;
}

bool window_growth_divergent(const Eigen::ArrayXd& integrand,
                             Eigen::Index center) {
    const Eigen::Index n = integrand.size();
    if (n < 16) return false;
    if (center < 0 || center >= n) center = mass_median_index(integrand);
    const Eigen::Index max_half = std::max(center, n - 1 - center);
    std::vector<Eigen::Index> halves;
    for (Eigen::Index h = max_half;
         h >= std::max<Eigen::Index>(2, max_half / 32); h /= 2) {
        halves.push_back(h);
    }
    std::reverse(halves.begin(), halves.end());
    std::vector<double> partial;
    partial.reserve(halves.size());
    for (const Eigen::Index half : halves) {
        const Eigen::Index a = std::max<Eigen::Index>(0, center - half);
        const Eigen::Index b = std::min(n - 1, center + half);
        partial.push_back(integrand.segment(a, b - a + 1).sum());
    }
    if (partial.size() < 3) return false;
    const std::size_t m = partial.size();
    const double last = partial[m - 1], prev = partial[m - 2],
                 prev2 = partial[m - 3];
    if (prev <= 0.0 || prev2 <= 0.0) return false;
    const double excess_last = last / prev - 1.0;
    if (excess_last <= 1e-6) return false;  // settled within threshold
    const double excess_prev = prev / prev2 - 1.0;
    if (excess_prev <= 0.0) return false;
    return excess_last / excess_prev >= 0.5;
}

void gauss_legendre(int n, Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights) {
    static std::mutex mtx;
    static std::unordered_map<int, std::pair<Eigen::ArrayXd, Eigen::ArrayXd>>
        cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }
    Eigen::ArrayXd x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double z = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - double(j) * p2) /
                     (double(j) + 1.0);
            }
            pp = double(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    // Map [-1, 1] to [0, 1].
    nodes = 0.5 * (x + 1.0);
    weights = 0.5 * w;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, std::make_pair(nodes, weights));
}

} // namespace iturlab
