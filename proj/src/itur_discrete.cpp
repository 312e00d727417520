#include "iturlab/itur_discrete.hpp"

#include <cmath>
#include <complex>

#include "iturlab/renyi.hpp"

namespace iturlab {

double itur_bound(double c) {
    if (std::isnan(c) || !(c > 0.0)) {
        throw DomainError("itur_bound: overlap constant must be positive");
    }
    return -2.0 * std::log2(c);
}

BoundReport check_renyi_itur(const DiscreteDistribution& p1,
                             const DiscreteDistribution& p2, double r,
                             double c, double tolerance_bits) {
    const IturPair pair = itur_pair(r);
    const double lhs = renyi_discrete(p2, RenyiOrder(1.0 + pair.t)) +
                       renyi_discrete(p1, RenyiOrder(1.0 + pair.r));
    return make_bound_report(lhs, itur_bound(c), tolerance_bits);
}

namespace {

void require_p_range(double p) {
    if (std::isnan(p) || p < 0.5 || p > 1.0) {
        throw DomainError("spin feasibility: p must lie in [1/2, 1]");
    }
}

double binary_entropy_bits(double q) {
    double h = 0.0;
    if (q > 0.0) h -= q * std::log2(q);
    if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
    return h;
}

} // namespace

Interval spin_feasible_q_renyi(double p) {
    require_p_range(p);
    // sqrt(q(1-q)) >= p - 1/2  <=>  q(1-q) >= (p - 1/2)^2.
    const double d = p - 0.5;
    const double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * d * d));
    return {0.5 * (1.0 - s), 0.5 * (1.0 + s)};
}

Interval spin_feasible_q_shannon(double p) {
    require_p_range(p);
    // H(q) >= 1 - H(p), H symmetric about 1/2 and increasing on [0, 1/2].
    const double target = 1.0 - binary_entropy_bits(p);
    if (target <= 0.0) return {0.0, 1.0};
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (binary_entropy_bits(mid) < target ? lo : hi) = mid;
    }
    const double q = 0.5 * (lo + hi);
    return {q, 1.0 - q};
}

Interval spin_feasible_q_vur(double p, double phase) {
    require_p_range(p);
    // q(1-q) >= sin^2(phase)/4, independent of p.
    const double s2 = std::sin(phase) * std::sin(phase);
    const double root = std::sqrt(std::max(0.0, 1.0 - s2));
    return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

SpinFeasibility spin_feasible(const SpinScenario& scenario) {
    return {spin_feasible_q_vur(scenario.p, scenario.phase),
            spin_feasible_q_shannon(scenario.p),
            spin_feasible_q_renyi(scenario.p)};
}

std::array<Table1Row, 5> table1() {
    std::array<Table1Row, 5> rows;
    for (int i = 0; i < 5; ++i) {
        const double p = 0.5 + 0.1 * double(i);
        const SpinFeasibility feasible = spin_feasible({p, M_PI / 6.0});
        rows[size_t(i)] = {p, feasible.vur, feasible.shannon, feasible.renyi};
    }
    return rows;
}

TwoLevelState two_level_state(double q, double chi) {
    if (std::isnan(q) || q < 0.0 || q > 1.0) {
        throw DomainError("two_level_state: q must lie in [0, 1]");
    }
    const std::complex<double> cplus(std::sqrt(q), 0.0);
    const std::complex<double> cminus = std::polar(std::sqrt(1.0 - q), chi);
    // S_x eigenstates: |x+> = (|z+> + |z->)/sqrt(2), |x-> = (-|z+> + |z->)/sqrt(2).
    const std::complex<double> axp = (cplus + cminus) / std::sqrt(2.0);
    const std::complex<double> axm = (-cplus + cminus) / std::sqrt(2.0);
    Eigen::ArrayXd px(2), pz(2);
    px << std::norm(axp), std::norm(axm);
    pz << std::norm(cplus), std::norm(cminus);
    TwoLevelState state{validate_distribution(px), validate_distribution(pz),
                        0.0, 0.0};
    state.phase_z = std::arg(cplus) - std::arg(cminus);
    state.phase_x = std::arg(axp) - std::arg(axm);
    return state;
}

} // namespace iturlab
