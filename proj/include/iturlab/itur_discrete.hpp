#ifndef ITURLAB_ITUR_DISCRETE_HPP
#define ITURLAB_ITUR_DISCRETE_HPP

#include <array>

#include "iturlab/core.hpp"

namespace iturlab {

/// Two-level configuration: p is the larger outcome probability of the
/// first observable (so p >= 1/2 by convention), phase the relative
/// phase of the state in the second observable's eigenbasis.
struct SpinScenario {
    double p = 0.5;
    double phase = 0.0;
};

/// Closed interval of feasible q values.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Uncertainty bound -2 log2 c for the overlap constant c in (0, 1].
/// Values c > 1 are accepted (they make the bound negative, i.e. no
/// genuine uncertainty relation) so non-unitary transforms can be
/// explored; c <= 0 is rejected.
double itur_bound(double c);

/// Renyi ITUR check: I_{1+t}(P2) + I_{1+r}(P1) >= -2 log2 c with
/// t = -r/(2r+1), r in [-1/2, inf]. r = 0 is the Shannon
/// (Maassen-Kraus) relation. Exchanging P1 and P2 swaps (t, r) and
/// evaluates the same bound.
BoundReport check_renyi_itur(const DiscreteDistribution& p1,
                             const DiscreteDistribution& p2, double r,
                             double c, double tolerance_bits = 1e-9);

/// Feasible q interval of the Renyi (I_inf, I_1/2) relation for the
/// orthogonal-spin pair: sqrt(q(1-q)) + 1/2 >= p, solved in closed form.
Interval spin_feasible_q_renyi(double p);

/// Feasible q interval of the Shannon relation
/// p^p (1-p)^(1-p) <= (1/2) q^-q (1-q)^(q-1), solved by bisection on
/// [0, 1/2] and mirrored.
Interval spin_feasible_q_shannon(double p);

/// Feasible q interval of the Robertson-Schroedinger relation
/// q(1-q) >= (1/4) sin^2(phase); independent of p.
Interval spin_feasible_q_vur(double p, double phase);

/// All three feasible intervals of a two-level configuration.
struct SpinFeasibility {
    Interval vur;
    Interval shannon;
    Interval renyi;
};

SpinFeasibility spin_feasible(const SpinScenario& scenario);

struct Table1Row {
    double p = 0.0;
    Interval vur;
    Interval shannon;
    Interval renyi;
};

/// The five-row comparison table for p in {0.5, ..., 0.9} with the VUR
/// phase fixed at pi/6.
std::array<Table1Row, 5> table1();

/// Measurement statistics of a two-level pure state
/// |phi> = sqrt(q) |z+> + sqrt(1-q) e^{i chi} |z->
/// in the S_z basis and in the rotated S_x basis.
struct TwoLevelState {
    DiscreteDistribution sx;  // P = (p, 1-p)
    DiscreteDistribution sz;  // Q = (q, 1-q)
    double phase_z = 0.0;     // relative phase in the S_z basis
    double phase_x = 0.0;     // relative phase in the S_x basis
};

TwoLevelState two_level_state(double q, double chi);

} // namespace iturlab

#endif
