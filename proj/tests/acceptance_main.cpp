// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "iturlab/core.hpp"
#include "iturlab/densities.hpp"
#include "iturlab/epi.hpp"
#include "iturlab/examples.hpp"
#include "iturlab/itur_continuous.hpp"
#include "iturlab/itur_discrete.hpp"
#include "iturlab/matgeo.hpp"
#include "iturlab/renyi.hpp"
#include "oracle_helpers.hpp"

using namespace iturlab;

namespace {

int failures = 0;

void report(int criterion, bool pass, const char* summary, double measured,
            double limit) {
    std::printf("%s  criterion %2d: %s (measured %.6g, limit %.6g)\n",
                pass ? "PASS" : "FAIL", criterion, summary, measured, limit);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

// 1. Table I reproduction: every interval endpoint within +-0.001 of the
//    printed table; runtime < 1 s.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = table1();
    const double printed[5][7] = {
        {0.5, 0.067, 0.933, 0.0, 1.0, 0.0, 1.0},
        {0.6, 0.067, 0.933, 0.003, 0.997, 0.010, 0.990},
        {0.7, 0.067, 0.933, 0.017, 0.983, 0.042, 0.958},
        {0.8, 0.067, 0.933, 0.049, 0.951, 0.100, 0.900},
        {0.9, 0.067, 0.933, 0.121, 0.879, 0.200, 0.800},
    };
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const Table1Row& row = rows[size_t(i)];
        const double endpoints[6] = {row.vur.lo,     row.vur.hi,
                                     row.shannon.lo, row.shannon.hi,
                                     row.renyi.lo,   row.renyi.hi};
        for (int k = 0; k < 6; ++k) {
            worst = std::max(worst, std::abs(endpoints[k] - printed[i][k + 1]));
        }
    }
    const double elapsed = seconds_since(start);
    report(1, worst <= 1e-3 && elapsed < 1.0,
           "Table I endpoints within +-0.001, runtime < 1 s", worst, 1e-3);
}

// 2. Two-level bound: c(spin basis change) = 1/sqrt(2) exactly and the
//    ensuing bound is 1 bit.
void criterion_2() {
    Eigen::MatrixXcd m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, -s, s;
    const double c = overlap_bound_c(TransformMatrix(m));
    const double bound = itur_bound(c);
    report(2, c == s && std::abs(bound - 1.0) <= 1e-12,
           "spin overlap c = 1/sqrt(2), bound = 1 bit",
           std::abs(bound - 1.0), 1e-12);
}

// 3. Gaussian Hirschman saturation at 2^14 grid points, < 1 s.
void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    const GriddedWaveFunction psi = gaussian_wave_packet(
        0.0, std::sqrt(0.5), 0.0, 1.0, -14.0, 14.0, Eigen::Index(1) << 14);
    const ContinuousIturReport rep = check_continuous_itur(psi, 0.0, 1e-4);
    const double elapsed = seconds_since(start);
    report(3, std::abs(rep.strong.slack) <= 1e-4 && elapsed < 1.0,
           "Gaussian Hirschman slack <= 1e-4 bits", std::abs(rep.strong.slack),
           1e-4);
}

// 4. Cauchy Renyi ITUR saturation: closed forms exact, quadrature within
//    1e-3 bits, entropy-power product = hbar^2/4 within 1e-6 relative.
// 5. Cauchy Shannon ITUR: quadrature within 5e-3 bits of the closed sum,
//    constant recovered within 5e-4, strict excess over log2(e pi hbar).
void criteria_4_and_5() {
    const CauchyParams params{1.0, 0.0, 1.0};
    const CauchyEntropies closed = cauchy_closed_entropies(params);
    const CauchyQuadEntropies quad = cauchy_quadrature_entropies(params);

    const double weak = std::log2(2.0 * M_PI);
    const double closed_err = std::abs(closed.renyi_sum() - weak);
    const double quad_err = std::abs(quad.renyi_sum() - weak);
    const double product =
        renyi_entropy_power(EntropyNats{nats_from_bits(closed.Ihalf_mom)}, 0.5) *
        renyi_entropy_power(EntropyNats{nats_from_bits(closed.Iinf_pos)}, kInf);
    const double product_err = std::abs(product - 0.25) / 0.25;
    report(4,
           closed_err <= 1e-12 && quad_err <= 1e-3 && product_err <= 1e-6,
           "Cauchy Renyi saturation: closed exact, quadrature <= 1e-3 bits, "
           "N-product = hbar^2/4",
           std::max({closed_err * 1e9, quad_err, product_err}), 1e-3);

    const double printed_constant = 2.8945;
    const double expected_sum =
        std::log2(2.0 * std::pow(M_PI, 3)) -
        8.0 / (M_PI * M_PI) * printed_constant;
    const double sum_err = std::abs(quad.shannon_sum() - expected_sum);
    const double const_err = std::abs(quad.recovered_constant - printed_constant);
    const bool excess = quad.shannon_sum() > std::log2(M_E * M_PI);
    report(5, sum_err <= 5e-3 && const_err <= 5e-4 && excess,
           "Cauchy Shannon sum and tail constant from quadrature",
           std::max(sum_err, const_err), 5e-3);
}

// 6. Regulated saturation: sum within 1e-2 bits of log2(2 pi hbar) at
//    R/c = 1e6 and monotone over R/c in [1e2, 1e8].
void criterion_6() {
    const CauchyParams params{1.0, 0.0, 1.0};
    const double weak = std::log2(2.0 * M_PI);
    const double gap =
        std::abs(cauchy_regulated(params, RegulatorWindow{1e6}).sum - weak);
    bool monotone = true;
    double prev = kInf;
    for (double logR = 2.0; logR <= 8.01; logR += 0.5) {
        const double sum =
            cauchy_regulated(params, RegulatorWindow{std::pow(10.0, logR)}).sum;
        monotone = monotone && sum < prev && sum > weak;
        prev = sum;
    }
    report(6, gap <= 1e-2 && monotone,
           "regulated sum: within 1e-2 bits of log2(2 pi) at R/c = 1e6, "
           "monotone on [1e2, 1e8]",
           gap, 1e-2);
}

// 7. Cat-state curves: curve (iv) tracks log2(2 pi) within 2e-2 bits at
//    20 points on [0, 3]; curve (i) saturates log2(e pi) at beta = 0
//    within 1e-3; plateau between beta = 3 and 4 below 2e-2.
void criterion_7() {
    const Eigen::ArrayXd betas = Eigen::ArrayXd::LinSpaced(20, 0.0, 3.0);
    const auto rows = cat_itur_curves(betas);
    const double renyi_bound = std::log2(2.0 * M_PI);
    double worst_iv = 0.0;
    for (const CatCurvePoint& row : rows) {
        worst_iv = std::max(worst_iv, std::abs(row.renyi_iv - renyi_bound));
    }
    const double at_zero =
        std::abs(rows.front().shannon_sum - std::log2(M_E * M_PI));
    Eigen::ArrayXd plateau(2);
    plateau << 3.0, 4.0;
    const auto tail_rows = cat_itur_curves(plateau);
    const double plateau_step =
        std::abs(tail_rows[0].shannon_sum - tail_rows[1].shannon_sum);
    report(7, worst_iv <= 2e-2 && at_zero <= 1e-3 && plateau_step < 2e-2,
           "cat curves: (iv) tracks log2(2 pi), (i) saturates at beta = 0, "
           "plateau",
           std::max({worst_iv, at_zero, plateau_step}), 2e-2);
}

// 8. Generalized EPI property suite: 100 random Gaussian-mixture pairs
//    x r in {1.5, 2, 3} x lambda in {0.25, 0.5, 0.75} all hold; Gaussian
//    equality cases at the optimal lambda within 1e-6 relative; < 60 s.
void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20240801);
    std::uniform_real_distribution<double> uw(0.2, 0.8), umu(-2.0, 2.0),
        usg(0.5, 1.5);
    const Eigen::Index n = Eigen::Index(1) << 12;
    auto mixture = [&] {
        Eigen::ArrayXd w(2), mu(2), sg(2);
        w[0] = uw(rng);
        w[1] = 1.0 - w[0];
        mu[0] = umu(rng);
        mu[1] = umu(rng);
        sg[0] = usg(rng);
        sg[1] = usg(rng);
        return gaussian_mixture_density(w, mu, sg, -24.0, 24.0, n);
    };
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const GriddedDensity f1 = mixture();
        const GriddedDensity f2 = mixture();
        for (const double r : {1.5, 2.0, 3.0}) {
            for (const double lam : {0.25, 0.5, 0.75}) {
                if (!check_generalized_epi(f1, f2, lam, r).holds) ++violations;
            }
        }
    }
    double equality_err = 0.0;
    for (const double s2 : {1.0, 2.0, 0.5}) {
        const GriddedDensity g1 = gaussian_density(0.0, 1.0, -24.0, 24.0, n);
        const GriddedDensity g2 = gaussian_density(0.0, s2, -24.0, 24.0, n);
        const double lam = optimal_lambda(1.0, s2 * s2);
        const EpiReport rep = check_generalized_epi(g1, g2, lam, 1.0);
        equality_err = std::max(
            equality_err, std::abs(rep.lhsPower - rep.rhsPower) / rep.rhsPower);
    }
    const double elapsed = seconds_since(start);
    report(8,
           violations == 0 && equality_err <= 1e-6 && elapsed < 60.0,
           "generalized EPI: 900 mixture checks hold, Gaussian equality at "
           "optimal lambda",
           violations == 0 ? equality_err : double(violations), 1e-6);
}

// 9. Entropy-power Gaussian identity: N_p(sigma Z) = sigma^2 within 1e-6
//    relative for p in {1, 1.5, 2, 4, inf} and sigma in {0.5, 1, 2}.
void criterion_9() {
    double worst = 0.0;
    for (const double sigma : {0.5, 1.0, 2.0}) {
        const GriddedDensity g = gaussian_density(
            0.0, sigma, -16.0 * sigma, 16.0 * sigma, Eigen::Index(1) << 14);
        for (const double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
            const double n = renyi_entropy_power(g, p);
            worst = std::max(worst,
                             std::abs(n - sigma * sigma) / (sigma * sigma));
        }
    }
    report(9, worst <= 1e-6, "N_p(sigma Z) = sigma^2 across orders and scales",
           worst, 1e-6);
}

// 10. Matrix geometry: kappa >= 1 and dist * kappa = ||A|| within 1e-12
//     relative for 1000 random invertible matrices; the constructive
//     singular perturbation matches dist within 1e-10 on 20 of them.
void criterion_10() {
    std::mt19937 rng(4242);
    const double pairs[][2] = {{1.0, 1.0}, {2.0, 2.0}, {kInf, kInf}};
    double worst_identity = 0.0;
    bool kappa_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const TransformMatrix a(oracle::random_matrix(rng, 3));
        for (const auto& pair : pairs) {
            const double kappa = condition_number(a, pair[0], pair[1]);
            kappa_ok = kappa_ok && kappa >= 1.0 - 1e-12;
            const double norm = mixed_norm(a, pair[0], pair[1]);
            const double dist = distance_to_singularity(a, pair[0], pair[1]);
            worst_identity =
                std::max(worst_identity, std::abs(dist * kappa - norm) / norm);
        }
    }
    double worst_perturbation = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXcd m = oracle::random_matrix(rng, 4);
        const double dist =
            distance_to_singularity(TransformMatrix(m), 2.0, 2.0);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
            m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::Index last = svd.singularValues().size() - 1;
        const Eigen::MatrixXcd delta = -svd.singularValues()(last) *
                                       svd.matrixU().col(last) *
                                       svd.matrixV().col(last).adjoint();
        worst_perturbation = std::max(
            worst_perturbation,
            std::abs(mixed_norm(TransformMatrix(delta), 2.0, 2.0) - dist));
    }
    report(10,
           kappa_ok && worst_identity <= 1e-12 && worst_perturbation <= 1e-10,
           "kappa >= 1, dist * kappa = ||A||, constructive perturbation",
           std::max(worst_identity, worst_perturbation), 1e-10);
}

// 11. Renyi property suites: monotonicity in alpha, entropy bounds, and
//     reshuffling invariance, 1000 random cases each, zero violations.
void criterion_11() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> sizes(2, 16);
    const double orders[] = {0.25, 0.5, 1.0, 2.0, 4.0, kInf};
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = sizes(rng);
        const Eigen::ArrayXd p = oracle::random_distribution(rng, n);
        const DiscreteDistribution d = validate_distribution(p);
        double prev = kInf;
        for (const double alpha : orders) {
            const double h = renyi_discrete(d, alpha);
            if (h > prev + 1e-10) ++violations;
            if (h < -std::log2(d.max_prob()) - 1e-10) ++violations;
            if (h > std::log2(double(n)) + 1e-10) ++violations;
            prev = h;
        }
    }
    std::uniform_real_distribution<double> uw(0.2, 1.0), umu(-2.0, 2.0),
        usg(0.4, 1.2);
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::ArrayXd w(2), mu(2), sg(2);
        w[0] = uw(rng);
        w[1] = uw(rng);
        mu[0] = umu(rng);
        mu[1] = umu(rng);
        sg[0] = usg(rng);
        sg[1] = usg(rng);
        const GriddedDensity f = gaussian_mixture_density(
            w, mu, sg, -12.0, 12.0, Eigen::Index(1) << 9);
        Eigen::ArrayXd perm = f.values();
        std::shuffle(perm.data(), perm.data() + perm.size(), rng);
        const GriddedDensity g(f.lo(), f.hi(), perm);
        for (const double alpha : {0.5, 1.0, 2.0}) {
            const double a = renyi_differential(f, RenyiOrder(alpha));
            const double b = renyi_differential(g, RenyiOrder(alpha));
            if (std::abs(a - b) > 1e-9) ++violations;
        }
    }
    report(11, violations == 0,
           "Renyi monotonicity/bounds/reshuffling suites, zero violations",
           double(violations), 0.0);
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_and_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();

    // 12. The whole acceptance run stays desk-scale.
    const double elapsed = seconds_since(start);
    report(12, elapsed < 300.0, "full suite wall clock < 5 minutes", elapsed,
           300.0);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
