#include <doctest.h>

#include <random>

#include "iturlab/densities.hpp"
#include "iturlab/examples.hpp"
#include "iturlab/itur_continuous.hpp"
#include "iturlab/renyi.hpp"

using namespace iturlab;

namespace {

GriddedWaveFunction ground_state(double hbar, double width = 14.0,
                                 Eigen::Index n = 1 << 12) {
    return gaussian_wave_packet(0.0, std::sqrt(0.5 * hbar), 0.0, hbar, -width,
                                width, n);
}

} // namespace

TEST_CASE("fourier_dual: Gaussian self-duality and Plancherel") {
    const double hbar = 1.0;
    const GriddedWaveFunction psi = ground_state(hbar);
    const GriddedWaveFunction dual = fourier_dual(psi);
    CHECK(dual.l2_norm() == doctest::Approx(1.0).epsilon(1e-10));

    // sigma_p = sqrt(hbar/2): |dual|^2 is the same Gaussian.
    const GriddedDensity pd = dual.density();
    double worst = 0.0;
    for (Eigen::Index k = 0; k < pd.size(); ++k) {
        const double p = pd.x(k);
        if (std::abs(p) > 8.0) continue;
        const double expected = std::exp(-p * p / hbar) / std::sqrt(M_PI * hbar);
        worst = std::max(worst, std::abs(pd.values()[k] - expected));
    }
    CHECK(worst < 1e-9);

    // A position shift leaves |psi-hat| untouched.
    const GriddedWaveFunction shifted =
        gaussian_wave_packet(1.375, std::sqrt(0.5), 0.0, 1.0, -14.0, 14.0, 1 << 12);
    const GriddedWaveFunction shifted_dual = fourier_dual(shifted);
    CHECK((shifted_dual.amplitudes().abs() - dual.amplitudes().abs())
              .maxCoeff() < 1e-9);
}

TEST_CASE("fourier_dual: double dual is the parity reflection") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> umu(-1.0, 1.0), usg(0.7, 1.4),
        up(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const GriddedWaveFunction psi = gaussian_wave_packet(
            umu(rng), usg(rng), up(rng), 1.0, -20.0, 20.0, 1 << 11);
        const GriddedWaveFunction twice = fourier_dual(fourier_dual(psi));
        REQUIRE(twice.size() == psi.size());
        double worst = 0.0;
        for (Eigen::Index k = 0; k < psi.size(); ++k) {
            worst = std::max(
                worst, std::abs(twice.amplitudes()[k] -
                                psi.amplitudes()[psi.size() - 1 - k]));
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("fourier_dual: Cauchy-root wavefunction maps onto the K0 profile") {
    // The truncated heavy tail contributes an oscillatory error
    // ~1/(p X) to psi-hat, so hitting 1e-4 down at p = 0.05 needs a very
    // wide grid.
    const double c = 1.0, hbar = 1.0;
    const Eigen::Index n = Eigen::Index(1) << 22;
    const double cell = 0.15;
    const double xw = 0.5 * cell * double(n);
    Eigen::ArrayXcd amp(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = -xw + (double(k) + 0.5) * cell;
        amp[k] = std::sqrt(c / M_PI) / std::sqrt(c * c + x * x);
    }
    const double l2 = std::sqrt((amp.abs2().sum()) * cell);
    amp /= l2;
    const GriddedWaveFunction psi(-xw, xw, amp, hbar);
    const GriddedWaveFunction dual = fourier_dual(psi, 1e-5);

    const GriddedDensity fmom = dual.density();
    double worst = 0.0;
    for (Eigen::Index k = 0; k < fmom.size(); ++k) {
        const double p = std::abs(fmom.x(k));
        if (p < 0.05 || p > 5.0) continue;
        const double k0 = bessel_k0(c * p / hbar);
        const double expected = 2.0 * c / (M_PI * M_PI * hbar) * k0 * k0;
        worst = std::max(worst, std::abs(fmom.values()[k] - expected));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("fourier_dual tail guard") {
    // A wave packet parked near the grid edge trips the aliasing guard.
    const GriddedWaveFunction offcenter =
        gaussian_wave_packet(9.0, 0.7, 0.0, 1.0, -10.0, 10.0, 1 << 10);
    CHECK_THROWS_AS(fourier_dual(offcenter), AliasingError);
}

TEST_CASE("bb_rhs values and bound ordering") {
    CHECK(bb_rhs(0.0, 1, 1.0) ==
          doctest::Approx(std::log2(M_E * M_PI)).epsilon(1e-12));
    CHECK(bb_rhs(kInf, 1, 1.0) ==
          doctest::Approx(std::log2(2.0 * M_PI)).epsilon(1e-12));
    CHECK(bb_rhs(-0.5, 1, 1.0) ==
          doctest::Approx(std::log2(2.0 * M_PI)).epsilon(1e-12));
    // t = 1 (r = -1/3), hbar = 1/(2 pi): direct evaluation.
    CHECK(bb_rhs(1.0, 1, 1.0 / (2.0 * M_PI)) ==
          doctest::Approx(0.3774437510817).epsilon(1e-10));
    // hbar = 1/(2 pi) zeroes the weak bound.
    CHECK(bb_weak_rhs(1, 1.0 / (2.0 * M_PI)) == doctest::Approx(0.0));

    double prev = kInf;
    for (const double t : {0.0, 0.1, 0.3, 1.0, 3.0, 10.0, 100.0, kInf}) {
        const double strong = bb_rhs(t, 1, 1.0);
        CHECK(strong >= bb_weak_rhs(1, 1.0) - 1e-12);
        CHECK(strong <= prev + 1e-12);  // decreasing away from t = 0
        prev = strong;
    }
}

TEST_CASE("continuous ITUR: Gaussian saturation and positive slack") {
    const GriddedWaveFunction psi = ground_state(1.0, 14.0, 1 << 14);
    const ContinuousIturReport hirschman = check_continuous_itur(psi, 0.0, 1e-4);
    CHECK(hirschman.strong.holds);
    CHECK(hirschman.strong.saturated);
    CHECK(std::abs(hirschman.strong.slack) <= 1e-4);

    const ContinuousIturReport t1 = check_continuous_itur(psi, 1.0);
    CHECK(t1.strong.holds);
    // Gaussians saturate the strong bound at every order, not only at
    // t = 0 (they are the extremizers of the underlying inequality).
    CHECK(std::abs(t1.strong.slack) < 1e-6);
    // Closed-form cross-check: Gaussian entropies from the scaling law.
    const double sigma = std::sqrt(0.5);
    const double expected = gaussian_renyi_closed(sigma, 2.0) +
                            gaussian_renyi_closed(sigma, 2.0 / 3.0);
    CHECK(t1.positionEntropy + t1.momentumEntropy ==
          doctest::Approx(expected).epsilon(1e-8));

    // Weak bound holds across the whole parameter line for random packets.
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> umu(-1.0, 1.0), usg(0.6, 1.5),
        up(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        const GriddedWaveFunction packet = gaussian_wave_packet(
            umu(rng), usg(rng), up(rng), 1.0, -24.0, 24.0, 1 << 12);
        for (int i = 0; i < 20; ++i) {
            const double t = -0.5 + 10.0 * double(i) / 19.0;
            const ContinuousIturReport rep = check_continuous_itur(packet, t);
            CHECK(rep.weak.holds);
            CHECK(rep.strong.holds);
        }
    }

    // Hirschman slack stays non-negative over 100 random packets.
    for (int trial = 0; trial < 100; ++trial) {
        const GriddedWaveFunction packet = gaussian_wave_packet(
            umu(rng), usg(rng), up(rng), 1.0, -24.0, 24.0, 1 << 11);
        CHECK(check_continuous_itur(packet, 0.0).strong.slack >= -1e-9);
    }
}

TEST_CASE("continuous ITUR slack is dilation invariant") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> ua(1.2, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double a = ua(rng);
        const GriddedWaveFunction narrow = gaussian_wave_packet(
            0.0, 0.9, 0.0, 1.0, -30.0, 30.0, 1 << 13);
        const GriddedWaveFunction dilated = gaussian_wave_packet(
            0.0, 0.9 / a, 0.0, 1.0, -30.0 / a, 30.0 / a, 1 << 13);
        for (const double t : {0.0, 0.7}) {
            const ContinuousIturReport r1 = check_continuous_itur(narrow, t);
            const ContinuousIturReport r2 = check_continuous_itur(dilated, t);
            // I_x shifts by -log2 a, I_p by +log2 a, slack unchanged.
            CHECK(r2.positionEntropy ==
                  doctest::Approx(r1.positionEntropy - std::log2(a)).epsilon(1e-6));
            CHECK(r2.momentumEntropy ==
                  doctest::Approx(r1.momentumEntropy + std::log2(a)).epsilon(1e-6));
            CHECK(std::abs(r2.strong.slack - r1.strong.slack) < 1e-6);
        }
    }
}

TEST_CASE("coarse-grained ITUR") {
    const GriddedWaveFunction psi = ground_state(1.0, 16.0, 1 << 12);

    const BoundReport fine = coarse_itur_check(psi, 0.0, psi.cell() * 4.0);
    CHECK(fine.holds);
    CHECK(fine.slack >= 0.0);

    // Mesh halving approaches the continuum weak-bound slack (the mesh
    // terms cancel against the bound): slack -> lhs_cont - log2(2 pi hbar).
    const ContinuousIturReport cont = check_continuous_itur(psi, 0.0);
    double prev_gap = kInf;
    for (const Eigen::Index m : {8, 4, 2}) {
        const BoundReport rep = coarse_itur_check(psi, 0.0, psi.cell() * double(m));
        const double gap = std::abs(rep.slack - cont.weak.slack);
        CHECK(gap < prev_gap + 1e-12);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.05);

    // Single-cell meshes: both distributions collapse to one outcome.
    const BoundReport onecell =
        coarse_itur_check(psi, 0.0, psi.cell() * double(psi.size()));
    CHECK(onecell.lhs == doctest::Approx(0.0));
    CHECK(onecell.bound <= 0.0);
    CHECK(onecell.holds);
}

TEST_CASE("entropy power product") {
    const double hbar = 1.0;
    const GriddedWaveFunction psi = ground_state(hbar, 14.0, 1 << 13);
    // Gaussians saturate hbar^2/4 at every order.
    for (const double t : {0.0, 0.5, 2.0}) {
        CHECK(entropy_power_product(psi, t) ==
              doctest::Approx(hbar * hbar / 4.0).epsilon(1e-6));
    }

    const GriddedWaveFunction packet =
        gaussian_wave_packet(0.3, 1.4, 0.7, hbar, -24.0, 24.0, 1 << 12);
    CHECK(entropy_power_product(packet, 0.4) >= hbar * hbar / 4.0 - 1e-9);
}

TEST_CASE("heavy-tail gap inequality") {
    // Any density gives equal (zero) gaps at p = q = 2.
    const GriddedDensity g = gaussian_density(0.0, 1.0, -12.0, 12.0, 1 << 11);
    const HeavyTailGap base = heavy_tail_gap(g, g, 2.0);
    CHECK(base.lhsGap == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(base.rhsGap == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(base.improves);

    // Cauchy position vs K0^2 momentum: improvement grows with p and is
    // scale-free.
    const auto [fx1, fp1] = cauchy_pdfs(CauchyParams{1.0, 0.0, 1.0});
    double prev_delta = -kInf;
    for (const double p : {4.0, 8.0, 32.0, kInf}) {
        const HeavyTailGap gap = heavy_tail_gap(fx1, fp1, p);
        CHECK(gap.improves);
        const double delta = gap.lhsGap - gap.rhsGap;
        CHECK(delta > prev_delta - 1e-9);
        prev_delta = delta;
    }
    const auto [fx2, fp2] = cauchy_pdfs(CauchyParams{3.7, 0.0, 1.0});
    const HeavyTailGap gap1 = heavy_tail_gap(fx1, fp1, 8.0);
    const HeavyTailGap gap2 = heavy_tail_gap(fx2, fp2, 8.0);
    CHECK(std::abs((gap1.lhsGap - gap1.rhsGap) - (gap2.lhsGap - gap2.rhsGap)) <
          1e-3);
}
