#include <doctest.h>

#include <random>

#include "iturlab/core.hpp"
#include "iturlab/matgeo.hpp"
#include "oracle_helpers.hpp"

using namespace iturlab;

namespace {

TransformMatrix spin_basis_change() {
    Eigen::MatrixXcd m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, -s, s;
    return TransformMatrix(m);
}

} // namespace

TEST_CASE("mixed norms on reference matrices") {
    const TransformMatrix eye(Eigen::MatrixXcd::Identity(3, 3));
    CHECK(mixed_norm(eye, 1.0, kInf) == 1.0);
    CHECK(mixed_norm(eye, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mixed_norm(eye, 1.0, 1.0) == 1.0);
    CHECK(mixed_norm(eye, kInf, kInf) == 1.0);

    const TransformMatrix spin = spin_basis_change();
    CHECK(mixed_norm(spin, 1.0, kInf) == 1.0 / std::sqrt(2.0));
    CHECK(mixed_norm(spin, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spin.unitarity_defect() < 1e-15);

    CHECK_THROWS_AS(mixed_norm(eye, 3.0, 2.0), UnsupportedNormPairError);
    CHECK_THROWS_AS(mixed_norm(eye, 2.0, 1.0), UnsupportedNormPairError);
}

TEST_CASE("(1,inf) norm agrees with entry scan and dominates unit-vector probes") {
    std::mt19937 rng(41);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::MatrixXcd m = oracle::random_matrix(rng, 4);
        const TransformMatrix a(m);
        const double c = mixed_norm(a, 1.0, kInf);
        CHECK(c == doctest::Approx(m.cwiseAbs().maxCoeff()).epsilon(1e-14));
        // ||Ax||_inf / ||x||_1 over random probes can only lie below c.
        for (int probe = 0; probe < 8; ++probe) {
            Eigen::VectorXcd x(4);
            for (int i = 0; i < 4; ++i) x[i] = {gauss(rng), gauss(rng)};
            const double ratio =
                (m * x).cwiseAbs().maxCoeff() / x.cwiseAbs().sum();
            CHECK(ratio <= c * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("condition number and distance to singularity") {
    const TransformMatrix eye(Eigen::MatrixXcd::Identity(2, 2));
    CHECK(condition_number(eye, 2.0, 2.0) == doctest::Approx(1.0));
    CHECK(distance_to_singularity(eye, 2.0, 2.0) == doctest::Approx(1.0));

    Eigen::MatrixXcd d(2, 2);
    d << 2.0, 0.0, 0.0, 1.0;
    const TransformMatrix diag(d);
    CHECK(condition_number(diag, 2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(distance_to_singularity(diag, 2.0, 2.0) ==
          doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(condition_number(diag, 1.0, kInf), UnsupportedNormPairError);
    Eigen::MatrixXcd sing(2, 2);
    sing << 1.0, 1.0, 1.0, 1.0;
    CHECK_THROWS_AS(condition_number(TransformMatrix(sing), 2.0, 2.0),
                    SingularMatrixError);
}

TEST_CASE("kappa >= 1 and dist * kappa = norm over random matrices") {
    std::mt19937 rng(43);
    const double pairs[][2] = {{1.0, 1.0}, {2.0, 2.0}, {kInf, kInf}};
    for (int trial = 0; trial < 1000; ++trial) {
        const TransformMatrix a(oracle::random_matrix(rng, 3));
        for (const auto& pair : pairs) {
            const double kappa = condition_number(a, pair[0], pair[1]);
            CHECK(kappa >= 1.0 - 1e-12);
            const double norm = mixed_norm(a, pair[0], pair[1]);
            const double dist = distance_to_singularity(a, pair[0], pair[1]);
            CHECK(dist * kappa == doctest::Approx(norm).epsilon(1e-12));
        }
    }
}

TEST_CASE("constructive singular perturbation achieves the (2,2) distance") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXcd m = oracle::random_matrix(rng, 4);
        const TransformMatrix a(m);
        const double dist = distance_to_singularity(a, 2.0, 2.0);

        // Oracle from the saturating construction: remove the smallest
        // singular direction, Delta A = -sigma_min u_min v_min^*.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
            m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::Index last = svd.singularValues().size() - 1;
        const double smin = svd.singularValues()(last);
        const Eigen::MatrixXcd delta =
            -smin * svd.matrixU().col(last) * svd.matrixV().col(last).adjoint();

        CHECK(mixed_norm(TransformMatrix(delta), 2.0, 2.0) ==
              doctest::Approx(dist).epsilon(1e-10));
        Eigen::JacobiSVD<Eigen::MatrixXcd> perturbed(m + delta);
        const double smax = perturbed.singularValues()(0);
        CHECK(perturbed.singularValues()(last) <= 1e-12 * smax);
    }
}

TEST_CASE("overlap constant") {
    CHECK(overlap_bound_c(spin_basis_change()) == 1.0 / std::sqrt(2.0));
    CHECK(overlap_bound_c(TransformMatrix(Eigen::MatrixXcd::Identity(4, 4))) ==
          1.0);

    // Discrete-Fourier unitary: every modulus 1/sqrt(n).
    const int n = 8;
    Eigen::MatrixXcd f(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            f(j, k) = std::polar(1.0 / std::sqrt(double(n)),
                                 -2.0 * M_PI * j * k / double(n));
        }
    }
    const TransformMatrix dft(f);
    CHECK(dft.unitarity_defect() < 1e-13);
    CHECK(overlap_bound_c(dft) ==
          doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-14));

    // Unitaries keep c <= 1 and spectral norm 1.
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const TransformMatrix u(oracle::random_unitary(rng, 4));
        CHECK(overlap_bound_c(u) <= 1.0 + 1e-12);
        CHECK(mixed_norm(u, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}
