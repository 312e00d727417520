#include "iturlab/examples.hpp"

#include <cmath>
#include <complex>
#include <functional>

#include "iturlab/quadrature.hpp"
#include "iturlab/renyi.hpp"

namespace iturlab {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

/// Small-argument series: K0 = -(ln(x/2) + gamma) I0(x) + sum_k t_k H_k
/// with t_k = (x^2/4)^k / (k!)^2.
double k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, i0 = 1.0, sum = 0.0, harmonic = 0.0;
    for (int k = 1; k < 40; ++k) {
        term *= q / (double(k) * double(k));
        harmonic += 1.0 / double(k);
        i0 += term;
        sum += term * harmonic;
        if (term * (harmonic + 1.0) < 1e-18 * (i0 + sum)) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
}

/// Exponentially scaled integral representation
///   K0(x) = (2 e^-x / sqrt x) int_0^inf e^{-w^2} (w^2/x + 2)^{-1/2} dw,
/// integrand analytic and effectively supported on [0, 7.5].
double k0_integral(double x) {
    static constexpr int kNodes = 80;
    Eigen::ArrayXd nodes, weights;
    gauss_legendre(kNodes, nodes, weights);
    const double upper = 7.5;
    double acc = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double w = upper * nodes[i];
        acc += weights[i] * std::exp(-w * w) / std::sqrt(w * w / x + 2.0);
    }
    return 2.0 * std::exp(-x) / std::sqrt(x) * upper * acc;
}

} // namespace

double bessel_k0(double x) {
    if (std::isnan(x) || !(x > 0.0)) {
        throw DomainError("bessel_k0: argument must be positive");
    }
    return x <= 2.0 ? k0_series(x) : k0_integral(x);
}

namespace {

GriddedDensity renormalized(double lo, double hi, Eigen::ArrayXd values) {
    const double cell = (hi - lo) / double(values.size());
    values /= cell_quadrature(values, cell);
    return GriddedDensity(lo, hi, std::move(values));
}

/// Integral of f over [a, b] in the variable v = ln u; turns the
/// logarithmic singularities of the K0 family into smooth integrands.
double integrate_log_sub(const std::function<double(double)>& f, double a,
                         double b, double tol) {
    return integrate_adaptive(
        [&f](double v) {
            const double u = std::exp(v);
            return f(u) * u;
        },
        std::log(a), std::log(b), tol);
}

} // namespace

std::pair<GriddedDensity, GriddedDensity> cauchy_pdfs(const CauchyParams& params,
                                                      const CauchyGrid& grid) {
    const double c = params.c, m = params.m, hbar = params.hbar;
    if (!(c > 0.0)) throw DomainError("cauchy_pdfs: scale c must be positive");
    if (!(hbar > 0.0)) throw DomainError("cauchy_pdfs: hbar must be positive");
    if (2.0 * grid.pos_half_width_over_c < 1e4) {
        throw TailMassError(
            "cauchy_pdfs: position grid narrower than 1e4 c; heavy tail "
            "would be misrepresented");
    }
    const double xw = grid.pos_half_width_over_c * c;
    Eigen::ArrayXd pos(grid.n_pos);
    const double lx = 2.0 * xw / double(grid.n_pos);
    for (Eigen::Index k = 0; k < grid.n_pos; ++k) {
        const double x = -xw + (double(k) + 0.5) * lx;
        pos[k] = (c / M_PI) / (c * c + x * x);
    }
    GriddedDensity fpos =
        renormalized(m - xw, m + xw, std::move(pos)).with_analytic_peak(
            1.0 / (M_PI * c));

    const double pw = grid.mom_half_width_c_over_hbar * hbar / c;
    Eigen::ArrayXd mom(grid.n_mom);
    const double lp = 2.0 * pw / double(grid.n_mom);
    const double amp = 2.0 * c / (M_PI * M_PI * hbar);
    for (Eigen::Index k = 0; k < grid.n_mom; ++k) {
        const double p = -pw + (double(k) + 0.5) * lp;
        const double k0 = bessel_k0(c * std::abs(p) / hbar);
        mom[k] = amp * k0 * k0;
    }
    // Analytic patch over the two cells flanking the logarithmic
    // singularity at p = 0 (an even cell count puts the cell edges, not
    // midpoints, on it): store the cell average of K0^2 instead of the
    // midpoint value, from the leading-log antiderivative
    // int_0^d K0^2 ~ d (g^2 + 2g + 2), g = -ln(d/2) - gamma.
    if (grid.n_mom % 2 == 0 && grid.n_mom >= 2) {
        const double du = c * lp / hbar;  // cell width in u = c p / hbar
        const double g = -std::log(0.5 * du) - kEulerGamma;
        const double avg = amp * (g * g + 2.0 * g + 2.0);
        mom[grid.n_mom / 2] = avg;
        mom[grid.n_mom / 2 - 1] = avg;
    }
    GriddedDensity fmom = renormalized(-pw, pw, std::move(mom));
    return {std::move(fpos), std::move(fmom)};
}

CauchyEntropies cauchy_closed_entropies(const CauchyParams& params) {
    const double c = params.c, hbar = params.hbar;
    if (!(c > 0.0) || !(hbar > 0.0)) {
        throw DomainError("cauchy_closed_entropies: c, hbar must be positive");
    }
    CauchyEntropies e;
    e.Hpos = std::log2(4.0 * M_PI * c);
    e.Hmom = std::log2(M_PI * M_PI * hbar / (2.0 * c)) -
             (8.0 / (M_PI * M_PI)) * kK0SqLog2K0Integral;
    e.Ihalf_mom = std::log2(2.0 * hbar / c);
    e.Iinf_pos = std::log2(M_PI * c);
    return e;
}

CauchyQuadEntropies cauchy_quadrature_entropies(const CauchyParams& params) {
    const double c = params.c, hbar = params.hbar;
    if (!(c > 0.0) || !(hbar > 0.0)) {
        throw DomainError("cauchy_quadrature_entropies: c, hbar positive");
    }
    CauchyQuadEntropies e;

    // Position side: F(x) = (c/pi)/(c^2 + x^2). Plain adaptive Simpson on
    // [0, c], log-substituted out to 1e10 c (the remainder beyond that is
    // ~1e-9 bits), everything doubled by symmetry.
    auto fpos = [c](double x) { return (c / M_PI) / (c * c + x * x); };
    auto h_integrand = [&fpos](double x) {
        const double f = fpos(x);
        return f > 0.0 ? -f * std::log2(f) : 0.0;
    };
    e.Hpos = 2.0 * (integrate_adaptive(h_integrand, 0.0, c, 1e-13) +
                    integrate_log_sub(h_integrand, c, 1e10 * c, 1e-13));
    e.Iinf_pos = -std::log2(fpos(0.0));

    // Momentum side in the scaled variable u = c p / hbar:
    // F(p) dp = (2/pi^2) K0^2(u) du. The K0 log singularity at u = 0 is
    // integrable; integrate [delta, 2] in the log variable, [2, 60]
    // directly, and patch [0, delta] with the leading-log antiderivatives.
    const double delta = 1e-12;
    const double big = 60.0;
    const double pref = 2.0 / (M_PI * M_PI);
    const double logmom = std::log2(pref * c / hbar);  // log2 F = logmom + 2 log2 K0

    const double gl = -std::log(0.5 * delta) - kEulerGamma;  // K0(u) ~ gl near 0
    // int_0^delta K0 ~ delta (gl + 1); int_0^delta K0^2 ~ delta (gl^2 + 2 gl + 2).
    const double patch_k0 = delta * (gl + 1.0);
    const double patch_k0sq = delta * (gl * gl + 2.0 * gl + 2.0);

    auto split_integral = [&](const std::function<double(double)>& f) {
        return integrate_log_sub(f, delta, 2.0, 1e-13) +
               integrate_adaptive(f, 2.0, big, 1e-13);
    };
    const double int_k0 =
        split_integral([](double u) { return bessel_k0(u); }) + patch_k0;
    const double int_k0sq = split_integral([](double u) {
        const double k = bessel_k0(u);
        return k * k;
    }) + patch_k0sq;
    const double int_k0sq_log2k0 = split_integral([](double u) {
        const double k = bessel_k0(u);
        return k * k * std::log2(k);
    });

    // ||sqrt F||_1 = 2 sqrt(pref c/hbar) (hbar/c) int K0, and
    // I_1/2 = 2 log2 of it.
    e.Ihalf_mom = 2.0 * std::log2(2.0 * std::sqrt(pref * c / hbar) *
                                  (hbar / c) * int_k0);
    // H = -int F log2 F = -(2 hbar/c) pref (c/hbar)
    //       [ logmom int K0^2 + 2 int K0^2 log2 K0 ].
    e.Hmom = -2.0 * pref * (logmom * int_k0sq + 2.0 * int_k0sq_log2k0);

    // Invert Hmom = log2(pi^2 hbar/2c) - (8/pi^2) * constant.
    e.recovered_constant =
        (std::log2(M_PI * M_PI * hbar / (2.0 * c)) - e.Hmom) * M_PI * M_PI / 8.0;
    return e;
}

CauchyRegulated cauchy_regulated(const CauchyParams& params,
                                 const RegulatorWindow& window) {
    const double c = params.c, hbar = params.hbar, R = window.R;
    if (!(c > 0.0) || !(hbar > 0.0)) {
        throw DomainError("cauchy_regulated: c, hbar must be positive");
    }
    if (!(R > c)) {
        throw DomainError("cauchy_regulated: cutoff R must exceed the scale c");
    }
    CauchyRegulated reg;
    reg.Ihalf_pos =
        2.0 * std::log2(std::sqrt(c / M_PI) * std::log(4.0 * R * R / (c * c)));
    const double k0 = bessel_k0(c / R);
    reg.Iinf_mom = -std::log2(2.0 * c / (hbar * M_PI * M_PI) * k0 * k0);
    reg.sum = reg.Ihalf_pos + reg.Iinf_mom;
    return reg;
}

GriddedWaveFunction levy_smirnov_wavefunction(double c, double m, double p0,
                                              double hbar,
                                              double lo_offset_over_c,
                                              double hi_offset_over_c,
                                              Eigen::Index n) {
    if (!(c > 0.0)) throw DomainError("levy_smirnov_wavefunction: c <= 0");
    if (!(hbar > 0.0)) throw DomainError("levy_smirnov_wavefunction: hbar <= 0");
    const double lo = m + lo_offset_over_c * c;
    const double hi = m + hi_offset_over_c * c;
    if (!(lo > m)) {
        throw SupportError(
            "levy_smirnov_wavefunction: grid reaches the support edge x = m");
    }
    const double cell = (hi - lo) / double(n);
    const double norm = std::pow(c / (2.0 * M_PI), 0.25);
    Eigen::ArrayXcd amp(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = lo + (double(k) + 0.5) * cell;
        const double u = x - m;
        const double mag = norm * std::exp(-0.25 * c / u) / std::pow(u, 0.75);
        amp[k] = std::polar(mag, p0 * x / hbar);
    }
    const double l2 = std::sqrt(cell_quadrature(amp.abs2(), cell));
    amp /= l2;
    return GriddedWaveFunction(lo, hi, std::move(amp), hbar);
}

double CatParams::normalization() const {
    if (sign != +1 && sign != -1) throw DomainError("CatParams: sign is +1 or -1");
    const double denom = 2.0 * (1.0 + double(sign) * std::exp(-2.0 * beta * beta));
    if (!(denom > 0.0)) {
        throw DomainError("CatParams: odd superposition vanishes at beta = 0");
    }
    return 1.0 / std::sqrt(denom);
}

std::pair<GriddedDensity, GriddedDensity> cat_pdfs(const CatParams& params,
                                                   Eigen::Index n) {
    if (params.sign != +1) {
        throw DomainError("cat_pdfs: only the even (+) superposition is modeled");
    }
    const double beta = params.beta;
    const double nb = params.normalization();
    const double w = std::max(8.0, std::sqrt(2.0) * std::abs(beta) + 8.0);
    const double cell = 2.0 * w / double(n);
    const double pref = 2.0 * nb * std::pow(M_PI, -0.25);
    Eigen::ArrayXd f0(n), fq(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = -w + (double(k) + 0.5) * cell;
        // cosh(sqrt2 beta x) e^{-x^2/2 - beta^2} written tail-safely as a
        // sum of two displaced Gaussians.
        const double a = std::sqrt(2.0) * beta;
        const double g0 = 0.5 * pref *
                          (std::exp(-0.5 * (x - a) * (x - a)) +
                           std::exp(-0.5 * (x + a) * (x + a)));
        const double gq = pref * std::cos(a * x) * std::exp(-0.5 * x * x);
        f0[k] = g0 * g0;
        fq[k] = gq * gq;
    }
    return {renormalized(-w, w, std::move(f0)), renormalized(-w, w, std::move(fq))};
}

CatVariances cat_variances(const CatParams& params) {
    const double beta = params.beta;
    const double nb2 = params.normalization() * params.normalization();
    const double e2 = std::exp(-2.0 * beta * beta);
    CatVariances v;
    v.var_x0 = nb2 * (1.0 + e2 + 4.0 * beta * beta);
    v.var_xq = nb2 * (1.0 + e2 * (1.0 - 4.0 * beta * beta));
    return v;
}

std::vector<CatCurvePoint> cat_itur_curves(const Eigen::ArrayXd& betas,
                                           Eigen::Index n) {
    std::vector<CatCurvePoint> rows(size_t(betas.size()));
    for (Eigen::Index i = 0; i < betas.size(); ++i) {
        const CatParams params{betas[i], +1};
        const auto [f0, fq] = cat_pdfs(params, n);
        CatCurvePoint& row = rows[size_t(i)];
        row.beta = betas[i];
        row.shannon_sum = renyi_differential(f0, RenyiOrder(1.0)) +
                          renyi_differential(fq, RenyiOrder(1.0));
        row.shannon_bound = std::log2(M_E * M_PI);
        row.renyi_iii = renyi_differential(fq, RenyiOrder(0.5)) +
                        renyi_differential(f0, RenyiOrder(kInf));
        row.renyi_iv = renyi_differential(f0, RenyiOrder(0.5)) +
                       renyi_differential(fq, RenyiOrder(kInf));
        row.renyi_bound = std::log2(2.0 * M_PI);
    }
    return rows;
}

Eigen::ArrayXd default_beta_grid() {
    return Eigen::ArrayXd::LinSpaced(40, 0.0, 4.0);
}

} // namespace iturlab
