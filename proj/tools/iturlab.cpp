// iturlab: entropies, entropy powers and uncertainty-relation checks for
// discrete and gridded distributions, with the two-level, Cauchy and
// cat-state case studies wired up as reproducible commands.

#include <CLI11.hpp>
#include <json.hpp>

#include <cfenv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "iturlab/core.hpp"
#include "iturlab/densities.hpp"
#include "iturlab/epi.hpp"
#include "iturlab/examples.hpp"
#include "iturlab/io.hpp"
#include "iturlab/itur_continuous.hpp"
#include "iturlab/itur_discrete.hpp"
#include "iturlab/matgeo.hpp"
#include "iturlab/renyi.hpp"

using nlohmann::json;
using namespace iturlab;

namespace {

// Exit codes, also listed in --help:
//   0 every requested check holds   1 an inequality check is violated
//   2 unparsable input              3 argument outside its domain
//   4 numerical failure             5 I/O or internal error
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitInternal = 5;

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // "csv" or "json"

    void write(const std::string& csv, const json& j) const {
        std::ostringstream body;
        if (format == "json") {
            body << j.dump(2) << '\n';
        } else {
            body << csv;
        }
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path);
            if (!out) throw ParseError(path + ": cannot open for writing");
            out << body.str();
        }
    }
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", out.path, "Write to this file instead of stdout");
}

int thread_budget() {
    if (const char* env = std::getenv("ITURLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

/// Index-sliced parallel map; results land in caller-indexed slots so the
/// output is identical for any thread count.
template <typename Fn>
void parallel_for(Eigen::Index count, Fn&& fn) {
    const int threads = std::min<Eigen::Index>(thread_budget(), count);
    if (threads <= 1) {
        for (Eigen::Index i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (Eigen::Index i = t; i < count; i += threads) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

Eigen::ArrayXd parse_prob_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            values.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw ParseError("cannot parse probability '" + field + "'");
        }
    }
    if (values.empty()) throw ParseError("empty probability list");
    return Eigen::Map<Eigen::ArrayXd>(values.data(), Eigen::Index(values.size()));
}

void check_grid_points(Eigen::Index n) {
    if (n < (1 << 10) || n > (1 << 20) || (n & (n - 1)) != 0) {
        throw DomainError("--grid-points must be a power of two in [2^10, 2^20]");
    }
}

double parse_order(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity") return kInf;
    try {
        return std::stod(text);
    } catch (const std::exception&) {
        throw ParseError("cannot parse order '" + text + "'");
    }
}

GriddedWaveFunction wavefunction_input(const std::string& file, double sigma,
                                       double hbar, Eigen::Index grid_points) {
    if (!file.empty()) return load_wavefunction(file, hbar);
    const double width = 16.0 * std::max(sigma, std::sqrt(0.5 * hbar) / sigma);
    return gaussian_wave_packet(0.0, sigma, 0.0, hbar, -width, width,
                                grid_points);
}

double round_half_even(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::nearbyint(x * scale) / scale;
}

json bound_report_json(const BoundReport& rep) {
    return json{{"lhs", rep.lhs},
                {"bound", rep.bound},
                {"slack", rep.slack},
                {"holds", rep.holds},
                {"saturated", rep.saturated}};
}

std::string csv_row(std::initializer_list<double> values) {
    std::string row;
    for (const double v : values) {
        if (!row.empty()) row += ',';
        row += format_number(v);
    }
    row += '\n';
    return row;
}

// ---------------------------------------------------------------- entropy

int run_entropy(const std::string& dist, const std::string& density_file,
                const std::string& wavefunction_file, const std::string& alpha_text,
                double hbar, bool relative_volume, bool nats, const Output& out) {
    const double alpha = parse_order(alpha_text);
    double bits = 0.0;
    if (!dist.empty()) {
        bits = renyi_discrete(validate_distribution(parse_prob_list(dist)),
                              RenyiOrder(alpha));
    } else if (!density_file.empty()) {
        const GriddedDensity f = load_density(density_file);
        bits = relative_volume ? renyi_relative_volume(f, RenyiOrder(alpha))
                               : renyi_differential(f, RenyiOrder(alpha));
    } else if (!wavefunction_file.empty()) {
        const GriddedDensity f =
            load_wavefunction(wavefunction_file, hbar).density();
        bits = relative_volume ? renyi_relative_volume(f, RenyiOrder(alpha))
                               : renyi_differential(f, RenyiOrder(alpha));
    } else {
        throw ParseError("entropy: provide --dist, --density or --wavefunction");
    }
    const double value = nats ? nats_from_bits(bits) : bits;
    out.write(format_number(value) + "\n",
              json{{"alpha", alpha}, {"entropy", value},
                   {"unit", nats ? "nats" : "bits"}});
    return kExitOk;
}

// -------------------------------------------------------------------- epi

int run_epi(const std::string& f1_file, const std::string& f2_file,
            const std::string& sigmas, double lambda, double r,
            Eigen::Index grid_points, const Output& out) {
    check_grid_points(grid_points);
    std::optional<GriddedDensity> f1, f2;
    if (!sigmas.empty()) {
        const Eigen::ArrayXd s = parse_prob_list(sigmas);
        if (s.size() != 2) throw ParseError("--gaussians needs two sigmas");
        const double w = 16.0 * std::max(s[0], s[1]);
        f1 = gaussian_density(0.0, s[0], -w, w, grid_points);
        f2 = gaussian_density(0.0, s[1], -w, w, grid_points);
    } else if (!f1_file.empty() && !f2_file.empty()) {
        f1 = load_density(f1_file);
        f2 = load_density(f2_file);
    } else {
        throw ParseError("epi: provide --f1/--f2 or --gaussians");
    }
    if (lambda <= 0.0) {
        const double n1 = renyi_entropy_power(*f1, 1.0);
        const double n2 = renyi_entropy_power(*f2, 1.0);
        lambda = optimal_lambda(n1, n2);
    }
    const EpiReport rep = check_generalized_epi(*f1, *f2, lambda, r);
    out.write("lhsPower,rhsPower,lambda,holds\n" +
                  format_number(rep.lhsPower) + ',' + format_number(rep.rhsPower) +
                  ',' + format_number(rep.lambda) + ',' +
                  (rep.holds ? "1" : "0") + "\n",
              json{{"lhsPower", rep.lhsPower},
                   {"rhsPower", rep.rhsPower},
                   {"lambda", rep.lambda},
                   {"holds", rep.holds}});
    return rep.holds ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- matgeo

int run_matgeo(const std::string& matrix_file, double alpha, double beta,
               const Output& out) {
    const TransformMatrix a = load_matrix(matrix_file);
    const double c = overlap_bound_c(a);
    const double bound = itur_bound(c);
    if (c > 1.0) {
        std::cerr << "warning: c = " << format_number(c)
                  << " > 1, the bound is negative (not a genuine "
                     "uncertainty relation)\n";
    }
    json j{{"c", c},
           {"bound_bits", bound},
           {"unitarity_defect", a.unitarity_defect()}};
    std::string csv = "quantity,value\nc," + format_number(c) +
                      "\nbound_bits," + format_number(bound) +
                      "\nunitarity_defect," + format_number(a.unitarity_defect()) +
                      "\n";
    if (a.rows() == a.cols()) {
        const double norm = mixed_norm(a, alpha, beta);
        j["norm"] = norm;
        csv += "norm," + format_number(norm) + "\n";
        try {
            const double kappa = condition_number(a, alpha, beta);
            const double dist = distance_to_singularity(a, alpha, beta);
            j["kappa"] = kappa;
            j["dist"] = dist;
            csv += "kappa," + format_number(kappa) + "\ndist," +
                   format_number(dist) + "\n";
        } catch (const UnsupportedNormPairError&) {
            // norm pair valid one-way only; kappa/dist not defined here
        }
    }
    out.write(csv, j);
    return kExitOk;
}

// ---------------------------------------------------------- itur-discrete

int run_itur_discrete(const std::string& p_text, const std::string& q_text,
                      double r, double c, const std::string& matrix_file,
                      double tolerance, const Output& out) {
    if (!matrix_file.empty()) c = overlap_bound_c(load_matrix(matrix_file));
    if (c > 1.0) {
        std::cerr << "warning: c = " << format_number(c)
                  << " > 1, the bound is negative (not a genuine "
                     "uncertainty relation)\n";
    }
    const DiscreteDistribution p = validate_distribution(parse_prob_list(p_text));
    const DiscreteDistribution q = validate_distribution(parse_prob_list(q_text));
    const BoundReport rep = check_renyi_itur(p, q, r, c, tolerance);
    out.write("lhs_bits,bound_bits,slack_bits,holds,saturated\n" +
                  format_number(rep.lhs) + ',' + format_number(rep.bound) + ',' +
                  format_number(rep.slack) + ',' + (rep.holds ? "1" : "0") +
                  ',' + (rep.saturated ? "1" : "0") + "\n",
              bound_report_json(rep));
    return rep.holds ? kExitOk : kExitViolation;
}

// -------------------------------------------------------- itur-continuous

std::string continuous_csv_header() {
    return "t,r,lhs_bits,strong_bound_bits,weak_bound_bits,slack_bits\n";
}

std::string continuous_csv_row(const ContinuousIturReport& rep) {
    return csv_row({rep.t, rep.r, rep.strong.lhs, rep.strong.bound,
                    rep.weak.bound, rep.strong.slack});
}

json continuous_json(const ContinuousIturReport& rep) {
    return json{{"t", rep.t},
                {"r", rep.r},
                {"position_entropy_bits", rep.positionEntropy},
                {"momentum_entropy_bits", rep.momentumEntropy},
                {"strong", bound_report_json(rep.strong)},
                {"weak", bound_report_json(rep.weak)}};
}

int run_itur_continuous(const std::string& wavefunction_file, double sigma,
                        double hbar, const std::string& t_text,
                        Eigen::Index grid_points, double tolerance,
                        double tail_tol, const Output& out) {
    check_grid_points(grid_points);
    const double t = parse_order(t_text);
    const GriddedWaveFunction psi =
        wavefunction_input(wavefunction_file, sigma, hbar, grid_points);
    const ContinuousIturReport rep =
        check_continuous_itur(psi, t, tolerance, tail_tol);
    out.write(continuous_csv_header() + continuous_csv_row(rep),
              continuous_json(rep));
    return rep.strong.holds ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ sweep

int run_sweep(const std::string& wavefunction_file, double sigma, double hbar,
              double t_min, double t_max, Eigen::Index points,
              Eigen::Index grid_points, double tolerance, double tail_tol,
              const Output& out) {
    check_grid_points(grid_points);
    if (points < 2) throw DomainError("sweep: needs at least 2 points");
    if (!(t_min >= -0.5) || !(t_max > t_min)) {
        throw DomainError("sweep: require -0.5 <= t-min < t-max");
    }
    const GriddedWaveFunction psi =
        wavefunction_input(wavefunction_file, sigma, hbar, grid_points);
    std::vector<ContinuousIturReport> reports(static_cast<size_t>(points));
    parallel_for(points, [&](Eigen::Index i) {
        const double t = t_min + (t_max - t_min) * double(i) / double(points - 1);
        reports[size_t(i)] = check_continuous_itur(psi, t, tolerance, tail_tol);
    });
    std::string csv = continuous_csv_header();
    json rows = json::array();
    bool all_hold = true;
    for (const ContinuousIturReport& rep : reports) {
        csv += continuous_csv_row(rep);
        rows.push_back(continuous_json(rep));
        all_hold = all_hold && rep.strong.holds;
    }
    out.write(csv, rows);
    return all_hold ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- table1

int run_table1(const Output& out) {
    const auto rows = table1();
    std::string csv = "p,vur_lo,vur_hi,s_lo,s_hi,r_lo,r_hi\n";
    json jrows = json::array();
    for (const Table1Row& row : rows) {
        const double values[7] = {row.p,
                                  round_half_even(row.vur.lo, 3),
                                  round_half_even(row.vur.hi, 3),
                                  round_half_even(row.shannon.lo, 3),
                                  round_half_even(row.shannon.hi, 3),
                                  round_half_even(row.renyi.lo, 3),
                                  round_half_even(row.renyi.hi, 3)};
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.1f,%.3f,%.3f,%.3f,%.3f,%.3f,%.3f\n",
                      values[0], values[1], values[2], values[3], values[4],
                      values[5], values[6]);
        csv += buf;
        jrows.push_back(json{{"p", values[0]},
                             {"vur", {values[1], values[2]}},
                             {"shannon", {values[3], values[4]}},
                             {"renyi", {values[5], values[6]}}});
    }
    out.write(csv, jrows);
    return kExitOk;
}

// ---------------------------------------------------------------- example

int run_example_cat(double beta_min, double beta_max, Eigen::Index beta_points,
                    Eigen::Index grid_points, double tolerance, const Output& out) {
    check_grid_points(grid_points);
    if (beta_points < 1) throw DomainError("cat: needs at least one beta");
    Eigen::ArrayXd betas;
    if (beta_points == 1) {
        betas = Eigen::ArrayXd::Constant(1, beta_min);
    } else {
        betas = Eigen::ArrayXd::LinSpaced(beta_points, beta_min, beta_max);
    }
    std::vector<CatCurvePoint> rows(size_t(betas.size()));
    parallel_for(betas.size(), [&](Eigen::Index i) {
        Eigen::ArrayXd one(1);
        one << betas[i];
        rows[size_t(i)] = cat_itur_curves(one, grid_points).front();
    });
    std::string csv =
        "beta,shannon_sum,shannon_bound,renyi_iii,renyi_iv,renyi_bound\n";
    json jrows = json::array();
    bool all_hold = true;
    for (const CatCurvePoint& row : rows) {
        csv += csv_row({row.beta, row.shannon_sum, row.shannon_bound,
                        row.renyi_iii, row.renyi_iv, row.renyi_bound});
        jrows.push_back(json{{"beta", row.beta},
                             {"shannon_sum", row.shannon_sum},
                             {"shannon_bound", row.shannon_bound},
                             {"renyi_iii", row.renyi_iii},
                             {"renyi_iv", row.renyi_iv},
                             {"renyi_bound", row.renyi_bound}});
        all_hold = all_hold && row.shannon_sum >= row.shannon_bound - tolerance &&
                   row.renyi_iii >= row.renyi_bound - tolerance &&
                   row.renyi_iv >= row.renyi_bound - tolerance;
    }
    out.write(csv, jrows);
    return all_hold ? kExitOk : kExitViolation;
}

int run_example_cauchy(double c, double m, double hbar, double cutoff_R,
                       const Output& out) {
    const CauchyParams params{c, m, hbar};
    const CauchyEntropies closed = cauchy_closed_entropies(params);
    const CauchyQuadEntropies quad = cauchy_quadrature_entropies(params);

    std::string csv = "R,ihalf_pos,iinf_mom,sum\n";
    json sweep = json::array();
    for (double scale = 1e2; scale <= 1e8 + 1.0; scale *= 10.0) {
        const CauchyRegulated reg = cauchy_regulated(params, RegulatorWindow{scale * c});
        csv += csv_row({scale * c, reg.Ihalf_pos, reg.Iinf_mom, reg.sum});
        sweep.push_back(json{{"R", scale * c},
                             {"ihalf_pos", reg.Ihalf_pos},
                             {"iinf_mom", reg.Iinf_mom},
                             {"sum", reg.sum}});
    }
    const CauchyRegulated at_cutoff =
        cauchy_regulated(params, RegulatorWindow{cutoff_R * c});
    const json j{
        {"closed",
         {{"Hpos", closed.Hpos},
          {"Hmom", closed.Hmom},
          {"Ihalf_mom", closed.Ihalf_mom},
          {"Iinf_pos", closed.Iinf_pos},
          {"shannon_sum", closed.shannon_sum()},
          {"renyi_sum", closed.renyi_sum()}}},
        {"quadrature",
         {{"Hpos", quad.Hpos},
          {"Hmom", quad.Hmom},
          {"Ihalf_mom", quad.Ihalf_mom},
          {"Iinf_pos", quad.Iinf_pos},
          {"recovered_constant", quad.recovered_constant}}},
        {"regulated_at_cutoff",
         {{"R", cutoff_R * c},
          {"ihalf_pos", at_cutoff.Ihalf_pos},
          {"iinf_mom", at_cutoff.Iinf_mom},
          {"sum", at_cutoff.sum}}},
        {"regulated_sweep", sweep}};
    out.write(csv, j);
    return kExitOk;
}

int run_example_levy(double c, double m, double p0, double hbar,
                     Eigen::Index grid_points, double tolerance,
                     const Output& out) {
    check_grid_points(grid_points);
    const GriddedWaveFunction psi =
        levy_smirnov_wavefunction(c, m, p0, hbar, 1e-6, 1e4, grid_points);
    bool variance_divergent = false;
    try {
        variance_entropy_chain(psi.density());
    } catch (const InfiniteVarianceError&) {
        variance_divergent = true;
    }
    const ContinuousIturReport rep =
        check_continuous_itur(psi, 0.0, tolerance, 1.0);
    std::string csv = continuous_csv_header() + continuous_csv_row(rep);
    json j = continuous_json(rep);
    j["l2_norm"] = psi.l2_norm();
    j["variance_divergent"] = variance_divergent;
    out.write(csv, j);
    return rep.strong.holds ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "iturlab: Renyi/Shannon entropies, entropy powers and "
        "information-theoretic uncertainty relations on discrete and "
        "gridded distributions.\n\n"
        "Exit codes: 0 all requested checks hold; 1 a check reported a "
        "violation; 2 unparsable input; 3 argument outside its domain; "
        "4 numerical failure (quadrature/grid/aliasing/divergence); "
        "5 I/O or internal error.\n"
        "ITURLAB_THREADS caps sweep parallelism (default: all cores)."};
    app.require_subcommand(1);

    // entropy ------------------------------------------------------------
    std::string en_dist, en_density, en_wavefunction, en_alpha = "1";
    bool en_relative = false, en_nats = false;
    double en_hbar = 1.0;
    Output en_out{"", "csv"};
    CLI::App* entropy = app.add_subcommand(
        "entropy", "Renyi entropy of a distribution, density or wavefunction");
    entropy->add_option("--dist", en_dist, "Inline probabilities, e.g. 0.8,0.2");
    entropy->add_option("--density", en_density, "Density CSV (header x,value)");
    entropy->add_option("--wavefunction", en_wavefunction,
                        "Wavefunction CSV (header x,re,im); uses |psi|^2");
    entropy->add_option("--alpha", en_alpha, "Renyi order in [0, inf]")
        ->capture_default_str();
    entropy->add_option("--hbar", en_hbar, "hbar for wavefunction input")->check(CLI::PositiveNumber)
        ->capture_default_str();
    entropy->add_flag("--relative-volume", en_relative,
                      "Subtract log2 of the grid volume");
    entropy->add_flag("--nats", en_nats, "Report nats instead of bits");
    add_output_options(entropy, en_out);

    // epi ------------------------------------------------------------------
    std::string epi_f1, epi_f2, epi_gaussians;
    double epi_lambda = 0.0, epi_r = 1.0;
    Eigen::Index epi_grid = 1 << 14;
    Output epi_out{"", "csv"};
    CLI::App* epi = app.add_subcommand(
        "epi", "Generalized entropy power inequality check");
    epi->add_option("--f1", epi_f1, "First density CSV");
    epi->add_option("--f2", epi_f2, "Second density CSV");
    epi->add_option("--gaussians", epi_gaussians,
                    "Two sigmas for built-in Gaussian inputs, e.g. 1,2");
    epi->add_option("--lambda", epi_lambda,
                    "Weight in (0,1); 0 = use the optimal weight");
    epi->add_option("--r", epi_r, "Order r >= 1")->capture_default_str();
    epi->add_option("--grid-points", epi_grid, "Grid size for built-in inputs")
        ->capture_default_str();
    add_output_options(epi, epi_out);

    // matgeo -----------------------------------------------------------------
    std::string mg_matrix;
    double mg_alpha = 2.0, mg_beta = 2.0;
    Output mg_out{"", "csv"};
    CLI::App* matgeo = app.add_subcommand(
        "matgeo", "Overlap constant, mixed norms, condition number");
    matgeo->add_option("--matrix", mg_matrix, "Matrix CSV (re or re+imj entries)")
        ->required();
    matgeo->add_option("--alpha", mg_alpha, "Mixed-norm alpha")
        ->capture_default_str();
    matgeo->add_option("--beta", mg_beta, "Mixed-norm beta")
        ->capture_default_str();
    add_output_options(matgeo, mg_out);

    // itur-discrete ---------------------------------------------------------
    std::string id_p, id_q, id_matrix;
    double id_r = 0.0, id_c = 1.0 / std::sqrt(2.0), id_tol = 1e-6;
    Output id_out{"", "csv"};
    CLI::App* discrete = app.add_subcommand(
        "itur-discrete", "Discrete Renyi ITUR check for two distributions");
    discrete->add_option("--p", id_p, "First distribution, e.g. 0.8,0.2")
        ->required();
    discrete->add_option("--q", id_q, "Second distribution")->required();
    discrete->add_option("--r", id_r, "Order parameter r in [-1/2, inf]")
        ->capture_default_str();
    discrete->add_option("--c", id_c, "Overlap constant")->capture_default_str();
    discrete->add_option("--matrix", id_matrix,
                         "Matrix CSV; use its max entry modulus as c");
    discrete->add_option("--tolerance", id_tol, "Saturation tolerance, bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(discrete, id_out);

    // itur-continuous -------------------------------------------------------
    std::string ic_wavefunction, ic_t = "0";
    double ic_sigma = 1.0, ic_hbar = 1.0, ic_tol = 1e-6, ic_tail = 1e-10;
    Eigen::Index ic_grid = 1 << 14;
    Output ic_out{"", "csv"};
    CLI::App* continuous = app.add_subcommand(
        "itur-continuous", "Continuous ITUR check for a wavefunction");
    continuous->add_option("--wavefunction", ic_wavefunction,
                           "Wavefunction CSV (header x,re,im)");
    continuous->add_option("--gaussian", ic_sigma,
                           "Built-in Gaussian packet with this sigma");
    continuous->add_option("--t", ic_t, "Parameter t in [-1/2, inf]")
        ->capture_default_str();
    continuous->add_option("--hbar", ic_hbar, "hbar convention")->check(CLI::PositiveNumber)
        ->capture_default_str();
    continuous->add_option("--grid-points", ic_grid, "Grid size")
        ->capture_default_str();
    continuous->add_option("--tolerance", ic_tol, "Check tolerance, bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    continuous->add_option("--tail-tolerance", ic_tail,
                           "Allowed mass outside the central 80% of the grid")
        ->capture_default_str();
    add_output_options(continuous, ic_out);

    // sweep -------------------------------------------------------------------
    std::string sw_wavefunction;
    double sw_sigma = 1.0, sw_hbar = 1.0, sw_tmin = -0.5, sw_tmax = 4.0,
           sw_tol = 1e-6, sw_tail = 1e-10;
    Eigen::Index sw_points = 20, sw_grid = 1 << 14;
    Output sw_out{"", "csv"};
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Continuous ITUR over a grid of t values");
    sweep->add_option("--wavefunction", sw_wavefunction, "Wavefunction CSV");
    sweep->add_option("--gaussian", sw_sigma, "Built-in Gaussian sigma");
    sweep->add_option("--t-min", sw_tmin, "Smallest t")->capture_default_str();
    sweep->add_option("--t-max", sw_tmax, "Largest t")->capture_default_str();
    sweep->add_option("--points", sw_points, "Number of t samples")
        ->capture_default_str();
    sweep->add_option("--hbar", sw_hbar, "hbar convention")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--grid-points", sw_grid, "Grid size")->capture_default_str();
    sweep->add_option("--tolerance", sw_tol, "Check tolerance, bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--tail-tolerance", sw_tail, "Aliasing guard tolerance")
        ->capture_default_str();
    add_output_options(sweep, sw_out);

    // table1 -----------------------------------------------------------------
    Output t1_out{"", "csv"};
    CLI::App* table = app.add_subcommand(
        "table1", "Two-level feasible-q table (VUR, Shannon, Renyi)");
    add_output_options(table, t1_out);

    // example ------------------------------------------------------------------
    CLI::App* example = app.add_subcommand("example", "Closed-form case studies");
    example->require_subcommand(1);

    double cat_beta_min = 0.0, cat_beta_max = 4.0, cat_tol = 1e-6;
    Eigen::Index cat_points = 40, cat_grid = 1 << 13;
    Output cat_out{"", "csv"};
    CLI::App* cat = example->add_subcommand(
        "cat", "Cat-state entropy curves over a beta grid");
    cat->add_option("--beta-min", cat_beta_min, "Smallest beta")
        ->capture_default_str();
    cat->add_option("--beta-max", cat_beta_max, "Largest beta")
        ->capture_default_str();
    cat->add_option("--beta-points", cat_points, "Number of beta samples")
        ->capture_default_str();
    cat->add_option("--grid-points", cat_grid, "Grid size per beta")
        ->capture_default_str();
    cat->add_option("--tolerance", cat_tol, "Bound-violation tolerance, bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(cat, cat_out);

    double cy_c = 1.0, cy_m = 0.0, cy_hbar = 1.0, cy_R = 1e6;
    Output cy_out{"", "csv"};
    CLI::App* cauchy = example->add_subcommand(
        "cauchy", "Cauchy-Lorentz pair: closed forms, quadrature, regulated sweep");
    cauchy->add_option("--c", cy_c, "Scale parameter")->capture_default_str();
    cauchy->add_option("--m", cy_m, "Location")->capture_default_str();
    cauchy->add_option("--hbar", cy_hbar, "hbar convention")->check(CLI::PositiveNumber)->capture_default_str();
    cauchy->add_option("--cutoff-R", cy_R, "Regulator cutoff in units of c")
        ->capture_default_str();
    add_output_options(cauchy, cy_out);

    double lv_c = 1.0, lv_m = 0.0, lv_p0 = 0.0, lv_hbar = 1.0, lv_tol = 1e-6;
    Eigen::Index lv_grid = 1 << 18;
    Output lv_out{"", "csv"};
    CLI::App* levy = example->add_subcommand(
        "levy", "Levy-Smirnov wavefunction checks");
    levy->add_option("--c", lv_c, "Scale parameter")->capture_default_str();
    levy->add_option("--m", lv_m, "Support edge")->capture_default_str();
    levy->add_option("--p0", lv_p0, "Momentum boost")->capture_default_str();
    levy->add_option("--hbar", lv_hbar, "hbar convention")->check(CLI::PositiveNumber)->capture_default_str();
    levy->add_option("--grid-points", lv_grid, "Grid size")->capture_default_str();
    levy->add_option("--tolerance", lv_tol, "Check tolerance, bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(levy, lv_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*entropy) {
            return run_entropy(en_dist, en_density, en_wavefunction, en_alpha,
                               en_hbar, en_relative, en_nats, en_out);
        }
        if (*epi) {
            return run_epi(epi_f1, epi_f2, epi_gaussians, epi_lambda, epi_r,
                           epi_grid, epi_out);
        }
        if (*matgeo) return run_matgeo(mg_matrix, mg_alpha, mg_beta, mg_out);
        if (*discrete) {
            return run_itur_discrete(id_p, id_q, id_r, id_c, id_matrix, id_tol,
                                     id_out);
        }
        if (*continuous) {
            return run_itur_continuous(ic_wavefunction, ic_sigma, ic_hbar, ic_t,
                                       ic_grid, ic_tol, ic_tail, ic_out);
        }
        if (*sweep) {
            return run_sweep(sw_wavefunction, sw_sigma, sw_hbar, sw_tmin,
                             sw_tmax, sw_points, sw_grid, sw_tol, sw_tail,
                             sw_out);
        }
        if (*table) return run_table1(t1_out);
        if (*example) {
            if (*cat) {
                return run_example_cat(cat_beta_min, cat_beta_max, cat_points,
                                       cat_grid, cat_tol, cat_out);
            }
            if (*cauchy) return run_example_cauchy(cy_c, cy_m, cy_hbar, cy_R, cy_out);
            if (*levy) {
                return run_example_levy(lv_c, lv_m, lv_p0, lv_hbar, lv_grid,
                                        lv_tol, lv_out);
            }
        }
        std::cerr << "no subcommand selected\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
