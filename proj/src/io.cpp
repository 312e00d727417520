#include "iturlab/io.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace iturlab {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? ""
                                                : field.substr(b, e - b + 1));
    }
    return fields;
}

double parse_double(const std::string& s, const std::string& path) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(path + ": cannot parse number '" + s + "'");
    }
}

std::complex<double> parse_complex(const std::string& s,
                                   const std::string& path) {
    if (s.empty()) throw ParseError(path + ": empty matrix entry");
    if (s.back() != 'j' && s.back() != 'J') {
        return {parse_double(s, path), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the sign that starts the imaginary coefficient (skipping a
    // leading sign and exponent signs).
    for (size_t i = body.size(); i-- > 1;) {
        const char ch = body[i];
        if ((ch == '+' || ch == '-') &&
            body[i - 1] != 'e' && body[i - 1] != 'E') {
            const std::string re = body.substr(0, i);
            std::string im = body.substr(i);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return {parse_double(re, path), parse_double(im, path)};
        }
    }
    // Pure imaginary, e.g. "2j" or "j".
    std::string im = body;
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {0.0, parse_double(im, path)};
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw ParseError(path + ": empty file");
    return rows;
}

/// Validate midpoint x-column uniformity and return (lo, hi).
std::pair<double, double> grid_range(const std::vector<double>& xs,
                                     const std::string& path) {
    if (xs.size() < 2) throw ParseError(path + ": need at least two samples");
    const double dx = xs[1] - xs[0];
    if (!(dx > 0.0)) throw ParseError(path + ": x column must increase");
    for (size_t i = 1; i < xs.size(); ++i) {
        const double step = xs[i] - xs[i - 1];
        if (std::abs(step - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
            throw ParseError(path + ": non-uniform grid spacing at row " +
                             std::to_string(i));
        }
    }
    return {xs.front() - 0.5 * dx, xs.back() + 0.5 * dx};
}

} // namespace

GriddedDensity load_density(const std::string& path) {
    const auto rows = read_csv(path);
    if (rows[0].size() != 2 || rows[0][0] != "x" || rows[0][1] != "value") {
        throw ParseError(path + ": expected header 'x,value'");
    }
    std::vector<double> xs;
    Eigen::ArrayXd values(Eigen::Index(rows.size()) - 1);
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2) {
            throw ParseError(path + ": row " + std::to_string(i) +
                             " does not have 2 fields");
        }
        xs.push_back(parse_double(rows[i][0], path));
        values[Eigen::Index(i) - 1] = parse_double(rows[i][1], path);
    }
    const auto [lo, hi] = grid_range(xs, path);
    return GriddedDensity(lo, hi, std::move(values));
}

GriddedWaveFunction load_wavefunction(const std::string& path, double hbar) {
    const auto rows = read_csv(path);
    if (rows[0].size() != 3 || rows[0][0] != "x" || rows[0][1] != "re" ||
        rows[0][2] != "im") {
        throw ParseError(path + ": expected header 'x,re,im'");
    }
    std::vector<double> xs;
    Eigen::ArrayXcd amp(Eigen::Index(rows.size()) - 1);
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 3) {
            throw ParseError(path + ": row " + std::to_string(i) +
                             " does not have 3 fields");
        }
        xs.push_back(parse_double(rows[i][0], path));
        amp[Eigen::Index(i) - 1] = {parse_double(rows[i][1], path),
                                    parse_double(rows[i][2], path)};
    }
    const auto [lo, hi] = grid_range(xs, path);
    return GriddedWaveFunction(lo, hi, std::move(amp), hbar);
}

TransformMatrix load_matrix(const std::string& path) {
    const auto rows = read_csv(path);
    const Eigen::Index ncols = Eigen::Index(rows[0].size());
    Eigen::MatrixXcd m(Eigen::Index(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (Eigen::Index(rows[i].size()) != ncols) {
            throw ParseError(path + ": ragged matrix row " + std::to_string(i));
        }
        for (Eigen::Index j = 0; j < ncols; ++j) {
            m(Eigen::Index(i), j) = parse_complex(rows[i][size_t(j)], path);
        }
    }
    return TransformMatrix(std::move(m));
}

void save_density(const GriddedDensity& density, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << "x,value\n";
    for (Eigen::Index k = 0; k < density.size(); ++k) {
        out << format_number(density.x(k)) << ','
            << format_number(density.values()[k]) << '\n';
    }
}

void save_wavefunction(const GriddedWaveFunction& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << "x,re,im\n";
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        out << format_number(psi.x(k)) << ','
            << format_number(psi.amplitudes()[k].real()) << ','
            << format_number(psi.amplitudes()[k].imag()) << '\n';
    }
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

} // namespace iturlab
