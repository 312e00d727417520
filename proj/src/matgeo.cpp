#include "iturlab/matgeo.hpp"

#include <cmath>

namespace iturlab {

namespace {

constexpr double kRankThreshold = 1e-12;

bool norm_pair_supported(double alpha, double beta) {
    if (std::isnan(alpha) || std::isnan(beta)) return false;
    if (alpha < 1.0 || beta < 1.0) return false;
    return alpha == 1.0 || std::isinf(beta) || (alpha == 2.0 && beta == 2.0);
}

double vector_p_norm(const Eigen::VectorXcd& v, double p) {
    if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    return std::pow(v.cwiseAbs().array().pow(p).sum(), 1.0 / p);
}

double hoelder_dual(double p) {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

Eigen::JacobiSVD<Eigen::MatrixXcd> svd_of(const TransformMatrix& a) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(a.entries());
}

} // namespace

TransformMatrix::TransformMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.cols() < 1) {
        throw DomainError("TransformMatrix: empty matrix");
    }
    if (!entries_.allFinite()) {
        throw DomainError("TransformMatrix: non-finite entry");
    }
}

double TransformMatrix::unitarity_defect() const {
    const Eigen::MatrixXcd g = entries_.adjoint() * entries_;
    return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols()))
        .cwiseAbs()
        .maxCoeff();
}

double mixed_norm(const TransformMatrix& a, double alpha, double beta) {
    if (!norm_pair_supported(alpha, beta)) {
        throw UnsupportedNormPairError(
            "mixed_norm: no closed form for the requested (alpha,beta) pair");
    }
    const Eigen::MatrixXcd& m = a.entries();
    if (alpha == 2.0 && beta == 2.0) {
        return svd_of(a).singularValues()(0);
    }
    if (alpha == 1.0) {
        // Extreme points of the ||x||_1 ball are coordinate directions,
        // so the norm is the largest column beta-norm.
        double best = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            best = std::max(best, vector_p_norm(m.col(j), beta));
        }
        return best;
    }
    // beta = inf: each output row is a Hoelder functional on x, so the
    // norm is the largest row alpha'-norm.
    const double dual = hoelder_dual(alpha);
    double best = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        best = std::max(best, vector_p_norm(m.row(i).transpose(), dual));
    }
    return best;
}

double condition_number(const TransformMatrix& a, double alpha, double beta) {
    if (a.rows() != a.cols()) {
        throw DomainError("condition_number: matrix must be square");
    }
    if (!norm_pair_supported(alpha, beta) || !norm_pair_supported(beta, alpha)) {
        throw UnsupportedNormPairError(
            "condition_number: both (alpha,beta) and (beta,alpha) must have "
            "closed forms");
    }
    auto svd = svd_of(a);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= kRankThreshold * sv(0)) {
        throw SingularMatrixError("condition_number: matrix is singular to "
                                  "working precision");
    }
    if (alpha == 2.0 && beta == 2.0) {
        return sv(0) / (sv(sv.size() - 1));
    }
    const Eigen::MatrixXcd inv = a.entries().inverse();
    return mixed_norm(a, alpha, beta) *
           mixed_norm(TransformMatrix(inv), beta, alpha);
}

double distance_to_singularity(const TransformMatrix& a, double alpha,
                               double beta) {
    return mixed_norm(a, alpha, beta) / condition_number(a, alpha, beta);
}

double overlap_bound_c(const TransformMatrix& a) {
    return mixed_norm(a, 1.0, std::numeric_limits<double>::infinity());
}

} // namespace iturlab
