#ifndef ITURLAB_MATGEO_HPP
#define ITURLAB_MATGEO_HPP

#include <Eigen/Dense>

#include "iturlab/errors.hpp"

namespace iturlab {

/// Dense complex transform matrix with the convention y = A x.
class TransformMatrix {
public:
    explicit TransformMatrix(Eigen::MatrixXcd entries);

    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index rows() const { return entries_.rows(); }
    Eigen::Index cols() const { return entries_.cols(); }

    /// Max-norm of A^dagger A - I; zero for unitary matrices.
    double unitarity_defect() const;

private:
    Eigen::MatrixXcd entries_;
};

/// Mixed operator norm ||A||_{alpha,beta} = max ||A x||_beta / ||x||_alpha
/// for the closed-form pairs: alpha = 1 (max column beta-norm), beta = inf
/// (max row alpha'-norm), or (2,2) (largest singular value). The special
/// cases (1,inf) = max entry modulus, (1,1) = max column 1-norm and
/// (inf,inf) = max row 1-norm all fall out of those families. Other pairs
/// have no closed form (their evaluation is NP-hard) and are rejected.
double mixed_norm(const TransformMatrix& a, double alpha, double beta);

/// Condition number kappa_{alpha,beta}(A) = ||A||_{alpha,beta}
/// ||A^-1||_{beta,alpha} >= 1. Requires both (alpha,beta) and
/// (beta,alpha) to be supported, which restricts to the symmetric pairs
/// (1,1), (2,2) and (inf,inf).
double condition_number(const TransformMatrix& a, double alpha, double beta);

/// Distance to the nearest singular matrix in the (alpha,beta) norm:
/// dist = ||A||_{alpha,beta} / kappa_{alpha,beta}(A) = 1/||A^-1||_{beta,alpha}.
double distance_to_singularity(const TransformMatrix& a, double alpha,
                               double beta);

/// The overlap constant feeding the discrete uncertainty bound:
/// c = max_{i,j} |a_ij| = ||A||_{1,inf}. At most 1 for unitary matrices.
double overlap_bound_c(const TransformMatrix& a);

} // namespace iturlab

#endif
