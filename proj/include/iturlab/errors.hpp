#ifndef ITURLAB_ERRORS_HPP
#define ITURLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iturlab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Probability mass does not sum/integrate to one within tolerance.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// A probability entry is negative beyond the clamping tolerance.
class NegativeProbabilityError : public Error {
public:
    using Error::Error;
};

/// Numerical quadrature failed to converge or produced garbage.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Grid spacings or domains are incompatible between operands.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Malformed grid (non-uniform spacing, empty, non-positive cell).
class GridError : public Error {
public:
    using Error::Error;
};

/// Requested mixed matrix norm has no closed form here.
class UnsupportedNormPairError : public Error {
public:
    using Error::Error;
};

/// Matrix is singular to working precision.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Too much mass near the grid boundary for a faithful transform.
class AliasingError : public Error {
public:
    using Error::Error;
};

/// An entropy needed by an inequality check is divergent.
class DivergentEntropyError : public Error {
public:
    using Error::Error;
};

/// Second moment does not converge inside the grid.
class InfiniteVarianceError : public Error {
public:
    using Error::Error;
};

/// Grid not wide enough to hold the distribution's tails.
class TailMassError : public Error {
public:
    using Error::Error;
};

/// Samples placed outside the distribution's support.
class SupportError : public Error {
public:
    using Error::Error;
};

/// Input file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace iturlab

#endif
