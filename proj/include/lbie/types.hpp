#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace lbie {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using Vector3d = Eigen::Vector3d;
using Vector2d = Eigen::Vector2d;
using VectorXd = Eigen::VectorXd;
using MatrixXd = Eigen::MatrixXd;
using Matrix3Xd = Eigen::Matrix3Xd;
using Index = Eigen::Index;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A chart whose tangent vectors are (numerically) parallel.
class DegenerateElementError : public Error {
public:
    DegenerateElementError(const std::string& what, int triangle)
        : Error(what), triangle_(triangle)
    {
    }
    int triangle() const { return triangle_; }

private:
    int triangle_;
};

/// Violated precondition of a public entry point.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Kernel evaluated at a singular point.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or unsupported input file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Adaptive or singular quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double requested)
        : Error(what), estimate_(estimate), requested_(requested)
    {
    }
    double estimate() const { return estimate_; }
    double requested() const { return requested_; }

private:
    double estimate_;
    double requested_;
};

/// Iterative or direct solve failure.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace lbie
