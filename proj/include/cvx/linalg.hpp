#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvx {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Base class for every contract violation thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error { public: using Error::Error; };
class DegenerateBody : public Error { public: using Error::Error; };
class PointNotInterior : public Error { public: using Error::Error; };
class UnboundedResult : public Error { public: using Error::Error; };
class SingularMap : public Error { public: using Error::Error; };
class TooHighDimensional : public Error { public: using Error::Error; };
class NonPolytope : public Error { public: using Error::Error; };
class NonSymmetricGauge : public Error { public: using Error::Error; };
class ZeroAtOrigin : public Error { public: using Error::Error; };
class NonPositiveP : public Error { public: using Error::Error; };
class RangeRatioExceeded : public Error { public: using Error::Error; };
class InclusionViolated : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };
class DegenerateSample : public Error { public: using Error::Error; };

/// Volume of the Euclidean unit ball in dimension n.
inline double unit_ball_volume(int n) {
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

/// Surface area of the unit sphere S^{n-1}.
inline double unit_sphere_area(int n) {
    return n * unit_ball_volume(n);
}

/// Symmetric positive-definite square root via eigendecomposition.
inline Mat spd_sqrt(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success)
        throw Error("spd_sqrt: eigendecomposition failed");
    Vec ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0)
        throw DegenerateBody("spd_sqrt: matrix not positive definite");
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

/// Inverse square root of an SPD matrix.
inline Mat spd_inv_sqrt(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success)
        throw Error("spd_inv_sqrt: eigendecomposition failed");
    Vec ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0)
        throw DegenerateBody("spd_inv_sqrt: matrix not positive definite");
    return es.eigenvectors() * ev.cwiseInverse().cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace cvx
