#include "cvx/rng.hpp"

#include <cmath>

namespace cvx {
namespace {

// Acklam-style inverse normal CDF, polished with one Halley step.
double norm_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        double q = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1);
    }
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1 + 0.5 * x * u);
}

// Roberts' generalized golden-ratio constant for the R_d Kronecker lattice.
double plastic_constant(int d) {
    double x = 1.5;
    for (int it = 0; it < 64; ++it)
        x = std::pow(1.0 + x, 1.0 / (d + 1));
    return x;
}

}  // namespace

Mat sphere_grid(int n, int m) {
    Mat dirs(m, n);
    if (n == 2) {
        for (int i = 0; i < m; ++i) {
            double ang = 2.0 * M_PI * i / m;
            dirs(i, 0) = std::cos(ang);
            dirs(i, 1) = std::sin(ang);
        }
        return dirs;
    }
    // Kronecker lattice in [0,1)^n mapped through the normal quantile,
    // then radially normalized: quasi-uniform on the sphere.
    const double g = plastic_constant(n);
    Vec alpha(n);
    for (int j = 0; j < n; ++j) alpha[j] = std::pow(1.0 / g, j + 1);
    for (int i = 0; i < m; ++i) {
        Vec v(n);
        for (int j = 0; j < n; ++j) {
            double u = std::fmod(0.5 + (i + 1) * alpha[j], 1.0);
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            v[j] = norm_quantile(u);
        }
        double nv = v.norm();
        if (nv < 1e-9) v[0] = 1.0, nv = 1.0;
        dirs.row(i) = v.transpose() / nv;
    }
    return dirs;
}

}  // namespace cvx
