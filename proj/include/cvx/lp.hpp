#pragma once

#include "cvx/linalg.hpp"

namespace cvx {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Vec x;
    double value = 0.0;
};

/// Dense two-phase simplex for the small LPs this project needs
/// (interior points, hull membership, Minkowski decompositions).
///
/// maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,
/// with x >= 0 when nonneg is set and x free otherwise.
LpResult solve_lp(const Vec& c,
                  const Mat& A_ub, const Vec& b_ub,
                  const Mat& A_eq = Mat(), const Vec& b_eq = Vec(),
                  bool nonneg = false);

/// Is x a convex combination of the rows of pts? Feasibility LP.
bool in_convex_hull(const Mat& pts, const Vec& x, double tol = 1e-9);

/// Chebyshev center of {x : Ax <= b}: deepest point w.r.t. Euclidean
/// facet distances. Returns (center, radius). radius <= 0 means empty
/// or lower-dimensional.
std::pair<Vec, double> chebyshev_center(const Mat& A, const Vec& b);

}  // namespace cvx
