#include "cvx/lp.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace cvx {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;

// Bounded revised-tableau simplex on the standard form
//   min z = c.x,  A x = b,  x >= 0,  b >= 0,
// starting from the artificial basis. Used twice (phase 1 and 2).
struct Tableau {
    Mat T;                    // (m+1) x (n+1); last row = reduced costs, last col = rhs
    std::vector<int> basis;   // basic variable per row

    int rows() const { return static_cast<int>(T.rows()) - 1; }
    int cols() const { return static_cast<int>(T.cols()) - 1; }

    void pivot(int pr, int pc) {
        T.row(pr) /= T(pr, pc);
        for (int r = 0; r < static_cast<int>(T.rows()); ++r) {
            if (r == pr) continue;
            double f = T(r, pc);
            if (f != 0.0) T.row(r) -= f * T.row(pr);
        }
        basis[pr] = pc;
    }

    // Returns false when unbounded. `restrict_cols` limits entering columns.
    bool run(int restrict_cols) {
        const int m = rows();
        long iters = 0;
        const long bland_after = 200L + 20L * (m + restrict_cols);
        while (true) {
            // entering column
            int pc = -1;
            if (iters < bland_after) {
                double best = -kPivotTol;
                for (int c = 0; c < restrict_cols; ++c)
                    if (T(m, c) < best) { best = T(m, c); pc = c; }
            } else {  // Bland's rule to break cycles
                for (int c = 0; c < restrict_cols; ++c)
                    if (T(m, c) < -kPivotTol) { pc = c; break; }
            }
            if (pc < 0) return true;
            // leaving row by minimum ratio
            int pr = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m; ++r) {
                if (T(r, pc) > kPivotTol) {
                    double ratio = T(r, cols()) / T(r, pc);
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 && (pr < 0 || basis[r] > basis[pr]))) {
                        best_ratio = ratio;
                        pr = r;
                    }
                }
            }
            if (pr < 0) return false;
            pivot(pr, pc);
            ++iters;
        }
    }
};

}  // namespace

LpResult solve_lp(const Vec& c, const Mat& A_ub, const Vec& b_ub,
                  const Mat& A_eq, const Vec& b_eq, bool nonneg) {
    const int nv = static_cast<int>(c.size());
    const int mu = static_cast<int>(A_ub.rows());
    const int me = static_cast<int>(A_eq.rows());
    const int m = mu + me;
    // columns: structural vars (split in two when free), slacks, artificials
    const int ns = nonneg ? nv : 2 * nv;
    const int ncols = ns + mu + m;

    Mat A = Mat::Zero(m, ns + mu);
    Vec b(m);
    for (int r = 0; r < mu; ++r) {
        for (int j = 0; j < nv; ++j) {
            A(r, j) = A_ub(r, j);
            if (!nonneg) A(r, nv + j) = -A_ub(r, j);
        }
        A(r, ns + r) = 1.0;  // slack
        b[r] = b_ub[r];
    }
    for (int r = 0; r < me; ++r) {
        for (int j = 0; j < nv; ++j) {
            A(mu + r, j) = A_eq(r, j);
            if (!nonneg) A(mu + r, nv + j) = -A_eq(r, j);
        }
        b[mu + r] = b_eq[r];
    }
    for (int r = 0; r < m; ++r)
        if (b[r] < 0.0) { A.row(r) *= -1.0; b[r] = -b[r]; }

    Tableau tab;
    tab.T = Mat::Zero(m + 1, ncols + 1);
    tab.T.block(0, 0, m, ns + mu) = A;
    tab.basis.resize(m);
    for (int r = 0; r < m; ++r) {
        tab.T(r, ns + mu + r) = 1.0;  // artificial
        tab.T(r, ncols) = b[r];
        tab.basis[r] = ns + mu + r;
    }
    // phase 1: minimize artificial sum
    for (int r = 0; r < m; ++r) tab.T.row(m) -= tab.T.row(r);
    tab.T.row(m).segment(ns + mu, m).setZero();
    if (!tab.run(ns + mu)) return {LpStatus::infeasible, Vec(), 0.0};
    if (tab.T(m, ncols) < -kFeasTol) return {LpStatus::infeasible, Vec(), 0.0};

    // drive leftover artificials out of the basis where possible
    for (int r = 0; r < m; ++r) {
        if (tab.basis[r] >= ns + mu) {
            int pc = -1;
            for (int c = 0; c < ns + mu; ++c)
                if (std::abs(tab.T(r, c)) > 1e-7) { pc = c; break; }
            if (pc >= 0) tab.pivot(r, pc);
        }
    }

    // phase 2 objective: minimize -c.x over structural columns
    tab.T.row(m).setZero();
    for (int j = 0; j < nv; ++j) {
        tab.T(m, j) = -c[j];
        if (!nonneg) tab.T(m, nv + j) = c[j];
    }
    for (int r = 0; r < m; ++r) {
        int bc = tab.basis[r];
        double f = tab.T(m, bc);
        if (f != 0.0) tab.T.row(m) -= f * tab.T.row(r);
    }
    if (!tab.run(ns + mu)) return {LpStatus::unbounded, Vec(), 0.0};

    Vec full = Vec::Zero(ncols);
    for (int r = 0; r < m; ++r) full[tab.basis[r]] = tab.T(r, ncols);
    Vec x(nv);
    for (int j = 0; j < nv; ++j)
        x[j] = nonneg ? full[j] : full[j] - full[nv + j];
    return {LpStatus::optimal, x, c.dot(x)};
}

bool in_convex_hull(const Mat& pts, const Vec& x, double tol) {
    const int k = static_cast<int>(pts.rows());
    const int n = static_cast<int>(pts.cols());
    if (k == 0) return false;
    Mat A_eq(n + 1, k);
    Vec b_eq(n + 1);
    for (int j = 0; j < k; ++j) A_eq.col(j).head(n) = pts.row(j).transpose();
    A_eq.row(n).setOnes();
    b_eq.head(n) = x;
    b_eq[n] = 1.0;
    // scale for conditioning
    double s = std::max(1.0, pts.cwiseAbs().maxCoeff());
    A_eq.topRows(n) /= s;
    b_eq.head(n) /= s;
    (void)tol;
    LpResult r = solve_lp(Vec::Zero(k), Mat(), Vec(), A_eq, b_eq, /*nonneg=*/true);
    return r.status == LpStatus::optimal;
}

std::pair<Vec, double> chebyshev_center(const Mat& A, const Vec& b) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    Mat A_ub(m, n + 1);
    for (int r = 0; r < m; ++r) {
        A_ub.row(r).head(n) = A.row(r);
        A_ub(r, n) = A.row(r).norm();
    }
    Vec c = Vec::Zero(n + 1);
    c[n] = 1.0;
    LpResult res = solve_lp(c, A_ub, b);
    if (res.status != LpStatus::optimal) return {Vec::Zero(n), -1.0};
    return {res.x.head(n), res.x[n]};
}

}  // namespace cvx
