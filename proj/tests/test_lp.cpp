#include <doctest.h>

#include "cvx/lp.hpp"
#include "cvx/rng.hpp"

using namespace cvx;

TEST_CASE("simplex solves a 2d box LP") {
    Mat A(4, 2);
    A << 1, 0, -1, 0, 0, 1, 0, -1;
    Vec b(4);
    b << 2, 1, 3, 4;  // -1 <= x <= 2, -4 <= y <= 3
    Vec c(2);
    c << 1, 2;
    LpResult r = solve_lp(c, A, b);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(2 + 6).epsilon(1e-9));
    CHECK(r.x[0] == doctest::Approx(2));
    CHECK(r.x[1] == doctest::Approx(3));
}

TEST_CASE("unbounded and infeasible are detected") {
    Mat A(1, 2);
    A << 1, 0;
    Vec b(1);
    b << 1;
    Vec c(2);
    c << 0, 1;
    CHECK(solve_lp(c, A, b).status == LpStatus::unbounded);

    Mat A2(2, 1);
    A2 << 1, -1;
    Vec b2(2);
    b2 << 1, -2;  // x <= 1 and x >= 2
    CHECK(solve_lp(Vec::Ones(1), A2, b2).status == LpStatus::infeasible);
}

TEST_CASE("equality constraints and nonnegative variables") {
    // max x0 + x1 s.t. x0 + x1 + x2 = 1, x >= 0
    Mat Ae(1, 3);
    Ae << 1, 1, 1;
    Vec be(1);
    be << 1;
    Vec c(3);
    c << 1, 1, 0;
    LpResult r = solve_lp(c, Mat(), Vec(), Ae, be, /*nonneg=*/true);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("LP optimum matches vertex enumeration on random 2d polygons") {
    std::mt19937_64 eng = make_engine(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        // random bounded polygon: box plus random cuts
        int extra = 3 + static_cast<int>(eng() % 4);
        Mat A(4 + extra, 2);
        Vec b(4 + extra);
        A.topRows(4) << 1, 0, -1, 0, 0, 1, 0, -1;
        b.head(4).setConstant(1.0);
        for (int i = 0; i < extra; ++i) {
            Vec dir = random_direction(eng, 2);
            A.row(4 + i) = dir.transpose();
            b[4 + i] = 0.3 + 0.7 * std::abs(u(eng));
        }
        Vec c = random_direction(eng, 2);
        LpResult r = solve_lp(c, A, b);
        REQUIRE(r.status == LpStatus::optimal);
        // brute-force all facet pairs
        double best = -1e100;
        for (int i = 0; i < A.rows(); ++i)
            for (int j = i + 1; j < A.rows(); ++j) {
                Mat M(2, 2);
                M << A.row(i), A.row(j);
                if (std::abs(M.determinant()) < 1e-9) continue;
                Vec rhs(2);
                rhs << b[i], b[j];
                Vec x = M.inverse() * rhs;
                if (((A * x - b).array() <= 1e-9).all()) best = std::max(best, c.dot(x));
            }
        CHECK(r.value == doctest::Approx(best).epsilon(1e-7));
    }
}

TEST_CASE("chebyshev center of the unit box") {
    Mat A(4, 2);
    A << 1, 0, -1, 0, 0, 1, 0, -1;
    Vec b = Vec::Ones(4);
    auto [c, r] = chebyshev_center(A, b);
    CHECK(r == doctest::Approx(1.0));
    CHECK(c.norm() < 1e-9);
}

TEST_CASE("convex hull membership LP") {
    Mat pts(4, 2);
    pts << 0, 0, 1, 0, 0, 1, 1, 1;
    CHECK(in_convex_hull(pts, Vec::Constant(2, 0.5)));
    CHECK(in_convex_hull(pts, Vec::Zero(2)));
    Vec outside(2);
    outside << 1.2, 0.5;
    CHECK(!in_convex_hull(pts, outside));
}
