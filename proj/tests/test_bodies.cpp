#include <doctest.h>

#include <cmath>

#include "cvx/bodies.hpp"
#include "cvx/rng.hpp"

using namespace cvx;

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r;
}

// support-function Hausdorff-type comparison on random directions
double max_support_gap(const ConvexBody& K, const ConvexBody& L, int dirs, unsigned seed) {
    std::mt19937_64 eng = make_engine(seed);
    double gap = 0.0;
    for (int i = 0; i < dirs; ++i) {
        Vec u = random_direction(eng, K.dim());
        gap = std::max(gap, std::abs(K.support(u) - L.support(u)));
    }
    return gap;
}

}  // namespace

TEST_CASE("polar of the square is the cross-polytope") {
    ConvexBody sq = make_cube(2);
    ConvexBody p = polar(sq);
    ConvexBody cross = make_cross_polytope(2);
    CHECK(max_support_gap(p, cross, 100, 1) < 1e-9);
    // membership oracle on random points: p and cross agree
    std::mt19937_64 eng = make_engine(2);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int i = 0; i < 1000; ++i) {
        Vec x(2);
        x << u(eng), u(eng);
        CHECK(p.contains(x, 1e-9) == cross.contains(x, 1e-9));
    }
}

TEST_CASE("polar of r*ball is (1/r)*ball") {
    ConvexBody b = make_ball(3, 2.5);
    ConvexBody p = polar(b);
    const Ellipsoid& e = p.ellipsoid();
    CHECK(e.shape()(0, 0) == doctest::Approx(2.5 * 2.5));
    CHECK(p.support(Vec::Unit(3, 0)) == doctest::Approx(1.0 / 2.5));
}

TEST_CASE("bipolar recovers a centered simplex") {
    Mat V(3, 2);
    V << 1, 0, -0.5, 0.8, -0.5, -0.8;
    ConvexBody K{VPolytope(V)};
    ConvexBody KK = polar(polar(K));
    CHECK(max_support_gap(K, KK, 200, 3) < 1e-8);
    // vertex recovery within 1e-8
    const Mat& W = KK.vertices();
    REQUIRE(W.rows() == 3);
    for (int i = 0; i < 3; ++i) {
        double best = 1e100;
        for (int j = 0; j < 3; ++j) best = std::min(best, (W.row(i) - V.row(j)).norm());
        CHECK(best < 1e-8);
    }
}

TEST_CASE("polar requires an interior point") {
    ConvexBody sq = make_cube(2);
    Vec x(2);
    x << 1.0, 0.0;  // on the boundary
    CHECK_THROWS_AS(polar(sq, x), PointNotInterior);
    x << 3.0, 0.0;
    CHECK_THROWS_AS(polar(sq, x), PointNotInterior);
}

TEST_CASE("support duality: gauge of polar equals support of primal") {
    Mat V(4, 2);
    V << 1.2, 0.1, -0.3, 1.1, -1.0, -0.4, 0.4, -0.9;
    ConvexBody K{VPolytope(V)};
    ConvexBody P = polar(K);
    std::mt19937_64 eng = make_engine(11);
    for (int i = 0; i < 100; ++i) {
        Vec u = random_direction(eng, 2);
        CHECK(P.gauge(u) == doctest::Approx(K.support(u)).epsilon(1e-9));
    }
}

TEST_CASE("polar affine equivariance: (TK)^o = T^{-T} K^o") {
    Mat L(2, 2);
    L << 1.4, 0.3, -0.2, 0.9;
    AffineMap T(L, Vec::Zero(2));
    ConvexBody K = make_cube(2);
    ConvexBody lhs = polar(affine_image(K, T));
    AffineMap Tit(L.inverse().transpose().eval(), Vec::Zero(2));
    ConvexBody rhs = affine_image(polar(K), Tit);
    CHECK(max_support_gap(lhs, rhs, 100, 5) < 1e-9);
}

TEST_CASE("minkowski sums") {
    ConvexBody sq = make_cube(2);
    ConvexBody s2 = minkowski_sum(sq, sq);
    CHECK(max_support_gap(s2, make_cube(2, 2.0), 100, 6) < 1e-9);

    // two orthogonal segments sum to the square: zonotope construction.
    // Segments are degenerate, so build from the sum points directly.
    Mat seg1(2, 2), seg2(2, 2);
    seg1 << -1, 0, 1, 0;
    seg2 << 0, -1, 0, 1;
    Mat sums(4, 2);
    int r = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sums.row(r++) = seg1.row(i) + seg2.row(j);
    ConvexBody z = ConvexBody::from_points(sums);
    CHECK(max_support_gap(z, sq, 100, 7) < 1e-9);

    // K + {0} = K
    Mat origin = Mat::Zero(1, 2);
    Mat pts = sq.vertices();
    ConvexBody same = ConvexBody::from_points(pts);
    VPolytope sum = minkowski_sum(VPolytope(pts), VPolytope(origin, false));
    CHECK(max_support_gap(ConvexBody(sum), same, 100, 8) < 1e-12);
}

TEST_CASE("minkowski sum support additivity on random polytopes") {
    std::mt19937_64 eng = make_engine(13);
    for (int n : {2, 3}) {
        Mat A(8, n), B(7, n);
        for (int i = 0; i < A.rows(); ++i) A.row(i) = random_direction(eng, n).transpose();
        for (int i = 0; i < B.rows(); ++i) B.row(i) = 1.3 * random_direction(eng, n).transpose();
        ConvexBody K = ConvexBody::from_points(A);
        ConvexBody L = ConvexBody::from_points(B);
        ConvexBody S = minkowski_sum(K, L);
        for (int i = 0; i < 100; ++i) {
            Vec u = random_direction(eng, n);
            CHECK(S.support(u) ==
                  doctest::Approx(K.support(u) + L.support(u)).epsilon(1e-9));
        }
    }
}

TEST_CASE("difference body: Rogers-Shephard equality for simplices") {
    for (int n : {2, 3}) {
        ConvexBody simplex = make_simplex(n);
        ConvexBody diff = difference_body(simplex);
        double ratio = diff.hull().volume / simplex.hull().volume;
        CHECK(ratio == doctest::Approx(binom(2 * n, n)).epsilon(1e-9));
    }
}

TEST_CASE("difference body of a symmetric body is 2K") {
    ConvexBody cross = make_cross_polytope(3);
    ConvexBody diff = difference_body(cross);
    CHECK(max_support_gap(diff, make_cross_polytope(3, 2.0), 100, 9) < 1e-9);

    // symmetry of the support function
    std::mt19937_64 eng = make_engine(10);
    for (int i = 0; i < 50; ++i) {
        Vec u = random_direction(eng, 3);
        CHECK(diff.support(u) == doctest::Approx(diff.support((-u).eval())).epsilon(1e-10));
    }
}

TEST_CASE("difference body two-sided Rogers-Shephard bounds") {
    std::mt19937_64 eng = make_engine(21);
    for (int n : {2, 3, 4}) {
        Mat P(2 * n + 4, n);
        for (int i = 0; i < P.rows(); ++i) P.row(i) = random_direction(eng, n).transpose();
        ConvexBody K = ConvexBody::from_points(P);
        double ratio = difference_body(K).hull().volume / K.hull().volume;
        CHECK(ratio >= std::pow(2.0, n) - 1e-9);
        CHECK(ratio <= binom(2 * n, n) + 1e-9);
    }
}

TEST_CASE("convex hull of unions") {
    ConvexBody sq = make_cube(2);
    // conv(K u K) = K
    CHECK(max_support_gap(convex_hull_union(sq, sq), sq, 100, 12) < 1e-9);

    // square with the diamond 2B_1^2: the square corners lie on the diamond
    // boundary, so the hull is the diamond of area 8
    ConvexBody big = convex_hull_union(sq, make_cross_polytope(2, 2.0));
    CHECK(big.hull().volume == doctest::Approx(8.0).epsilon(1e-9));

    // non-degenerate instance: c = 3/2 gives area 4c = 6 (2-D shoelace oracle)
    ConvexBody mid = convex_hull_union(sq, make_cross_polytope(2, 1.5));
    CHECK(mid.hull().volume == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("affine images scale volume by |det| and preserve oracles") {
    Mat L(2, 2);
    L << 2, 0, 0, 3;
    ConvexBody img = affine_image(make_ball(2), AffineMap(L, Vec::Zero(2)));
    CHECK(img.ellipsoid().volume() == doctest::Approx(6.0 * M_PI).epsilon(1e-6));

    Vec u(2);
    u << 1, 1;
    CHECK(make_cube(2).support(u) == doctest::Approx(2.0));
    CHECK(make_cross_polytope(2).radial(Vec::Unit(2, 0)) == doctest::Approx(1.0));
}

TEST_CASE("support, radial and membership are mutually consistent") {
    std::mt19937_64 eng = make_engine(14);
    Mat P(9, 3);
    for (int i = 0; i < P.rows(); ++i)
        P.row(i) = random_direction(eng, 3).transpose() * (0.8 + 0.4 * (i % 3));
    ConvexBody K = difference_body(ConvexBody::from_points(P));  // symmetric, 0 interior
    for (int i = 0; i < 100; ++i) {
        Vec th = random_direction(eng, 3);
        double rho = K.radial(th);
        CHECK(K.contains((rho * (1 - 1e-9)) * th));
        CHECK(!K.contains((rho * (1 + 1e-6)) * th, 1e-12));
        CHECK(K.gauge(rho * th) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("H-polytope boundedness is validated") {
    Mat A(3, 2);
    A << 1, 0, 0, 1, 0, -1;  // slab, unbounded along -x
    Vec b = Vec::Ones(3);
    CHECK_THROWS_AS(HPolytope(A, b), UnboundedResult);
}

TEST_CASE("json round trip is bit-identical") {
    ConvexBody bodies[] = {make_cube(3), make_cross_polytope(2), make_ball(2, 1.37)};
    for (const ConvexBody& K : bodies) {
        std::string s1 = body_to_json(K);
        ConvexBody K2 = body_from_json(s1);
        std::string s2 = body_to_json(K2);
        CHECK(s1 == s2);
    }
    // awkward doubles survive exactly
    Mat V(3, 2);
    V << 0.1, 1.0 / 3.0, -2.718281828459045e-7, 1e17, 3.0, -0.1;
    ConvexBody K{VPolytope(V)};
    ConvexBody K2 = body_from_json(body_to_json(K));
    CHECK((K.vertices() - K2.vertices()).cwiseAbs().maxCoeff() == 0.0);
}
