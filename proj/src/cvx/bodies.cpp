#include "cvx/bodies.hpp"

#include <algorithm>
#include <cmath>

#include "cvx/lp.hpp"
#include "cvx/rng.hpp"

namespace cvx {

// ---- HPolytope ------------------------------------------------------------

HPolytope::HPolytope(Mat A, Vec b, bool validate) : A_(std::move(A)), b_(std::move(b)) {
    const int m = static_cast<int>(A_.rows());
    const int n = static_cast<int>(A_.cols());
    if (m != b_.size()) throw DimensionMismatch("HPolytope: A/b row mismatch");
    if (m < n + 1) throw Error("HPolytope: need at least n+1 facets");
    for (int r = 0; r < m; ++r)
        if (A_.row(r).norm() < 1e-14) throw Error("HPolytope: zero row in A");
    if (validate) {
        for (int j = 0; j < n; ++j) {
            for (double sgn : {1.0, -1.0}) {
                Vec c = Vec::Zero(n);
                c[j] = sgn;
                LpResult r = solve_lp(c, A_, b_);
                if (r.status == LpStatus::unbounded)
                    throw UnboundedResult("HPolytope: unbounded along a coordinate");
                if (r.status == LpStatus::infeasible)
                    throw DegenerateBody("HPolytope: empty");
            }
        }
    }
}

// ---- VPolytope ------------------------------------------------------------

VPolytope::VPolytope(Mat V, bool reduce) : V_(std::move(V)) {
    const int n = static_cast<int>(V_.cols());
    if (V_.rows() < n + 1) throw DegenerateBody("VPolytope: need at least n+1 vertices");
    if (reduce) {
        Hull h = convex_hull(V_);
        V_ = h.vertices();
    }
}

// ---- Ellipsoid ------------------------------------------------------------

Ellipsoid::Ellipsoid(Vec center, Mat shape) : c_(std::move(center)), M_(std::move(shape)) {
    if (M_.rows() != M_.cols() || M_.rows() != c_.size())
        throw DimensionMismatch("Ellipsoid: shape/center size mismatch");
    if ((M_ - M_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + M_.cwiseAbs().maxCoeff()))
        throw Error("Ellipsoid: shape not symmetric");
    M_ = 0.5 * (M_ + M_.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(M_);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw DegenerateBody("Ellipsoid: shape not positive definite");
}

double Ellipsoid::volume() const {
    return unit_ball_volume(dim()) / std::sqrt(M_.determinant());
}

Vec Ellipsoid::support_point(const Vec& u) const {
    Vec w = M_.ldlt().solve(u);
    return c_ + w / std::sqrt(u.dot(w));
}

// ---- AffineMap ------------------------------------------------------------

AffineMap::AffineMap(Mat linear, Vec shift) : L_(std::move(linear)), s_(std::move(shift)) {
    if (L_.rows() != L_.cols() || L_.rows() != s_.size())
        throw DimensionMismatch("AffineMap: size mismatch");
    det_ = L_.determinant();
    if (!(std::abs(det_) > 0.0) || !std::isfinite(det_))
        throw SingularMap("AffineMap: singular linear part");
    Mat id = L_ * L_.inverse();
    if ((id - Mat::Identity(L_.rows(), L_.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw SingularMap("AffineMap: inverse check failed (ill-conditioned)");
}

AffineMap AffineMap::identity(int n) { return AffineMap(Mat::Identity(n, n), Vec::Zero(n)); }

AffineMap AffineMap::inverse() const {
    Mat Li = L_.inverse();
    return AffineMap(Li, -Li * s_);
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    return AffineMap(L_ * other.L_, L_ * other.s_ + s_);
}

// ---- ConvexBody -----------------------------------------------------------

struct ConvexBody::Impl {
    Rep rep;
    mutable std::mutex mu;
    mutable std::shared_ptr<const Hull> hull;
    mutable std::shared_ptr<const Mat> verts;
    mutable std::shared_ptr<const Mat> facetA;
    mutable std::shared_ptr<const Vec> facetb;
    mutable std::shared_ptr<const MomentSummary> summary;

    explicit Impl(Rep r) : rep(std::move(r)) {}
};

ConvexBody::ConvexBody(HPolytope p) : impl_(std::make_shared<Impl>(Rep(std::move(p)))) {}
ConvexBody::ConvexBody(VPolytope p) : impl_(std::make_shared<Impl>(Rep(std::move(p)))) {}
ConvexBody::ConvexBody(Ellipsoid e) : impl_(std::make_shared<Impl>(Rep(std::move(e)))) {}

ConvexBody ConvexBody::from_points(const Mat& pts) {
    auto h = std::make_shared<Hull>(convex_hull(pts));
    ConvexBody body{VPolytope(h->vertices(), /*reduce=*/false)};
    body.impl_->hull = h;
    return body;
}

int ConvexBody::dim() const {
    return std::visit([](const auto& r) { return r.dim(); }, impl_->rep);
}

const ConvexBody::Rep& ConvexBody::rep() const { return impl_->rep; }

bool ConvexBody::is_polytope() const {
    return !std::holds_alternative<Ellipsoid>(impl_->rep);
}

bool ConvexBody::is_ellipsoid() const {
    return std::holds_alternative<Ellipsoid>(impl_->rep);
}

const Ellipsoid& ConvexBody::ellipsoid() const {
    if (!is_ellipsoid()) throw Error("ConvexBody: not an ellipsoid");
    return std::get<Ellipsoid>(impl_->rep);
}

namespace {

// Vertex enumeration for {Ax <= b} by hulling the polar point set about
// an interior point: merged facets of the polar are the primal vertices.
Mat enumerate_h_vertices(const Mat& A, const Vec& b) {
    auto [center, r] = chebyshev_center(A, b);
    if (r <= 1e-12) throw DegenerateBody("vertex enumeration: no interior point");
    Vec bs = b - A * center;
    Mat polar_pts(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i) polar_pts.row(i) = A.row(i) / bs[i];
    Hull h = convex_hull(polar_pts);
    auto [PA, Pb] = h.h_rep();
    Mat verts(PA.rows(), PA.cols());
    for (int i = 0; i < PA.rows(); ++i)
        verts.row(i) = PA.row(i) / Pb[i] + center.transpose();
    return verts;
}

}  // namespace

const Mat& ConvexBody::vertices() const {
    Impl& im = *impl_;
    std::lock_guard<std::mutex> lock(im.mu);
    if (im.verts) return *im.verts;
    if (const auto* v = std::get_if<VPolytope>(&im.rep)) {
        im.verts = std::make_shared<const Mat>(v->vertices());
    } else if (const auto* hp = std::get_if<HPolytope>(&im.rep)) {
        im.verts = std::make_shared<const Mat>(enumerate_h_vertices(hp->A(), hp->b()));
    } else {
        throw NonPolytope("ConvexBody::vertices on an ellipsoid");
    }
    return *im.verts;
}

const Hull& ConvexBody::hull() const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->hull) return *impl_->hull;
    }
    const Mat& v = vertices();
    auto h = std::make_shared<Hull>(convex_hull(v));
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->hull) impl_->hull = h;
    return *impl_->hull;
}

std::pair<const Mat&, const Vec&> ConvexBody::facets() const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->facetA) return {*impl_->facetA, *impl_->facetb};
    }
    if (const auto* hp = std::get_if<HPolytope>(&impl_->rep)) {
        // normalize rows to unit normals
        Mat A = hp->A();
        Vec b = hp->b();
        for (int i = 0; i < A.rows(); ++i) {
            double nr = A.row(i).norm();
            A.row(i) /= nr;
            b[i] /= nr;
        }
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (!impl_->facetA) {
            impl_->facetA = std::make_shared<const Mat>(std::move(A));
            impl_->facetb = std::make_shared<const Vec>(std::move(b));
        }
        return {*impl_->facetA, *impl_->facetb};
    }
    if (is_ellipsoid()) throw NonPolytope("ConvexBody::facets on an ellipsoid");
    auto [A, b] = hull().h_rep();
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->facetA) {
        impl_->facetA = std::make_shared<const Mat>(std::move(A));
        impl_->facetb = std::make_shared<const Vec>(std::move(b));
    }
    return {*impl_->facetA, *impl_->facetb};
}

double ConvexBody::support(const Vec& u) const {
    if (const auto* e = std::get_if<Ellipsoid>(&impl_->rep)) {
        Vec w = e->shape().ldlt().solve(u);
        return e->center().dot(u) + std::sqrt(u.dot(w));
    }
    return (vertices() * u).maxCoeff();
}

double ConvexBody::radial(const Vec& dir) const {
    if (const auto* e = std::get_if<Ellipsoid>(&impl_->rep)) {
        // positive root of t^2 d^T M d - 2 t d^T M c + c^T M c - 1 = 0
        const Mat& M = e->shape();
        const Vec& c = e->center();
        double a = dir.dot(M * dir);
        double bq = -2.0 * dir.dot(M * c);
        double cq = c.dot(M * c) - 1.0;
        double disc = bq * bq - 4.0 * a * cq;
        if (disc <= 0.0 || cq > 0.0)
            throw PointNotInterior("radial: origin not interior to ellipsoid");
        return (-bq + std::sqrt(disc)) / (2.0 * a);
    }
    auto [A, b] = facets();
    Vec num = A * dir;
    double t = std::numeric_limits<double>::infinity();
    for (int i = 0; i < A.rows(); ++i) {
        if (b[i] <= 0.0 && num[i] >= 0.0) continue;
        if (num[i] > 1e-14) t = std::min(t, b[i] / num[i]);
    }
    if (!(t > 0.0) || !std::isfinite(t))
        throw PointNotInterior("radial: origin not interior");
    return t;
}

double ConvexBody::gauge(const Vec& x) const {
    if (const auto* e = std::get_if<Ellipsoid>(&impl_->rep)) {
        if (e->center().norm() < 1e-14) return std::sqrt(x.dot(e->shape() * x));
        double nx = x.norm();
        if (nx < 1e-300) return 0.0;
        return nx / radial(x / nx);
    }
    auto [A, b] = facets();
    double g = 0.0;
    for (int i = 0; i < A.rows(); ++i) {
        if (b[i] <= 1e-14) throw PointNotInterior("gauge: origin not interior");
        g = std::max(g, A.row(i).dot(x) / b[i]);
    }
    return std::max(g, 0.0);
}

bool ConvexBody::contains(const Vec& x, double tol) const {
    if (const auto* e = std::get_if<Ellipsoid>(&impl_->rep)) {
        Vec d = x - e->center();
        return d.dot(e->shape() * d) <= 1.0 + tol;
    }
    auto [A, b] = facets();
    return ((A * x - b).array() <= tol).all();
}

std::shared_ptr<const MomentSummary> ConvexBody::cached_moments() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->summary;
}

void ConvexBody::cache_moments(MomentSummary m) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->summary) impl_->summary = std::make_shared<const MomentSummary>(std::move(m));
}

// ---- operations -----------------------------------------------------------

ConvexBody polar(const ConvexBody& K, const Vec& x) {
    const int n = K.dim();
    if (x.size() != n) throw DimensionMismatch("polar: point dimension");
    if (K.is_ellipsoid()) {
        const Ellipsoid& e = K.ellipsoid();
        if ((x - e.center()).norm() > 1e-9)
            throw Error("polar: ellipsoid polar is only supported about its center");
        return ConvexBody(Ellipsoid(Vec::Zero(n), e.shape().inverse()));
    }
    const Mat& V = K.vertices();
    const double scale = std::max(1.0, V.cwiseAbs().maxCoeff());
    Mat A(V.rows(), n);
    for (int i = 0; i < V.rows(); ++i) A.row(i) = V.row(i) - x.transpose();
    // interiority margin in support terms
    auto [FA, Fb] = K.facets();
    double margin = (Fb - FA * x).minCoeff();
    if (margin <= 1e-9 * scale)
        throw PointNotInterior("polar: point not strictly interior (margin below 1e-9)");
    Vec ones = Vec::Ones(V.rows());
    return ConvexBody(HPolytope(std::move(A), std::move(ones), /*validate=*/false));
}

ConvexBody polar(const ConvexBody& K) { return polar(K, Vec::Zero(K.dim())); }

VPolytope minkowski_sum(const VPolytope& K, const VPolytope& L) {
    if (K.dim() != L.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
    const Mat& a = K.vertices();
    const Mat& b = L.vertices();
    Mat sums(a.rows() * b.rows(), a.cols());
    int r = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j) sums.row(r++) = a.row(i) + b.row(j);
    return VPolytope(std::move(sums), /*reduce=*/true);
}

ConvexBody minkowski_sum(const ConvexBody& K, const ConvexBody& L) {
    if (K.dim() != L.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
    if (!K.is_polytope() || !L.is_polytope())
        throw NonPolytope("minkowski_sum: polytopes only");
    const Mat& a = K.vertices();
    const Mat& b = L.vertices();
    Mat sums(a.rows() * b.rows(), a.cols());
    int r = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j) sums.row(r++) = a.row(i) + b.row(j);
    return ConvexBody::from_points(sums);
}

ConvexBody negate(const ConvexBody& K) {
    const int n = K.dim();
    return affine_image(K, AffineMap(-Mat::Identity(n, n), Vec::Zero(n)));
}

ConvexBody difference_body(const ConvexBody& K) {
    if (K.is_ellipsoid()) {
        const Ellipsoid& e = K.ellipsoid();
        return ConvexBody(Ellipsoid(Vec::Zero(K.dim()), e.shape() / 4.0));
    }
    return minkowski_sum(K, negate(K));
}

namespace {

Mat boundary_sample(const ConvexBody& K, int n_dirs) {
    const int n = K.dim();
    if (K.is_polytope()) return K.vertices();
    const Ellipsoid& e = K.ellipsoid();
    Mat dirs = sphere_grid(n, n_dirs);
    Mat pts(dirs.rows(), n);
    for (int i = 0; i < dirs.rows(); ++i)
        pts.row(i) = e.support_point(dirs.row(i).transpose()).transpose();
    return pts;
}

}  // namespace

ConvexBody convex_hull_union(const ConvexBody& K, const ConvexBody& L) {
    if (K.dim() != L.dim()) throw DimensionMismatch("convex_hull_union: dimensions differ");
    const int n = K.dim();
    Mat a = boundary_sample(K, 64 * n);
    Mat b = boundary_sample(L, 64 * n);
    Mat all(a.rows() + b.rows(), n);
    all << a, b;
    return ConvexBody::from_points(all);
}

ConvexBody affine_image(const ConvexBody& K, const AffineMap& T) {
    if (T.dim() != K.dim()) throw DimensionMismatch("affine_image: dimensions differ");
    if (const auto* e = std::get_if<Ellipsoid>(&K.rep())) {
        Mat Li = T.linear().inverse();
        Mat M2 = Li.transpose() * e->shape() * Li;
        return ConvexBody(Ellipsoid(T(e->center()), 0.5 * (M2 + M2.transpose())));
    }
    if (const auto* hp = std::get_if<HPolytope>(&K.rep())) {
        // Ax <= b  ->  A T^{-1} (x' - s) <= b
        Mat Li = T.linear().inverse();
        Mat A2 = hp->A() * Li;
        Vec b2 = hp->b() + A2 * T.shift();
        return ConvexBody(HPolytope(std::move(A2), std::move(b2), /*validate=*/false));
    }
    const Mat& V = K.vertices();
    Mat V2(V.rows(), V.cols());
    for (int i = 0; i < V.rows(); ++i) V2.row(i) = T(V.row(i).transpose()).transpose();
    return ConvexBody(VPolytope(std::move(V2), /*reduce=*/false));
}

ConvexBody translate(const ConvexBody& K, const Vec& t) {
    return affine_image(K, AffineMap(Mat::Identity(K.dim(), K.dim()), t));
}

ConvexBody scale_body(const ConvexBody& K, double s) {
    if (s <= 0.0) throw Error("scale_body: nonpositive factor");
    const int n = K.dim();
    return affine_image(K, AffineMap(s * Mat::Identity(n, n), Vec::Zero(n)));
}

// ---- standard bodies ------------------------------------------------------

ConvexBody make_cube(int n, double r) {
    Mat A(2 * n, n);
    A.setZero();
    Vec b = Vec::Constant(2 * n, r);
    for (int i = 0; i < n; ++i) {
        A(2 * i, i) = 1.0;
        A(2 * i + 1, i) = -1.0;
    }
    return ConvexBody(HPolytope(std::move(A), std::move(b), /*validate=*/false));
}

ConvexBody make_cross_polytope(int n, double r) {
    Mat V = Mat::Zero(2 * n, n);
    for (int i = 0; i < n; ++i) {
        V(2 * i, i) = r;
        V(2 * i + 1, i) = -r;
    }
    return ConvexBody(VPolytope(std::move(V), /*reduce=*/false));
}

ConvexBody make_simplex(int n) {
    Mat V = Mat::Zero(n + 1, n);
    for (int i = 0; i < n; ++i) V(i + 1, i) = 1.0;
    return ConvexBody(VPolytope(std::move(V), /*reduce=*/false));
}

ConvexBody make_ball(int n, double r) {
    return ConvexBody(Ellipsoid(Vec::Zero(n), Mat::Identity(n, n) / (r * r)));
}

}  // namespace cvx
