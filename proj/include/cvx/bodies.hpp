#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "cvx/hull.hpp"
#include "cvx/linalg.hpp"

namespace cvx {

/// Cached moment data of a body. Covariance is probability-normalized
/// (second moments of the uniform measure on the body).
struct MomentSummary {
    double volume = 0.0;
    Vec barycenter;
    Mat covariance;
    std::map<double, double> iq;  // q -> I_q(K, B_2^n)
    double isotropic_constant = 0.0;
};

/// {x : Ax <= b}. Bounded, full-dimensional.
class HPolytope {
public:
    /// validate runs the LP boundedness check (support finite along +-e_i);
    /// internal constructions that are bounded by construction skip it.
    HPolytope(Mat A, Vec b, bool validate = true);
    const Mat& A() const { return A_; }
    const Vec& b() const { return b_; }
    int dim() const { return static_cast<int>(A_.cols()); }

private:
    Mat A_;
    Vec b_;
};

/// conv(rows of V). Vertex list is irredundant after construction.
class VPolytope {
public:
    explicit VPolytope(Mat V, bool reduce = true);
    const Mat& vertices() const { return V_; }
    int dim() const { return static_cast<int>(V_.cols()); }

private:
    Mat V_;
};

/// {x : (x-c)^T M (x-c) <= 1} with M symmetric positive definite.
class Ellipsoid {
public:
    Ellipsoid(Vec center, Mat shape);
    const Vec& center() const { return c_; }
    const Mat& shape() const { return M_; }
    int dim() const { return static_cast<int>(c_.size()); }
    double volume() const;
    /// Boundary point maximizing <u, .>.
    Vec support_point(const Vec& u) const;

private:
    Vec c_;
    Mat M_;
};

/// Invertible affine map x -> Lx + s with cached determinant.
class AffineMap {
public:
    AffineMap(Mat linear, Vec shift);
    static AffineMap identity(int n);
    const Mat& linear() const { return L_; }
    const Vec& shift() const { return s_; }
    double det() const { return det_; }
    int dim() const { return static_cast<int>(s_.size()); }
    Vec operator()(const Vec& x) const { return L_ * x + s_; }
    AffineMap inverse() const;
    /// this after other: x -> this(other(x)).
    AffineMap compose(const AffineMap& other) const;

private:
    Mat L_;
    Vec s_;
    double det_ = 0.0;
};

/// The universal K: a tagged union of the three representations with
/// write-once caches (dual representation, boundary complex, moments).
/// Immutable after construction; copies share caches.
class ConvexBody {
public:
    using Rep = std::variant<HPolytope, VPolytope, Ellipsoid>;

    explicit ConvexBody(HPolytope p);
    explicit ConvexBody(VPolytope p);
    explicit ConvexBody(Ellipsoid e);

    /// Hull-based construction from a raw point cloud; keeps the boundary
    /// complex as a cache.
    static ConvexBody from_points(const Mat& pts);

    int dim() const;
    const Rep& rep() const;
    bool is_polytope() const;
    bool is_ellipsoid() const;
    const Ellipsoid& ellipsoid() const;

    /// Vertex matrix (rows). Converts H->V on first use. NonPolytope for ellipsoids.
    const Mat& vertices() const;
    /// Facet representation (A, b) with unit normals. NonPolytope for ellipsoids.
    std::pair<const Mat&, const Vec&> facets() const;
    /// Boundary complex of the V-representation.
    const Hull& hull() const;

    double support(const Vec& u) const;
    /// Largest t with t*dir in K; requires 0 in the interior.
    double radial(const Vec& dir) const;
    /// Minkowski functional p_K(x); requires 0 in the interior.
    double gauge(const Vec& x) const;
    bool contains(const Vec& x, double tol = 1e-9) const;

    /// Write-once moment cache used by the moment machinery.
    std::shared_ptr<const MomentSummary> cached_moments() const;
    void cache_moments(MomentSummary m) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// ---- body algebra -------------------------------------------------------

/// (K-x)^o = {y : <z-x, y> <= 1 for all z in K}.
ConvexBody polar(const ConvexBody& K, const Vec& x);
ConvexBody polar(const ConvexBody& K);  // about the origin

VPolytope minkowski_sum(const VPolytope& K, const VPolytope& L);
ConvexBody minkowski_sum(const ConvexBody& K, const ConvexBody& L);

/// K + (-K).
ConvexBody difference_body(const ConvexBody& K);

/// conv(K u L). Ellipsoids are polytopally approximated on 64n support
/// directions before hulling.
ConvexBody convex_hull_union(const ConvexBody& K, const ConvexBody& L);

ConvexBody affine_image(const ConvexBody& K, const AffineMap& T);
ConvexBody translate(const ConvexBody& K, const Vec& t);
ConvexBody scale_body(const ConvexBody& K, double s);
ConvexBody negate(const ConvexBody& K);

// ---- standard bodies ----------------------------------------------------

ConvexBody make_cube(int n, double r = 1.0);
ConvexBody make_cross_polytope(int n, double r = 1.0);
/// conv{0, e_1, ..., e_n}.
ConvexBody make_simplex(int n);
ConvexBody make_ball(int n, double r = 1.0);

// ---- JSON wire format ---------------------------------------------------

std::string body_to_json(const ConvexBody& K);
ConvexBody body_from_json(const std::string& text);

}  // namespace cvx
