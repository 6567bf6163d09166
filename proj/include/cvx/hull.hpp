#pragma once

#include <vector>

#include "cvx/linalg.hpp"

namespace cvx {

/// Simplicial boundary facet of a convex hull: d point ids spanning a
/// supporting hyperplane <normal, x> = offset with unit outer normal.
struct HullFacet {
    Vec normal;
    double offset = 0.0;
    std::vector<int> vs;
};

/// Full-dimensional convex hull of a point set in R^d, d <= 8.
/// The boundary is kept as a simplicial complex (coplanar facets are
/// merged only on demand, for the H-representation).
struct Hull {
    int dim = 0;
    Mat pts;                        // deduplicated input points (rows)
    std::vector<HullFacet> facets;  // simplicial boundary
    std::vector<int> vertex_ids;    // extreme points among pts rows, sorted
    Vec inner;                      // strictly interior point
    double volume = 0.0;

    Mat vertices() const {
        Mat v(vertex_ids.size(), dim);
        for (std::size_t i = 0; i < vertex_ids.size(); ++i)
            v.row(i) = pts.row(vertex_ids[i]);
        return v;
    }

    /// Merged H-representation {x : Ax <= b}: one row per geometric facet.
    std::pair<Mat, Vec> h_rep(double angle_tol = 1e-7) const;

    /// Exact degree-<=2 moments by simplex decomposition around `inner`:
    /// volume, barycenter, and probability-normalized covariance.
    void moments(double& vol, Vec& barycenter, Mat& covariance) const;
};

/// Quickhull-style incremental hull. Throws DegenerateBody when the
/// points do not affinely span R^d.
Hull convex_hull(const Mat& points, double dedup_tol = 1e-10);

/// Volume of conv(points); convenience wrapper.
double hull_volume(const Mat& points);

}  // namespace cvx
