#include "cvx/hull.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <vector>

#include "cvx/rng.hpp"

namespace cvx {
namespace {

struct HullRetry {};  // internal: inconsistent complex, joggle and restart

struct WorkFacet {
    Vec normal;
    double offset = 0.0;
    std::vector<int> vs;         // d point ids, sorted
    std::vector<int> neighbors;  // neighbor across ridge omitting vs[i]
    std::vector<int> outside;
    int farthest = -1;
    double far_dist = 0.0;
    bool alive = true;
    int visit_tag = -1;
    bool visit_visible = false;
};

Mat dedup_points(const Mat& in, double tol) {
    const int n = static_cast<int>(in.cols());
    std::vector<int> keep;
    std::map<std::vector<long long>, int> seen;
    for (int i = 0; i < in.rows(); ++i) {
        std::vector<long long> key(n);
        for (int j = 0; j < n; ++j)
            key[j] = static_cast<long long>(std::llround(in(i, j) / tol));
        if (seen.emplace(key, i).second) keep.push_back(i);
    }
    Mat out(keep.size(), n);
    for (std::size_t i = 0; i < keep.size(); ++i) out.row(i) = in.row(keep[i]);
    return out;
}

// Unit outer normal of the hyperplane through d points, oriented away
// from the interior reference. Fails on affinely dependent points or an
// ambiguous orientation.
bool facet_plane(const Mat& pts, const std::vector<int>& vs, const Vec& ref,
                 double scale, Vec& normal, double& offset) {
    const int d = static_cast<int>(pts.cols());
    Mat B(d - 1, d);
    for (int i = 1; i < d; ++i) B.row(i - 1) = pts.row(vs[i]) - pts.row(vs[0]);
    Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullV);
    if (svd.singularValues()[d - 2] < 1e-12 * (scale + svd.singularValues()[0]))
        return false;
    normal = svd.matrixV().col(d - 1);
    offset = normal.dot(pts.row(vs[0]));
    double side = normal.dot(ref) - offset;
    if (std::abs(side) < 1e-12 * scale) return false;
    if (side > 0.0) {
        normal = -normal;
        offset = -offset;
    }
    return true;
}

Hull build_hull(const Mat& pts, double eps, double scale) {
    const int d = static_cast<int>(pts.cols());
    const int np = static_cast<int>(pts.rows());

    // initial simplex: greedily maximize distance to the current affine hull
    std::vector<int> simplex;
    {
        int i1 = 0;
        double best = -1.0;
        for (int i = 0; i < np; ++i) {
            double dist = (pts.row(i) - pts.row(0)).norm();
            if (dist > best) { best = dist; i1 = i; }
        }
        if (best < eps) throw DegenerateBody("convex_hull: all points coincide");
        simplex = {0, i1};
        Vec origin = pts.row(0).transpose();
        Mat basis(d, 1);
        basis.col(0) = (pts.row(i1).transpose() - origin).normalized();
        while (static_cast<int>(simplex.size()) < d + 1) {
            int bi = -1;
            double bd = eps;
            for (int i = 0; i < np; ++i) {
                Vec r = pts.row(i).transpose() - origin;
                r -= basis * (basis.transpose() * r);
                double dist = r.norm();
                if (dist > bd) { bd = dist; bi = i; }
            }
            if (bi < 0) throw DegenerateBody("convex_hull: points not full-dimensional");
            Vec r = pts.row(bi).transpose() - origin;
            r -= basis * (basis.transpose() * r);
            basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
            basis.col(basis.cols() - 1) = r.normalized();
            simplex.push_back(bi);
        }
    }

    Vec inner = Vec::Zero(d);
    for (int id : simplex) inner += pts.row(id).transpose();
    inner /= static_cast<double>(simplex.size());

    std::vector<WorkFacet> fs;
    fs.reserve(4096);
    for (int skip = 0; skip <= d; ++skip) {
        WorkFacet f;
        for (int i = 0; i <= d; ++i)
            if (i != skip) f.vs.push_back(simplex[i]);
        std::sort(f.vs.begin(), f.vs.end());
        if (!facet_plane(pts, f.vs, inner, scale, f.normal, f.offset))
            throw HullRetry{};
        f.neighbors.assign(d, -1);
        fs.push_back(std::move(f));
    }
    for (int a = 0; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) {
            std::vector<int> ridge;
            for (int i = 0; i <= d; ++i)
                if (i != a && i != b) ridge.push_back(simplex[i]);
            std::sort(ridge.begin(), ridge.end());
            auto hook = [&](int fi, int other) {
                for (int i = 0; i < d; ++i) {
                    std::vector<int> r;
                    for (int k = 0; k < d; ++k)
                        if (k != i) r.push_back(fs[fi].vs[k]);
                    if (r == ridge) fs[fi].neighbors[i] = other;
                }
            };
            hook(a, b);
            hook(b, a);
        }

    auto assign_points = [&](const std::vector<int>& cand,
                             const std::vector<int>& facet_ids) {
        for (int p : cand) {
            for (int fi : facet_ids) {
                WorkFacet& f = fs[fi];
                if (!f.alive) continue;
                double dist = f.normal.dot(pts.row(p)) - f.offset;
                if (dist > eps) {
                    f.outside.push_back(p);
                    if (dist > f.far_dist) { f.far_dist = dist; f.farthest = p; }
                    break;
                }
            }
        }
    };
    {
        std::vector<int> rest;
        for (int i = 0; i < np; ++i)
            if (std::find(simplex.begin(), simplex.end(), i) == simplex.end())
                rest.push_back(i);
        std::vector<int> ids(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) ids[i] = static_cast<int>(i);
        assign_points(rest, ids);
    }

    std::deque<int> pending;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!fs[i].outside.empty()) pending.push_back(static_cast<int>(i));

    int tag = 0;
    while (!pending.empty()) {
        int seed = pending.front();
        pending.pop_front();
        if (!fs[seed].alive || fs[seed].outside.empty()) continue;
        const int p = fs[seed].farthest;
        ++tag;

        auto visible_check = [&](int fi) {
            WorkFacet& f = fs[fi];
            if (f.visit_tag != tag) {
                f.visit_tag = tag;
                f.visit_visible = f.normal.dot(pts.row(p)) - f.offset > eps;
            }
            return f.visit_visible;
        };

        // visible region BFS; horizon = (visible facet, ridge slot) pairs
        std::vector<int> visible;
        std::vector<std::pair<int, int>> horizon;
        std::vector<int> stack{seed};
        fs[seed].visit_tag = tag;
        fs[seed].visit_visible = true;
        std::map<int, char> pushed;
        pushed[seed] = 1;
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            visible.push_back(fi);
            for (int i = 0; i < d; ++i) {
                int nb = fs[fi].neighbors[i];
                if (nb < 0) throw HullRetry{};
                if (visible_check(nb)) {
                    if (!pushed.count(nb)) {
                        pushed[nb] = 1;
                        stack.push_back(nb);
                    }
                } else {
                    horizon.emplace_back(fi, i);
                }
            }
        }

        std::vector<int> orphan;
        for (int fi : visible) {
            fs[fi].alive = false;
            for (int q : fs[fi].outside)
                if (q != p) orphan.push_back(q);
            fs[fi].outside.clear();
            fs[fi].outside.shrink_to_fit();
        }

        // cone of new facets over the horizon ridges
        std::map<std::vector<int>, std::pair<int, int>> ridge_map;
        std::vector<int> new_ids;
        for (auto [fi, pos] : horizon) {
            int hidden = fs[fi].neighbors[pos];
            std::vector<int> ridge;
            for (int k = 0; k < d; ++k)
                if (k != pos) ridge.push_back(fs[fi].vs[k]);
            WorkFacet nf;
            nf.vs = ridge;
            nf.vs.push_back(p);
            std::sort(nf.vs.begin(), nf.vs.end());
            if (!facet_plane(pts, nf.vs, inner, scale, nf.normal, nf.offset))
                throw HullRetry{};
            nf.neighbors.assign(d, -1);
            int nid = static_cast<int>(fs.size());
            for (int k = 0; k < d; ++k)
                if (nf.vs[k] == p) nf.neighbors[k] = hidden;
            // rewire the hidden facet to the new one across the same ridge
            bool wired = false;
            for (int k = 0; k < d; ++k) {
                std::vector<int> r;
                for (int t = 0; t < d; ++t)
                    if (t != k) r.push_back(fs[hidden].vs[t]);
                if (r == ridge) {
                    fs[hidden].neighbors[k] = nid;
                    wired = true;
                }
            }
            if (!wired) throw HullRetry{};
            fs.push_back(std::move(nf));
            new_ids.push_back(nid);
        }
        for (int nid : new_ids) {
            for (int k = 0; k < d; ++k) {
                if (fs[nid].neighbors[k] >= 0) continue;
                std::vector<int> ridge;
                for (int t = 0; t < d; ++t)
                    if (t != k) ridge.push_back(fs[nid].vs[t]);
                auto it = ridge_map.find(ridge);
                if (it == ridge_map.end()) {
                    ridge_map[ridge] = {nid, k};
                } else {
                    fs[nid].neighbors[k] = it->second.first;
                    fs[it->second.first].neighbors[it->second.second] = nid;
                }
            }
        }
        for (int nid : new_ids)
            for (int k = 0; k < d; ++k)
                if (fs[nid].neighbors[k] < 0) throw HullRetry{};
        assign_points(orphan, new_ids);
        for (int nid : new_ids)
            if (!fs[nid].outside.empty()) pending.push_back(nid);
    }

    Hull hull;
    hull.dim = d;
    hull.pts = pts;
    std::vector<char> used(np, 0);
    for (const WorkFacet& f : fs) {
        if (!f.alive) continue;
        hull.facets.push_back({f.normal, f.offset, f.vs});
        for (int v : f.vs) used[v] = 1;
    }
    if (hull.facets.empty()) throw DegenerateBody("convex_hull: no facets");

    // extreme-point filter: a boundary point is a vertex iff its incident
    // facet normals span R^d
    std::vector<std::vector<int>> incident(np);
    for (std::size_t fi = 0; fi < hull.facets.size(); ++fi)
        for (int v : hull.facets[fi].vs) incident[v].push_back(static_cast<int>(fi));
    for (int v = 0; v < np; ++v) {
        if (!used[v]) continue;
        if (static_cast<int>(incident[v].size()) < d) continue;
        Mat N(incident[v].size(), d);
        for (std::size_t i = 0; i < incident[v].size(); ++i)
            N.row(i) = hull.facets[incident[v][i]].normal;
        Eigen::JacobiSVD<Mat> svd(N);
        if (svd.singularValues()[d - 1] > 1e-7) hull.vertex_ids.push_back(v);
    }
    if (static_cast<int>(hull.vertex_ids.size()) < d + 1)
        throw DegenerateBody("convex_hull: fewer than d+1 vertices");

    Vec centroid = Vec::Zero(d);
    for (int v : hull.vertex_ids) centroid += pts.row(v).transpose();
    centroid /= static_cast<double>(hull.vertex_ids.size());
    hull.inner = centroid;

    double vol = 0.0;
    Mat E(d, d);
    for (const HullFacet& f : hull.facets) {
        for (int i = 0; i < d; ++i)
            E.col(i) = pts.row(f.vs[i]).transpose() - centroid;
        vol += std::abs(E.determinant());
    }
    double dfact = 1.0;
    for (int i = 2; i <= d; ++i) dfact *= i;
    hull.volume = vol / dfact;
    return hull;
}

}  // namespace

Hull convex_hull(const Mat& points_in, double dedup_tol) {
    if (points_in.rows() == 0) throw DegenerateBody("convex_hull: empty input");
    const int d = static_cast<int>(points_in.cols());
    if (d < 2 || d > 8) throw TooHighDimensional("convex_hull: dimension outside [2,8]");
    Mat pts = dedup_points(points_in, dedup_tol);
    if (pts.rows() < d + 1) throw DegenerateBody("convex_hull: too few points");
    const double scale = std::max(1.0, pts.cwiseAbs().maxCoeff());

    // degenerate cone configurations restart with a deterministic joggle
    double joggle = 0.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Mat work = pts;
        if (joggle > 0.0) {
            std::mt19937_64 eng = make_engine(0xC0FFEEULL + attempt, 17);
            std::uniform_real_distribution<double> u(-joggle, joggle);
            for (int i = 0; i < work.rows(); ++i)
                for (int j = 0; j < d; ++j) work(i, j) += u(eng);
        }
        try {
            return build_hull(work, 1e-9 * scale, scale);
        } catch (const HullRetry&) {
            joggle = (joggle == 0.0) ? 1e-11 * scale : joggle * 100.0;
        }
    }
    throw DegenerateBody("convex_hull: could not build a consistent facet complex");
}

std::pair<Mat, Vec> Hull::h_rep(double angle_tol) const {
    std::vector<Vec> normals;
    std::vector<double> offsets;
    const double scale = std::max(1.0, pts.cwiseAbs().maxCoeff());
    for (const HullFacet& f : facets) {
        bool found = false;
        for (std::size_t g = 0; g < normals.size(); ++g) {
            if ((normals[g] - f.normal).norm() < angle_tol &&
                std::abs(offsets[g] - f.offset) < angle_tol * scale) {
                found = true;
                break;
            }
        }
        if (!found) {
            normals.push_back(f.normal);
            offsets.push_back(f.offset);
        }
    }
    Mat A(normals.size(), dim);
    Vec b(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        A.row(i) = normals[i].transpose();
        b[i] = offsets[i];
    }
    return {A, b};
}

void Hull::moments(double& vol, Vec& barycenter, Mat& covariance) const {
    const int d = dim;
    double dfact = 1.0;
    for (int i = 2; i <= d; ++i) dfact *= i;
    vol = 0.0;
    Vec first = Vec::Zero(d);
    Mat second = Mat::Zero(d, d);
    Mat E(d, d);
    Mat W(d + 1, d);
    for (const HullFacet& f : facets) {
        for (int i = 0; i < d; ++i) {
            W.row(i) = pts.row(f.vs[i]);
            E.col(i) = pts.row(f.vs[i]).transpose() - inner;
        }
        W.row(d) = inner.transpose();
        double v = std::abs(E.determinant()) / dfact;
        if (v == 0.0) continue;
        vol += v;
        Vec s = W.colwise().sum().transpose();
        first += v / (d + 1.0) * s;
        // int_S x x^T dx = vol/((d+1)(d+2)) (sum_i w_i w_i^T + s s^T)
        second += v / ((d + 1.0) * (d + 2.0)) * (W.transpose() * W + s * s.transpose());
    }
    if (vol <= 0.0) throw DegenerateBody("Hull::moments: zero volume");
    barycenter = first / vol;
    covariance = second / vol - barycenter * barycenter.transpose();
    covariance = 0.5 * (covariance + covariance.transpose());
}

double hull_volume(const Mat& points) { return convex_hull(points).volume; }

}  // namespace cvx
