#include <json.hpp>

#include "cvx/bodies.hpp"

namespace cvx {

using nlohmann::json;

namespace {

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("body json: expected matrix");
    Mat m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j[0].size()) throw Error("body json: ragged matrix");
        for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

Vec vec_from_json(const json& j) {
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
    return v;
}

}  // namespace

std::string body_to_json(const ConvexBody& K) {
    json j;
    if (const auto* hp = std::get_if<HPolytope>(&K.rep())) {
        j["type"] = "hpolytope";
        j["A"] = mat_to_json(hp->A());
        j["b"] = vec_to_json(hp->b());
    } else if (const auto* vp = std::get_if<VPolytope>(&K.rep())) {
        j["type"] = "vpolytope";
        j["vertices"] = mat_to_json(vp->vertices());
    } else {
        const Ellipsoid& e = K.ellipsoid();
        j["type"] = "ellipsoid";
        j["center"] = vec_to_json(e.center());
        j["shape"] = mat_to_json(e.shape());
    }
    return j.dump();
}

ConvexBody body_from_json(const std::string& text) {
    json j = json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "hpolytope")
        return ConvexBody(HPolytope(mat_from_json(j.at("A")), vec_from_json(j.at("b"))));
    if (type == "vpolytope")
        return ConvexBody(VPolytope(mat_from_json(j.at("vertices"))));
    if (type == "ellipsoid")
        return ConvexBody(Ellipsoid(vec_from_json(j.at("center")), mat_from_json(j.at("shape"))));
    throw Error("body json: unknown type '" + type + "'");
}

}  // namespace cvx
