#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slackkit/gale.hpp"
#include "slackkit/groebner.hpp"
#include "slackkit/matrix.hpp"
#include "slackkit/pattern.hpp"
#include "slackkit/polytope.hpp"

namespace slackkit {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json to_json(const QuadExt& x) { return Json{{"a", x.a.get_str()}, {"b", x.b.get_str()}}; }

inline QuadExt quadext_from_json(const Json& j) {
    if (j.is_string()) return QuadExt(rational_from_json(j));
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParseError("expected {\"a\":...,\"b\":...} for a quadratic field element");
    return QuadExt(rational_from_json(j["a"]), rational_from_json(j["b"]));
}

template <typename K>
Json matrix_to_json(const ExactMatrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Json to_json(const VRep& p) {
    Json verts = Json::array();
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.d; ++j) row.push_back(to_json(p.vertices(i, j)));
        verts.push_back(std::move(row));
    }
    return Json{{"d", p.d}, {"vertices", std::move(verts)}};
}

inline VRep vrep_from_json(const Json& j) {
    if (!j.contains("d") || !j.contains("vertices"))
        throw ParseError("polytope JSON needs \"d\" and \"vertices\"");
    std::size_t d = j["d"].get<std::size_t>();
    const Json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty()) throw ParseError("\"vertices\" must be a non-empty array");
    VRep p{d, ExactMatrix<Rational>(verts.size(), d)};
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!verts[i].is_array() || verts[i].size() != d)
            throw ParseError("vertex " + std::to_string(i + 1) + " is ragged (expected " +
                             std::to_string(d) + " coordinates)");
        for (std::size_t k = 0; k < d; ++k) p.vertices(i, k) = rational_from_json(verts[i][k]);
    }
    return p;
}

inline Json to_json(const SlackPattern& p) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(p.is_star(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return Json{{"d", p.dimension()}, {"support", std::move(rows)}};
}

inline SlackPattern pattern_from_json(const Json& j) {
    if (!j.contains("d") || !j.contains("support"))
        throw ParseError("pattern JSON needs \"d\" and \"support\"");
    std::vector<std::vector<int>> sup;
    for (const auto& row : j["support"]) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(e.get<int>());
        sup.push_back(std::move(r));
    }
    return SlackPattern(j["d"].get<std::size_t>(), std::move(sup));
}

inline Json to_json(const GaleDiagram& g) {
    Json vecs = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.ambient_rank(); ++j) row.push_back(to_json(g.vectors(i, j)));
        vecs.push_back(std::move(row));
    }
    return Json{{"rank", g.ambient_rank()}, {"vectors", std::move(vecs)}, {"labels", g.labels}};
}

inline GaleDiagram gale_from_json(const Json& j) {
    if (!j.contains("vectors")) throw ParseError("Gale JSON needs \"vectors\"");
    const Json& vecs = j["vectors"];
    if (!vecs.is_array() || vecs.empty()) throw ParseError("\"vectors\" must be a non-empty array");
    std::size_t r = vecs.front().size();
    GaleDiagram g{ExactMatrix<QuadExt>(vecs.size(), r), {}};
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].size() != r) throw ParseError("Gale vector " + std::to_string(i + 1) + " is ragged");
        for (std::size_t k = 0; k < r; ++k) g.vectors(i, k) = quadext_from_json(vecs[i][k]);
    }
    if (j.contains("labels"))
        for (const auto& l : j["labels"]) g.labels.push_back(l.get<std::string>());
    return g;
}

inline Json to_json(const Ideal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    return Json{{"vars", ideal.nvars()}, {"generators", std::move(gens)}};
}

inline Ideal ideal_from_json(const Json& j) {
    if (!j.contains("vars") || !j.contains("generators"))
        throw ParseError("ideal JSON needs \"vars\" and \"generators\"");
    std::size_t t = j["vars"].get<std::size_t>();
    std::vector<Polynomial> gens;
    for (const auto& s : j["generators"]) gens.push_back(Polynomial::parse(t, s.get<std::string>()));
    return Ideal(t, std::move(gens));
}

inline Json basis_to_json(const std::vector<Polynomial>& basis) {
    Json out = Json::array();
    for (const auto& g : basis) out.push_back(g.str());
    return out;
}

inline Json certificate_to_json(const DivisionCertificate& cert) {
    Json quotients = Json::array();
    for (std::size_t k = 0; k < cert.quotients.size(); ++k) {
        if (cert.quotients[k].is_zero()) continue;
        quotients.push_back(Json{{"index", k}, {"poly", cert.quotients[k].str()}});
    }
    return Json{{"quotients", std::move(quotients)}, {"remainder", cert.remainder.str()}};
}

} // namespace slackkit
