#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slackkit/gale.hpp"
#include "slackkit/perles_data.hpp"
#include "slackkit/polytope.hpp"

namespace slackkit {

// --- elementary constructions -------------------------------------------

inline VRep simplex(std::size_t d) {
    if (d < 1) throw ValidationError("simplex dimension must be positive");
    VRep p{d, ExactMatrix<Rational>(d + 1, d)};
    for (std::size_t i = 0; i < d; ++i) p.vertices(i + 1, i) = 1;
    return p;
}

inline VRep cube(std::size_t d) {
    if (d < 1) throw ValidationError("cube dimension must be positive");
    VRep p{d, ExactMatrix<Rational>(std::size_t(1) << d, d)};
    for (std::size_t i = 0; i < p.vertices.rows(); ++i)
        for (std::size_t j = 0; j < d; ++j) p.vertices(i, j) = (i >> (d - 1 - j)) & 1;
    return p;
}

inline VRep crosspolytope(std::size_t d) {
    if (d < 1) throw ValidationError("cross-polytope dimension must be positive");
    VRep p{d, ExactMatrix<Rational>(2 * d, d)};
    for (std::size_t i = 0; i < d; ++i) {
        p.vertices(i, i) = 1;
        p.vertices(d + i, i) = -1;
    }
    return p;
}

inline VRep product(const VRep& a, const VRep& b) {
    VRep p{a.d + b.d, ExactMatrix<Rational>(a.vertex_count() * b.vertex_count(), a.d + b.d)};
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.vertex_count(); ++i)
        for (std::size_t j = 0; j < b.vertex_count(); ++j, ++r) {
            for (std::size_t k = 0; k < a.d; ++k) p.vertices(r, k) = a.vertices(i, k);
            for (std::size_t k = 0; k < b.d; ++k) p.vertices(r, a.d + k) = b.vertices(j, k);
        }
    return p;
}

// Free sum conv((A,0) ∪ (0,B)).  Each operand is first translated so its
// vertex barycenter (always interior) sits at the origin.
inline VRep free_sum(const VRep& a, const VRep& b) {
    auto centered = [](const VRep& p) {
        std::vector<Rational> bary(p.d, Rational(0));
        for (std::size_t i = 0; i < p.vertex_count(); ++i)
            for (std::size_t j = 0; j < p.d; ++j) bary[j] += p.vertices(i, j);
        for (auto& q : bary) q /= Rational(static_cast<long>(p.vertex_count()));
        VRep out = p;
        for (std::size_t i = 0; i < p.vertex_count(); ++i)
            for (std::size_t j = 0; j < p.d; ++j) out.vertices(i, j) -= bary[j];
        return out;
    };
    VRep ca = centered(a), cb = centered(b);
    VRep p{a.d + b.d, ExactMatrix<Rational>(a.vertex_count() + b.vertex_count(), a.d + b.d)};
    for (std::size_t i = 0; i < ca.vertex_count(); ++i)
        for (std::size_t k = 0; k < ca.d; ++k) p.vertices(i, k) = ca.vertices(i, k);
    for (std::size_t j = 0; j < cb.vertex_count(); ++j)
        for (std::size_t k = 0; k < cb.d; ++k)
            p.vertices(ca.vertex_count() + j, ca.d + k) = cb.vertices(j, k);
    return p;
}

inline VRep pyramid(const VRep& base, std::size_t times = 1) {
    VRep p = base;
    for (std::size_t t = 0; t < times; ++t) {
        VRep next{p.d + 1, ExactMatrix<Rational>(p.vertex_count() + 1, p.d + 1)};
        for (std::size_t i = 0; i < p.vertex_count(); ++i)
            for (std::size_t j = 0; j < p.d; ++j) next.vertices(i, j) = p.vertices(i, j);
        next.vertices(p.vertex_count(), p.d) = 1;  // apex
        p = std::move(next);
    }
    return p;
}

inline VRep prism(const VRep& base) {
    VRep segment{1, ExactMatrix<Rational>(2, 1)};
    segment.vertices(1, 0) = 1;
    return product(base, segment);
}

// --- named catalog entries ------------------------------------------------

inline VRep seven_vertex_four_polytope() {
    // conv(0, 2e1, 2e2, 2e3, e1+e2-e3, e4, e3+e4), with the vertices
    // listed in the row order of the published slack matrix
    VRep p{4, ExactMatrix<Rational>(7, 4)};
    auto set = [&](std::size_t i, long a, long b, long c, long d) {
        p.vertices(i, 0) = a;
        p.vertices(i, 1) = b;
        p.vertices(i, 2) = c;
        p.vertices(i, 3) = d;
    };
    set(0, 0, 0, 0, 0);
    set(1, 0, 0, 0, 1);
    set(2, 0, 0, 1, 1);
    set(3, 0, 0, 2, 0);
    set(4, 2, 0, 0, 0);
    set(5, 1, 1, -1, 0);
    set(6, 0, 2, 0, 0);
    return p;
}

inline VRep eight_vertex_five_polytope() {
    // e1, e2, e3, e4, -e1-2e2-e3, -2e1-e2-e4, -2e1-2e2+e5, -2e1-2e2-e5
    VRep p{5, ExactMatrix<Rational>(8, 5)};
    auto set = [&](std::size_t i, long a, long b, long c, long d, long e) {
        p.vertices(i, 0) = a;
        p.vertices(i, 1) = b;
        p.vertices(i, 2) = c;
        p.vertices(i, 3) = d;
        p.vertices(i, 4) = e;
    };
    set(0, 1, 0, 0, 0, 0);
    set(1, 0, 1, 0, 0, 0);
    set(2, 0, 0, 1, 0, 0);
    set(3, 0, 0, 0, 1, 0);
    set(4, -1, -2, -1, 0, 0);
    set(5, -2, -1, 0, -1, 0);
    set(6, -2, -2, 0, 0, 1);
    set(7, -2, -2, 0, 0, -1);
    return p;
}

// Printed supports, used as golden references; columns follow the
// published ordering, which fixes the row-major variable numbering.
inline SlackPattern published_pattern_7vertex() {
    return pattern_from_strings(4, {
        "0*000*0",
        "*0000*0",
        "*0*000*",
        "0**000*",
        "0000*0*",
        "000***0",
        "00**000",
    });
}

inline SlackPattern published_pattern_8vertex() {
    return pattern_from_strings(5, {
        "0*0000*00000",
        "000**0000000",
        "00000***00**",
        "*00*0*00*0*0",
        "***00000**00",
        "00*0*00*0*0*",
        "*0*00*0*0000",
        "00000000****",
    });
}

inline GaleDiagram perles_gale_diagram() {
    return GaleDiagram{perles_data::gale_vectors(), perles_data::gale_labels()};
}

using CatalogEntry = std::variant<VRep, SlackPattern>;

inline std::vector<std::string> catalog_names() {
    return {"simplex<d>",
            "cube<d>",
            "cross<d>",
            "square",
            "triangle",
            "bisimplex3",
            "example-7vertex-4polytope",
            "example-8vertex-5polytope",
            "perles",
            "product(<a>,<b>)",
            "freesum(<a>,<b>)",
            "pyramid(<a>[,r])",
            "prism(<a>)"};
}

// Resolves a catalog name, including nested constructions such as
// freesum(simplex2,simplex1).
inline CatalogEntry construct_catalog(const std::string& name);

namespace detail {

inline std::optional<std::size_t> parse_suffix_int(const std::string& name,
                                                   const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::size_t v = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        v = v * 10 + (name[i] - '0');
    }
    return v;
}

inline VRep catalog_vrep(const std::string& name) {
    CatalogEntry e = construct_catalog(name);
    if (auto* p = std::get_if<VRep>(&e)) return *p;
    throw ValidationError("catalog entry '" + name + "' has no vertex description");
}

// splits "a,b" at the top-level comma
inline std::pair<std::string, std::string> split_args(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    throw ParseError("expected two comma-separated arguments in '" + s + "'");
}

} // namespace detail

inline CatalogEntry construct_catalog(const std::string& name) {
    using detail::catalog_vrep;
    if (name == "square") return cube(2);
    if (name == "triangle") return simplex(2);
    if (name == "bisimplex3") return free_sum(simplex(2), simplex(1));
    if (name == "example-7vertex-4polytope") return seven_vertex_four_polytope();
    if (name == "example-8vertex-5polytope") return eight_vertex_five_polytope();
    if (name == "perles") return perles_data::pattern();
    if (auto d = detail::parse_suffix_int(name, "simplex")) return simplex(*d);
    if (auto d = detail::parse_suffix_int(name, "cube")) return cube(*d);
    if (auto d = detail::parse_suffix_int(name, "cross")) return crosspolytope(*d);
    auto call = [&](const std::string& fn) -> std::optional<std::string> {
        if (name.size() > fn.size() + 2 && name.compare(0, fn.size() + 1, fn + "(") == 0 &&
            name.back() == ')')
            return name.substr(fn.size() + 1, name.size() - fn.size() - 2);
        return std::nullopt;
    };
    if (auto args = call("product")) {
        auto [a, b] = detail::split_args(*args);
        return product(catalog_vrep(a), catalog_vrep(b));
    }
    if (auto args = call("freesum")) {
        auto [a, b] = detail::split_args(*args);
        return free_sum(catalog_vrep(a), catalog_vrep(b));
    }
    if (auto args = call("pyramid")) {
        std::size_t times = 1;
        std::string base = *args;
        try {
            auto [a, b] = detail::split_args(*args);
            base = a;
            times = std::stoul(b);
        } catch (const ParseError&) {
        }
        return pyramid(catalog_vrep(base), times);
    }
    if (auto args = call("prism")) return prism(catalog_vrep(*args));
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown catalog name '" + name + "'; known entries: " + known);
}

} // namespace slackkit
