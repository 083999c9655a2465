#pragma once

#include <string>
#include <vector>

#include "slackkit/matrix.hpp"
#include "slackkit/pattern.hpp"

namespace slackkit {

// Vector configuration dual to a polytope: n vectors spanning Q(sqrt5)^r
// with n - r - 1 the polytope dimension.
struct GaleDiagram {
    ExactMatrix<QuadExt> vectors;  // n x r, rows are the vectors
    std::vector<std::string> labels;

    std::size_t size() const { return vectors.rows(); }
    std::size_t ambient_rank() const { return vectors.cols(); }
};

struct GaleFacets {
    SlackPattern pattern;                           // n rows, one column per circuit
    std::vector<std::vector<std::size_t>> circuits;  // sorted member lists, column order
};

// Positive circuits of the diagram: subsets with a one-dimensional
// dependence space whose generator has full support and uniform sign.
// Facet columns are the circuit supports (vertex i is off facet j iff
// i belongs to circuit j), ordered lexicographically.
inline GaleFacets gale_facets(const GaleDiagram& g) {
    const std::size_t n = g.size(), r = g.ambient_rank();
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r; ++j) zero &= is_zero(g.vectors(i, j));
        if (zero)
            throw ValidationError("degenerate Gale diagram: vector " + std::to_string(i + 1) +
                                  " is zero");
    }
    if (rank(g.vectors) != r)
        throw ValidationError("Gale diagram vectors do not span the ambient space");
    if (n < r + 2) throw ValidationError("too few Gale vectors");

    std::vector<std::vector<std::size_t>> circuits;
    std::vector<std::size_t> subset;
    // enumerate subsets of size 2..r+1 in lexicographic order
    auto consider = [&](const std::vector<std::size_t>& s) {
        ExactMatrix<QuadExt> m(r, s.size());
        for (std::size_t c = 0; c < s.size(); ++c)
            for (std::size_t row = 0; row < r; ++row) m(row, c) = g.vectors(s[c], row);
        auto ns = nullspace(m);
        if (ns.size() != 1) return;
        const auto& dep = ns.front();
        int sign = 0;
        for (const auto& x : dep) {
            int sg = sign_of(x);
            if (sg == 0) return;  // a proper subset is dependent
            if (sign == 0) sign = sg;
            if (sg != sign) return;  // mixed signs: not a positive circuit
        }
        circuits.push_back(s);
    };
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (stack.size() >= 2) consider(stack);
        if (stack.size() == r + 1) return;
        for (std::size_t i = next; i < n; ++i) {
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(circuits.begin(), circuits.end());
    if (circuits.empty()) throw ValidationError("Gale diagram has no positive circuits");
    std::vector<std::vector<int>> support(n, std::vector<int>(circuits.size(), 0));
    for (std::size_t j = 0; j < circuits.size(); ++j)
        for (auto i : circuits[j]) support[i][j] = 1;
    std::size_t d = n - r - 1;
    return GaleFacets{SlackPattern(d, std::move(support)), std::move(circuits)};
}

} // namespace slackkit
