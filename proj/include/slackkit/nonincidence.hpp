#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "slackkit/lattice.hpp"
#include "slackkit/pattern.hpp"
#include "slackkit/polynomial.hpp"

namespace slackkit {

// Bipartite graph on vertex rows and facet columns with one edge per
// star of the pattern (vertex i off facet j).  Nodes 0..v-1 are rows,
// v..v+f-1 are columns; edge k carries variable x_{k+1}.
class NonIncidenceGraph {
public:
    explicit NonIncidenceGraph(SlackPattern pattern) : pattern_(std::move(pattern)) {
        const std::size_t v = pattern_.rows(), f = pattern_.cols();
        adj_.resize(v + f);
        for (std::size_t var = 0; var < pattern_.num_vars(); ++var) {
            auto [i, j] = pattern_.cell_of(var);
            adj_[i].push_back({v + j, var});
            adj_[v + j].push_back({i, var});
        }
        for (auto& nbrs : adj_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    const SlackPattern& pattern() const { return pattern_; }
    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return pattern_.num_vars(); }

    bool adjacent(std::size_t a, std::size_t b) const {
        for (const auto& [n, var] : adj_[a])
            if (n == b) return true;
        return false;
    }

    std::size_t edge_var(std::size_t a, std::size_t b) const {
        for (const auto& [n, var] : adj_[a])
            if (n == b) return var;
        throw Error("edge_var: nodes not adjacent");
    }

    // node x edge 0/1 incidence matrix A_P (every column sums to 2)
    IntMat incidence_matrix() const {
        IntMat a(node_count(), edge_count());
        const std::size_t v = pattern_.rows();
        for (std::size_t var = 0; var < edge_count(); ++var) {
            auto [i, j] = pattern_.cell_of(var);
            a(i, var) = 1;
            a(v + j, var) = 1;
        }
        return a;
    }

    std::size_t component_count() const {
        std::vector<int> seen(node_count(), 0);
        std::size_t comps = 0;
        for (std::size_t s = 0; s < node_count(); ++s) {
            if (seen[s]) continue;
            ++comps;
            std::queue<std::size_t> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                std::size_t u = q.front();
                q.pop();
                for (const auto& [w, var] : adj_[u])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
        }
        return comps;
    }

    // All chordless (induced) cycles, each as a node sequence starting
    // at its minimal node, second node smaller than the last; sorted by
    // (length, sequence).
    std::vector<std::vector<std::size_t>> chordless_cycles() const {
        std::vector<std::vector<std::size_t>> cycles;
        std::vector<std::size_t> path;
        std::vector<int> on_path(node_count(), 0);
        for (std::size_t s = 0; s < node_count(); ++s) {
            path = {s};
            on_path.assign(node_count(), 0);
            on_path[s] = 1;
            extend(s, path, on_path, cycles);
        }
        std::sort(cycles.begin(), cycles.end(),
                  [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        return cycles;
    }

private:
    void extend(std::size_t s, std::vector<std::size_t>& path, std::vector<int>& on_path,
                std::vector<std::vector<std::size_t>>& out) const {
        std::size_t z = path.back();
        for (const auto& [w, var] : adj_[z]) {
            if (w <= s || on_path[w]) continue;
            if (path.size() == 1) {  // second node: nothing to close or chord yet
                path.push_back(w);
                on_path[w] = 1;
                extend(s, path, on_path, out);
                on_path[w] = 0;
                path.pop_back();
                continue;
            }
            bool closes = adjacent(w, s);
            if (closes && path.size() >= 3) {
                // direction canonicalization: traverse toward the smaller
                // neighbor of s first
                if (path[1] < w) {
                    bool chordless = true;
                    for (std::size_t k = 1; k + 1 < path.size() && chordless; ++k)
                        if (adjacent(w, path[k])) chordless = false;
                    if (chordless) {
                        auto cycle = path;
                        cycle.push_back(w);
                        out.push_back(std::move(cycle));
                    }
                }
                continue;  // extending past w would leave the chord (w, s)
            }
            if (closes) continue;
            bool chord = false;
            for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k)
                if (adjacent(w, path[k])) chord = true;
            if (chord) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(s, path, on_path, out);
            on_path[w] = 0;
            path.pop_back();
        }
    }

    SlackPattern pattern_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;  // (node, edge var)
};

// Chordless cycle with its alternating edge partition and binomial
// x^{C+} - x^{C-}; the monomial containing the smallest variable is the
// positive term.
struct CycleBinomial {
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> positive_edges;  // variable indices, 0-based
    std::vector<std::size_t> negative_edges;
    Polynomial binomial;
};

inline CycleBinomial cycle_binomial(const NonIncidenceGraph& g,
                                    const std::vector<std::size_t>& cycle) {
    const std::size_t len = cycle.size();
    std::vector<std::size_t> even, odd;
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t var = g.edge_var(cycle[k], cycle[(k + 1) % len]);
        (k % 2 == 0 ? even : odd).push_back(var);
    }
    std::sort(even.begin(), even.end());
    std::sort(odd.begin(), odd.end());
    if (odd.front() < even.front()) std::swap(even, odd);
    const std::size_t n = g.pattern().num_vars();
    Monomial pos(n), neg(n);
    for (auto v : even) pos.set(v, 1);
    for (auto v : odd) neg.set(v, 1);
    Polynomial b = Polynomial::from_monomial(n, Rational(1), pos) -
                   Polynomial::from_monomial(n, Rational(1), neg);
    return CycleBinomial{cycle, std::move(even), std::move(odd), std::move(b)};
}

// A maximal spanning forest of G_P; fixing its edge variables to one is
// realizable by positive row/column scalings.
struct ScalingAssignment {
    std::vector<std::size_t> fixed_vars;  // sorted, 0-based
    // discovery order: (edge variable, node whose scaling fixes it)
    std::vector<std::pair<std::size_t, std::size_t>> order;

    bool fixes(std::size_t var) const {
        return std::binary_search(fixed_vars.begin(), fixed_vars.end(), var);
    }
};

namespace detail {

// Root every tree of the forest at its lowest node and list the edges
// away from the roots; processing them in that order fixes each entry
// by scaling the newly reached node only.
inline ScalingAssignment orient_forest(const NonIncidenceGraph& g,
                                       std::vector<std::size_t> fixed_vars) {
    std::sort(fixed_vars.begin(), fixed_vars.end());
    const std::size_t v = g.pattern().rows();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest_adj(g.node_count());
    for (auto var : fixed_vars) {
        auto [i, j] = g.pattern().cell_of(var);
        forest_adj[i].push_back({v + j, var});
        forest_adj[v + j].push_back({i, var});
    }
    for (auto& nbrs : forest_adj) std::sort(nbrs.begin(), nbrs.end());

    ScalingAssignment out;
    out.fixed_vars = std::move(fixed_vars);
    std::vector<int> seen(g.node_count(), 0);
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (const auto& [w, var] : forest_adj[u]) {
                if (seen[w]) continue;
                seen[w] = 1;
                out.order.emplace_back(var, w);
                q.push(w);
            }
        }
    }
    return out;
}

} // namespace detail

// Breadth-first maximal spanning forest from the lowest-index node of
// each component, visiting neighbors in index order.
inline ScalingAssignment spanning_forest_scaling(const NonIncidenceGraph& g) {
    std::vector<std::size_t> fixed;
    std::vector<int> seen(g.node_count(), 0);
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t w = 0; w < g.node_count(); ++w) {
                if (seen[w] || !g.adjacent(u, w)) continue;
                seen[w] = 1;
                fixed.push_back(g.edge_var(u, w));
                q.push(w);
            }
        }
    }
    return detail::orient_forest(g, std::move(fixed));
}

// Greedy maximal forest honoring an explicit edge priority (used to
// reproduce a published scaling choice); remaining edges follow in
// index order.
inline ScalingAssignment spanning_forest_with_priority(const NonIncidenceGraph& g,
                                                       const std::vector<std::size_t>& priority) {
    std::vector<std::size_t> order = priority;
    std::vector<int> listed(g.edge_count(), 0);
    for (auto v : priority) listed[v] = 1;
    for (std::size_t v = 0; v < g.edge_count(); ++v)
        if (!listed[v]) order.push_back(v);

    std::vector<std::size_t> parent(g.node_count());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<std::size_t> fixed;
    const std::size_t v = g.pattern().rows();
    for (auto var : order) {
        auto [i, j] = g.pattern().cell_of(var);
        std::size_t ra = find(i), rb = find(v + j);
        if (ra == rb) continue;
        parent[ra] = rb;
        fixed.push_back(var);
    }
    return detail::orient_forest(g, std::move(fixed));
}

// Positive row/column scalings turning the forest entries of a numeric
// slack matrix into ones (the witness of realizability).
template <typename K>
std::pair<std::vector<K>, std::vector<K>> scaling_witness(const NonIncidenceGraph& g,
                                                          const ScalingAssignment& scaling,
                                                          const ExactMatrix<K>& s) {
    const std::size_t v = g.pattern().rows(), f = g.pattern().cols();
    if (s.rows() != v || s.cols() != f) throw DimensionMismatch("scaling witness matrix shape");
    std::vector<K> dv(v, scalar_traits<K>::one()), df(f, scalar_traits<K>::one());
    for (auto [var, fresh] : scaling.order) {
        auto [i, j] = g.pattern().cell_of(var);
        K cur = dv[i] * s(i, j) * df[j];
        if (scalar_traits<K>::is_zero(cur))
            throw ValidationError("scaling witness: matrix vanishes on a forest edge");
        if (fresh < v)
            dv[i] = dv[i] / cur;
        else
            df[j] = df[j] / cur;
    }
    return {dv, df};
}

} // namespace slackkit
