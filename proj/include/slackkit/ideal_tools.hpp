#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "slackkit/groebner.hpp"
#include "slackkit/lattice.hpp"

namespace slackkit {

namespace detail {

// Minimum hitting set of a family of variable sets (each a bitmask),
// by branch and bound with a disjoint-edge lower bound.
class HittingSet {
public:
    explicit HittingSet(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {
        // drop supersets; a hitting set for the minimal edges hits all
        std::sort(edges_.begin(), edges_.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            if (pa != pb) return pa < pb;
            return a < b;
        });
        std::vector<std::uint64_t> minimal;
        for (auto e : edges_) {
            bool super = false;
            for (auto m : minimal)
                if ((m & e) == m) { super = true; break; }
            if (!super) minimal.push_back(e);
        }
        edges_ = std::move(minimal);
    }

    std::size_t solve() {
        best_ = greedy();
        search(edges_, 0);
        return best_;
    }

private:
    std::size_t greedy() const {
        auto rem = edges_;
        std::size_t count = 0;
        while (!rem.empty()) {
            // hit the most edges with one variable
            std::uint64_t all = 0;
            for (auto e : rem) all |= e;
            int best_v = -1;
            std::size_t best_hits = 0;
            for (int v = 0; v < 64; ++v) {
                if (!(all >> v & 1)) continue;
                std::size_t hits = 0;
                for (auto e : rem)
                    if (e >> v & 1) ++hits;
                if (hits > best_hits) { best_hits = hits; best_v = v; }
            }
            std::vector<std::uint64_t> next;
            for (auto e : rem)
                if (!(e >> best_v & 1)) next.push_back(e);
            rem = std::move(next);
            ++count;
        }
        return count;
    }

    static std::size_t disjoint_bound(const std::vector<std::uint64_t>& rem) {
        std::uint64_t used = 0;
        std::size_t n = 0;
        for (auto e : rem)
            if (!(e & used)) { used |= e; ++n; }
        return n;
    }

    void search(const std::vector<std::uint64_t>& rem, std::size_t chosen) {
        if (rem.empty()) {
            best_ = std::min(best_, chosen);
            return;
        }
        if (chosen + disjoint_bound(rem) >= best_) return;
        std::uint64_t e = rem.front();  // smallest edge (kept sorted by size)
        for (int v = 0; v < 64; ++v) {
            if (!(e >> v & 1)) continue;
            std::vector<std::uint64_t> next;
            next.reserve(rem.size());
            for (auto f : rem)
                if (!(f >> v & 1)) next.push_back(f);
            search(next, chosen + 1);
        }
    }

    std::vector<std::uint64_t> edges_;
    std::size_t best_ = 0;
};

} // namespace detail

// Krull dimension of Q[x]/I: the maximum size of a variable set Y such
// that no leading monomial of the reduced basis is supported inside Y.
// Equivalently nvars minus a minimum transversal of the leading supports.
inline std::size_t krull_dimension(const Ideal& ideal, Budget* budget = nullptr) {
    if (ideal.nvars() > 64) throw Error("krull_dimension limited to 64 variables");
    if (ideal.is_zero_ideal()) return ideal.nvars();
    auto gb = reduced_groebner(ideal, TermOrder::grevlex(), budget);
    std::vector<std::uint64_t> edges;
    for (const auto& g : gb) {
        const Monomial& lm = g.leading_term(TermOrder::grevlex()).mono;
        if (lm.is_one()) throw Error("krull_dimension of the unit ideal (empty variety)");
        std::uint64_t mask = 0;
        for (std::size_t v = 0; v < ideal.nvars(); ++v)
            if (lm[v] > 0) mask |= std::uint64_t(1) << v;
        edges.push_back(mask);
    }
    detail::HittingSet hs(std::move(edges));
    return ideal.nvars() - hs.solve();
}

// Number of elements in a minimal homogeneous generating set.  The
// generators are sifted in ascending degree; one is redundant exactly
// when it lies in the ideal of the previously kept ones, decided with a
// degree-truncated basis (valid since everything is homogeneous).
inline std::size_t minimal_generator_count(const Ideal& ideal, Budget* budget = nullptr) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
            throw ValidationError(
                "minimal_generator_count requires generators homogeneous in a positive grading");
    std::vector<Polynomial> gens = ideal.generators();
    TermOrder order = TermOrder::grevlex();
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        int c = order.compare(a.leading_term(order).mono, b.leading_term(order).mono);
        if (c != 0) return c < 0;
        return a.str() < b.str();
    });
    detail::BuchbergerState st(ideal.nvars(), order, budget);
    std::size_t kept = 0;
    for (const auto& g : gens) {
        st.process_pairs(g.total_degree());
        if (st.add_generator(g)) ++kept;
    }
    return kept;
}

struct IdealClass {
    bool is_binomial = false;
    bool is_pure_difference = false;
    bool is_toric = false;
    std::optional<IntegerLattice> lattice;  // exponent lattice when pure difference
};

// The toric hierarchy test: binomial via the reduced basis, pure
// difference via paired unit coefficients, toric by comparing against
// the lattice ideal of the exponent lattice and checking the lattice is
// saturated (torsion-free quotient).
inline IdealClass classify_ideal(const Ideal& ideal, Budget* budget = nullptr) {
    IdealClass out;
    if (ideal.is_zero_ideal()) {
        out.is_binomial = out.is_pure_difference = out.is_toric = true;
        out.lattice = IntegerLattice(0, ideal.nvars());
        return out;
    }
    auto gb = reduced_groebner(ideal, TermOrder::grevlex(), budget);
    out.is_binomial = true;
    out.is_pure_difference = true;
    for (const auto& g : gb) {
        if (g.term_count() > 2) {
            out.is_binomial = out.is_pure_difference = false;
            break;
        }
        if (!g.is_pure_difference()) out.is_pure_difference = false;
    }
    if (!out.is_pure_difference) return out;

    // exponent lattice of the basis binomials
    IntMat lat(gb.size(), ideal.nvars());
    for (std::size_t k = 0; k < gb.size(); ++k) {
        const auto& ts = gb[k].terms();
        for (std::size_t v = 0; v < ideal.nvars(); ++v)
            lat(k, v) = Integer(static_cast<long>(ts[0].mono[v])) -
                        Integer(static_cast<long>(ts[1].mono[v]));
    }
    out.lattice = lat;

    // lattice ideal of the *same* lattice (not its saturation)
    IntMat basis = lattice_canonical(lat);
    std::vector<Polynomial> bin_gens;
    for (std::size_t k = 0; k < basis.rows(); ++k) {
        Monomial pos(ideal.nvars()), neg(ideal.nvars());
        for (std::size_t v = 0; v < ideal.nvars(); ++v) {
            long e = static_cast<long>(basis(k, v).get_si());
            if (e > 0) pos.set(v, static_cast<std::uint32_t>(e));
            if (e < 0) neg.set(v, static_cast<std::uint32_t>(-e));
        }
        bin_gens.push_back(Polynomial::from_monomial(ideal.nvars(), Rational(1), pos) -
                           Polynomial::from_monomial(ideal.nvars(), Rational(1), neg));
    }
    Ideal lattice_ideal = saturate_all_variables(Ideal(ideal.nvars(), std::move(bin_gens)), budget);
    out.is_toric = is_saturated(lat) && ideal_equal(ideal, lattice_ideal, budget);
    return out;
}

} // namespace slackkit
