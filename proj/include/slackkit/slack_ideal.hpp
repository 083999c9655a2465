#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slackkit/groebner.hpp"
#include "slackkit/ideal_tools.hpp"
#include "slackkit/nonincidence.hpp"
#include "slackkit/parallel.hpp"
#include "slackkit/symbolic_matrix.hpp"

namespace slackkit {

namespace detail {

// Kuhn's augmenting-path matching: true iff the restricted support has
// a system of distinct representatives (otherwise the minor vanishes).
inline bool has_perfect_matching(const SymbolicSlackMatrix& m,
                                 const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<int> match_col(k, -1);
    std::vector<char> visited(k);
    auto try_row = [&](auto&& self, std::size_t r) -> bool {
        for (std::size_t c = 0; c < k; ++c) {
            if (visited[c] || m.cell(rows[r], cols[c]).kind == SymbolicSlackMatrix::Cell::Kind::Zero)
                continue;
            visited[c] = 1;
            if (match_col[c] < 0 || self(self, static_cast<std::size_t>(match_col[c]))) {
                match_col[c] = static_cast<int>(r);
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < k; ++r) {
        visited.assign(k, 0);
        if (!try_row(try_row, r)) return false;
    }
    return true;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        fn(c);
        std::size_t i = k;
        while (i-- > 0) {
            if (c[i] + (k - i) < n) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace detail

struct SlackIdealOptions {
    std::optional<ScalingAssignment> scaling;
    std::optional<std::size_t> minor_size;  // defaults to d+2
    bool saturate = true;                   // false exposes the raw minor ideal J_P
    Budget* budget = nullptr;
};

struct SlackIdealResult {
    Ideal ideal;
    std::size_t selections = 0;        // candidate row/column selections
    std::size_t matching_pruned = 0;   // discarded by the matching test
    std::size_t distinct_minors = 0;   // generators before saturation
};

// The saturated determinantal ideal of the symbolic slack matrix: all
// (d+2)-minors, deduplicated up to sign, saturated by the (remaining)
// variables.  A supplied scaling substitutes ones before expansion.
inline SlackIdealResult slack_ideal(const SlackPattern& pattern,
                                    const SlackIdealOptions& opts = {}) {
    const std::size_t t = pattern.num_vars();
    const std::size_t k = opts.minor_size.value_or(pattern.dimension() + 2);
    SymbolicSlackMatrix sym(pattern);
    std::vector<std::size_t> free_vars;
    if (opts.scaling) {
        for (auto v : opts.scaling->fixed_vars) sym.fix_variable(v, Rational(1));
        for (std::size_t v = 0; v < t; ++v)
            if (!opts.scaling->fixes(v)) free_vars.push_back(v);
    } else {
        for (std::size_t v = 0; v < t; ++v) free_vars.push_back(v);
    }

    SlackIdealResult res;
    res.ideal = Ideal(t);
    if (pattern.rows() < k || pattern.cols() < k) return res;  // no minors exist

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::combinations(pattern.rows(), k,
                         [&](const std::vector<std::size_t>& c) { row_sets.push_back(c); });
    detail::combinations(pattern.cols(), k,
                         [&](const std::vector<std::size_t>& c) { col_sets.push_back(c); });

    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t r = 0; r < row_sets.size(); ++r)
        for (std::size_t c = 0; c < col_sets.size(); ++c) {
            ++res.selections;
            if (opts.budget) opts.budget->tick("minor enumeration");
            if (detail::has_perfect_matching(sym, row_sets[r], col_sets[c]))
                tasks.emplace_back(r, c);
            else
                ++res.matching_pruned;
        }

    std::vector<Polynomial> dets(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        dets[i] = sym.submatrix_determinant(row_sets[tasks[i].first], col_sets[tasks[i].second]);
    });

    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    for (auto& d : dets) {
        if (d.is_zero()) continue;
        if (sgn(d.leading_term(TermOrder::grevlex()).coeff) < 0) d = -d;
        d = d.primitive_part();
        if (seen.insert(d.str()).second) gens.push_back(std::move(d));
    }
    res.distinct_minors = gens.size();
    res.ideal = Ideal(t, std::move(gens));
    if (opts.saturate && !res.ideal.is_zero_ideal())
        res.ideal = saturate(res.ideal, free_vars, opts.budget);
    return res;
}

enum class ToricMethod { Cycles, Kernel };

struct ToricIdealResult {
    Ideal ideal;
    std::vector<CycleBinomial> cycles;  // populated by the cycle method
};

// T_P, the toric ideal of the vertex-edge incidence matrix of the
// non-incidence graph.  Cycle route: one binomial per chordless cycle.
// Kernel route: binomials of an integer kernel basis of A_P, saturated
// by all variables.  Both return the same ideal.
inline ToricIdealResult toric_ideal_TP(const SlackPattern& pattern,
                                       ToricMethod method = ToricMethod::Cycles,
                                       Budget* budget = nullptr) {
    NonIncidenceGraph g(pattern);
    ToricIdealResult res;
    const std::size_t t = pattern.num_vars();
    if (method == ToricMethod::Cycles) {
        std::vector<Polynomial> gens;
        for (const auto& cyc : g.chordless_cycles()) {
            res.cycles.push_back(cycle_binomial(g, cyc));
            gens.push_back(res.cycles.back().binomial);
        }
        res.ideal = Ideal(t, std::move(gens));
        return res;
    }
    IntMat kernel = kernel_basis(g.incidence_matrix());
    std::vector<Polynomial> gens;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Monomial pos(t), neg(t);
        for (std::size_t v = 0; v < t; ++v) {
            long e = static_cast<long>(kernel(r, v).get_si());
            if (e > 0) pos.set(v, static_cast<std::uint32_t>(e));
            if (e < 0) neg.set(v, static_cast<std::uint32_t>(-e));
        }
        Polynomial b = Polynomial::from_monomial(t, Rational(1), pos) -
                       Polynomial::from_monomial(t, Rational(1), neg);
        if (!b.is_zero()) gens.push_back(std::move(b));
    }
    res.ideal = saturate_all_variables(Ideal(t, std::move(gens)), budget);
    return res;
}

// A polytope is morally 2-level iff the all-ones matrix lies in the
// slack variety.  Saturation only removes coordinate-hyperplane
// components and the all-ones point has full support, so this reduces
// to: every (d+2)-minor vanishes on the 0/1 support matrix, i.e. the
// support has rank at most d+1 over Q.
inline bool is_morally_2_level(const SlackPattern& pattern) {
    return pattern.support_rank() <= pattern.dimension() + 1;
}

struct ContainmentTrace {
    Polynomial generator;
    DivisionCertificate certificate;  // against the other ideal's basis
};

struct ProjectiveUniquenessCertificate {
    enum class Status {
        Graphic,             // I_P = T_P: certified projectively unique
        ToricNotGraphic,     // I_P toric but strictly inside T_P: not projectively unique
        NotToric,            // equality test inapplicable; projective uniqueness undecided
        BudgetExceeded,
    };
    Status status = Status::BudgetExceeded;
    bool is_graphic = false;
    bool ip_toric = false;
    bool ip_contained_in_tp = false;
    std::vector<Polynomial> basis_ip, basis_tp;
    std::vector<ContainmentTrace> tp_reductions;  // T_P generators vs basis of I_P
    std::vector<ContainmentTrace> ip_reductions;  // I_P generators vs basis of T_P
    std::optional<Polynomial> witness_not_in_ip;  // T_P generator outside I_P
    std::string message;
};

// Tests I_P = T_P.  Equality certifies projective uniqueness; a toric
// I_P strictly inside T_P certifies the opposite.
inline ProjectiveUniquenessCertificate certify_projective_uniqueness(const SlackPattern& pattern,
                                                                     Budget* budget = nullptr) {
    ProjectiveUniquenessCertificate cert;
    try {
        auto tp = toric_ideal_TP(pattern, ToricMethod::Cycles, budget);
        auto ip = slack_ideal(pattern, {.budget = budget});
        cert.basis_ip = reduced_groebner(ip.ideal, TermOrder::grevlex(), budget);
        cert.basis_tp = reduced_groebner(tp.ideal, TermOrder::grevlex(), budget);

        bool tp_in_ip = true;
        for (const auto& g : tp.ideal.generators()) {
            ContainmentTrace trace;
            trace.generator = g;
            Polynomial r = cert.basis_ip.empty()
                               ? g
                               : normal_form(g, cert.basis_ip, TermOrder::grevlex(), budget,
                                             &trace.certificate);
            if (!r.is_zero()) {
                tp_in_ip = false;
                if (!cert.witness_not_in_ip) cert.witness_not_in_ip = g;
            }
            cert.tp_reductions.push_back(std::move(trace));
        }
        cert.ip_contained_in_tp = true;
        for (const auto& g : ip.ideal.generators()) {
            ContainmentTrace trace;
            trace.generator = g;
            Polynomial r = cert.basis_tp.empty()
                               ? g
                               : normal_form(g, cert.basis_tp, TermOrder::grevlex(), budget,
                                             &trace.certificate);
            if (!r.is_zero()) cert.ip_contained_in_tp = false;
            cert.ip_reductions.push_back(std::move(trace));
        }
        cert.is_graphic = tp_in_ip && cert.ip_contained_in_tp;
        if (cert.is_graphic) {
            cert.ip_toric = true;  // T_P is toric and equals I_P
            cert.status = ProjectiveUniquenessCertificate::Status::Graphic;
            cert.message = "slack ideal is graphic: the polytope is projectively unique";
            return cert;
        }
        cert.ip_toric = classify_ideal(ip.ideal, budget).is_toric;
        if (cert.ip_toric) {
            cert.status = ProjectiveUniquenessCertificate::Status::ToricNotGraphic;
            cert.message =
                "slack ideal is toric but not graphic: the polytope is not projectively unique";
        } else {
            cert.status = ProjectiveUniquenessCertificate::Status::NotToric;
            cert.message = "slack ideal is not toric: projective uniqueness undecided here";
        }
        return cert;
    } catch (const BudgetExceeded& e) {
        cert.status = ProjectiveUniquenessCertificate::Status::BudgetExceeded;
        cert.message = e.what();
        return cert;
    }
}

} // namespace slackkit
