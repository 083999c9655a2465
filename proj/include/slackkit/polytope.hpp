#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "slackkit/matrix.hpp"
#include "slackkit/pattern.hpp"

namespace slackkit {

// V-representation: rows of `vertices` are the vertex coordinates.
struct VRep {
    std::size_t d = 0;
    ExactMatrix<Rational> vertices;  // v x d

    std::size_t vertex_count() const { return vertices.rows(); }
};

// H-representation W x <= w with every row facet-defining.
struct HRep {
    ExactMatrix<Rational> w_matrix;  // f x d
    std::vector<Rational> rhs;       // length f

    std::size_t facet_count() const { return w_matrix.rows(); }
};

struct FacetEnumeration {
    HRep h;
    // per facet, the sorted list of incident vertex indices
    std::vector<std::vector<std::size_t>> incidence;
};

namespace detail {

inline void primitive_inequality(std::vector<Rational>& a, Rational& b) {
    Integer den_lcm = 1, num_gcd = 0;
    auto fold = [&](const Rational& q) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    };
    for (const auto& q : a) fold(q);
    fold(b);
    if (sgn(num_gcd) == 0) return;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(scale) < 0) scale = -scale;
    for (auto& q : a) q *= scale;
    b *= scale;
}

} // namespace detail

// Brute-force facet enumeration over d-subsets of vertices: keep the
// spanned hyperplanes that support the whole vertex set, orient them
// inward, and order facets lexicographically by their sorted incident
// vertex sets.
inline FacetEnumeration facet_enumeration(const VRep& p) {
    const std::size_t v = p.vertex_count(), d = p.d;
    if (v < d + 1) throw ValidationError("facet enumeration needs at least d+1 vertices");

    // full-dimensionality check with a witness hyperplane on failure
    {
        ExactMatrix<Rational> diffs(v - 1, d);
        for (std::size_t i = 1; i < v; ++i)
            for (std::size_t j = 0; j < d; ++j)
                diffs(i - 1, j) = p.vertices(i, j) - p.vertices(0, j);
        if (rank(diffs) < d) {
            auto witness = nullspace(diffs.transpose());
            std::string msg = "vertex set is not full-dimensional";
            if (!witness.empty()) {
                msg += "; affine hull lies in the hyperplane with normal (";
                for (std::size_t j = 0; j < d; ++j)
                    msg += (j ? "," : "") + to_string(witness.front()[j]);
                msg += ")";
            }
            throw ValidationError(msg);
        }
    }

    struct Candidate {
        std::vector<std::size_t> incident;
        std::vector<Rational> normal;
        Rational offset;
    };
    std::vector<Candidate> found;
    auto seen = [&](const std::vector<std::size_t>& inc) {
        for (const auto& c : found)
            if (c.incident == inc) return true;
        return false;
    };

    std::vector<std::size_t> subset(d);
    // iterate over d-subsets in lexicographic order
    for (std::size_t i = 0; i < d; ++i) subset[i] = i;
    auto advance = [&]() -> bool {
        std::size_t k = d;
        while (k-- > 0) {
            if (subset[k] + (d - k) < v) {
                ++subset[k];
                for (std::size_t j = k + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        // hyperplane a.x = b through the subset: nullspace of [p_i | -1]
        ExactMatrix<Rational> sys(d, d + 1);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t j = 0; j < d; ++j) sys(r, j) = p.vertices(subset[r], j);
            sys(r, d) = -1;
        }
        auto ns = nullspace(sys);
        if (ns.size() != 1) continue;  // affinely dependent subset
        std::vector<Rational> a(ns[0].begin(), ns[0].begin() + d);
        Rational b = ns[0][d];

        int side = 0;
        bool supporting = true;
        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < v && supporting; ++i) {
            Rational s = b;
            for (std::size_t j = 0; j < d; ++j) s -= a[j] * p.vertices(i, j);
            int sg = sgn(s);
            if (sg == 0)
                incident.push_back(i);
            else if (side == 0)
                side = sg;
            else if (side != sg)
                supporting = false;
        }
        if (!supporting || side == 0) continue;
        if (side < 0) {
            for (auto& q : a) q = -q;
            b = -b;
        }
        if (seen(incident)) continue;
        detail::primitive_inequality(a, b);
        found.push_back({std::move(incident), std::move(a), std::move(b)});
    } while (advance());

    std::sort(found.begin(), found.end(),
              [](const Candidate& x, const Candidate& y) { return x.incident < y.incident; });

    FacetEnumeration out;
    out.h.w_matrix = ExactMatrix<Rational>(found.size(), d);
    out.h.rhs.resize(found.size());
    for (std::size_t f = 0; f < found.size(); ++f) {
        for (std::size_t j = 0; j < d; ++j) out.h.w_matrix(f, j) = found[f].normal[j];
        out.h.rhs[f] = found[f].offset;
        out.incidence.push_back(found[f].incident);
    }
    return out;
}

// S[i][j] = w_j - W_j p_i; rejects an H-description that is not valid
// for the vertex set (negative slack).
inline ExactMatrix<Rational> slack_matrix(const VRep& p, const HRep& h) {
    if (h.w_matrix.cols() != p.d) throw DimensionMismatch("slack_matrix dimension");
    const std::size_t v = p.vertex_count(), f = h.facet_count();
    ExactMatrix<Rational> s(v, f);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            Rational val = h.rhs[j];
            for (std::size_t k = 0; k < p.d; ++k) val -= h.w_matrix(j, k) * p.vertices(i, k);
            if (sgn(val) < 0)
                throw ValidationError("negative slack at vertex " + std::to_string(i + 1) +
                                      ", facet " + std::to_string(j + 1) +
                                      ": inequalities do not describe the polytope");
            s(i, j) = std::move(val);
        }
    return s;
}

struct SlackValidation {
    bool support_ok = false;
    bool rank_ok = false;
    bool ones_in_column_span = false;
    std::size_t matrix_rank = 0;

    bool all() const { return support_ok && rank_ok && ones_in_column_span; }
};

// The three slack-matrix conditions: support equality, rank d+1, and
// the all-ones vector in the column span.
template <typename K>
SlackValidation validate_slack_matrix(const ExactMatrix<K>& s, const SlackPattern& pattern) {
    SlackValidation rep;
    rep.support_ok = s.rows() == pattern.rows() && s.cols() == pattern.cols();
    if (rep.support_ok)
        for (std::size_t i = 0; i < s.rows() && rep.support_ok; ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                if (scalar_traits<K>::is_zero(s(i, j)) == pattern.is_star(i, j)) {
                    rep.support_ok = false;
                    break;
                }
    rep.matrix_rank = rank(s);
    rep.rank_ok = rep.matrix_rank == pattern.dimension() + 1;
    std::vector<K> ones(s.rows(), scalar_traits<K>::one());
    rep.ones_in_column_span = column_span_member(s, ones).has_value();
    return rep;
}

// Convenience: pattern of a polytope via facet enumeration + Eq-style
// slack matrix.
inline SlackPattern polytope_pattern(const VRep& p) {
    auto fe = facet_enumeration(p);
    return SlackPattern::from_matrix(p.d, slack_matrix(p, fe.h));
}

} // namespace slackkit
