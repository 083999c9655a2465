// Acceptance suite: one pass/fail line per criterion, exit nonzero on
// any failure.  --only N runs a single criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "slackkit/catalog.hpp"
#include "slackkit/perles.hpp"
#include "slackkit/slack_ideal.hpp"

using namespace slackkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            details += (details.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) {
        details += (details.empty() ? "" : "; ") + what;
    }
};

struct SharedState {
    // cached heavy results, reused by the property criterion
    std::optional<Ideal> ip_8vertex;
    std::optional<Ideal> tp_8vertex;
};

SlackPattern pattern_of(const std::string& name) {
    CatalogEntry e = construct_catalog(name);
    if (auto* pat = std::get_if<SlackPattern>(&e)) return *pat;
    return polytope_pattern(std::get<VRep>(e));
}

Polynomial P(std::size_t nvars, const std::string& s) { return Polynomial::parse(nvars, s); }

Outcome criterion1(SharedState&) {
    Outcome out;
    for (std::size_t d = 1; d <= 6; ++d) {
        auto res = slack_ideal(pattern_of("simplex" + std::to_string(d)));
        out.require(res.ideal.is_zero_ideal(),
                    "slack ideal of simplex" + std::to_string(d) + " is not zero");
    }
    return out;
}

Outcome criterion2(SharedState&) {
    Outcome out;
    SlackPattern sq = pattern_of("square");
    auto ip = slack_ideal(sq);
    Ideal expected(8, {P(8, "x2*x3*x6*x7 - x1*x4*x5*x8")});
    out.require(ideal_equal(ip.ideal, expected), "square slack ideal mismatch");
    auto tp = toric_ideal_TP(sq, ToricMethod::Cycles);
    out.require(ideal_equal(tp.ideal, expected), "square toric ideal mismatch");
    auto cert = certify_projective_uniqueness(sq);
    out.require(cert.is_graphic, "square not certified graphic");
    return out;
}

Outcome criterion3(SharedState&) {
    Outcome out;
    // facet enumeration reproduces the published support
    VRep p = seven_vertex_four_polytope();
    auto fe = facet_enumeration(p);
    SlackPattern mine = SlackPattern::from_matrix(4, slack_matrix(p, fe.h));
    SlackPattern support = published_pattern_7vertex();
    auto perm = mine.match_columns(support);
    out.require(perm.has_value() && mine.permuted_columns(*perm).same_support(support),
                "facet enumeration does not reproduce the published 7x7 support");

    // toric ideal equals the nine published binomials, exactly up to sign
    auto toric = toric_ideal_TP(support, ToricMethod::Cycles);
    std::vector<std::string> published = {
        "x2*x3*x6*x8 - x1*x4*x5*x9",        "x7*x9 - x6*x10",
        "x10*x11*x13*x16 - x9*x12*x14*x17", "x7*x11*x13*x16 - x6*x12*x14*x17",
        "x2*x8*x13*x16 - x1*x9*x15*x17",    "x4*x5*x13*x16 - x3*x6*x15*x17",
        "x2*x8*x12*x14 - x1*x10*x11*x15",   "x4*x5*x12*x14 - x3*x7*x11*x15",
        "x2*x3*x7*x8 - x1*x4*x5*x10",
    };
    std::vector<Polynomial> listed;
    for (const auto& s : published) listed.push_back(P(17, s));
    out.require(ideal_equal(toric.ideal, Ideal(17, listed)),
                "toric ideal differs from the nine published binomials");
    std::set<std::string> got, want;
    for (const auto& c : toric.cycles) {
        Polynomial b = c.binomial;
        if (sgn(b.leading_term(TermOrder::grevlex()).coeff) < 0) b = -b;
        got.insert(b.str());
    }
    for (auto f : listed) {
        if (sgn(f.leading_term(TermOrder::grevlex()).coeff) < 0) f = -f;
        want.insert(f.str());
    }
    out.require(got == want, "chordless cycle binomials differ from the published list");

    // graphic: I_P = T_P
    auto ip = slack_ideal(support);
    out.require(ideal_equal(ip.ideal, toric.ideal), "slack ideal is not graphic");
    return out;
}

Outcome criterion4(SharedState&) {
    Outcome out;
    SlackPattern pat = pattern_of("cube3");
    out.require(is_morally_2_level(pat), "cube3 not morally 2-level");
    auto tp = toric_ideal_TP(pat, ToricMethod::Cycles);
    std::size_t count = minimal_generator_count(tp.ideal);
    out.require(count == 80, "cube3 T_P minimal generators: expected 80, got " +
                                 std::to_string(count));
    // the nominal stretch part turned out to run in under a second, so
    // it is always on
    auto ip = slack_ideal(pat);
    std::size_t ip_count = minimal_generator_count(ip.ideal);
    out.require(ip_count == 222, "cube3 I_P minimal generators: expected 222, got " +
                                     std::to_string(ip_count));
    out.require(is_subideal(ip.ideal, tp.ideal) && !is_subideal(tp.ideal, ip.ideal),
                "cube3: I_P strictly inside T_P fails");
    out.require(is_morally_2_level(pat) == is_subideal(ip.ideal, tp.ideal),
                "cube3: morally-2-level disagrees with ideal containment");
    bool nonbinomial = false;
    for (const auto& g : reduced_groebner(ip.ideal, TermOrder::grevlex()))
        if (g.term_count() > 2) nonbinomial = true;
    out.require(nonbinomial, "cube3 I_P basis has no non-binomial element");
    return out;
}

Outcome criterion5(SharedState& st) {
    Outcome out;
    SlackPattern pat = published_pattern_8vertex();
    auto ip = slack_ideal(pat);
    auto cls = classify_ideal(ip.ideal);
    out.require(cls.is_toric, "8-vertex I_P is not classified toric");
    auto tp = toric_ideal_TP(pat, ToricMethod::Cycles);
    out.require(is_subideal(ip.ideal, tp.ideal), "I_P not contained in T_P");
    out.require(!is_subideal(tp.ideal, ip.ideal), "containment is not strict");
    std::size_t dim_ip = krull_dimension(ip.ideal);
    std::size_t dim_tp = krull_dimension(tp.ideal);
    out.require(dim_ip == 20, "dim of I_P quotient: expected 20, got " + std::to_string(dim_ip));
    out.require(dim_tp == 19, "dim of T_P quotient: expected 19, got " + std::to_string(dim_tp));
    st.ip_8vertex = ip.ideal;
    st.tp_8vertex = tp.ideal;
    return out;
}

Outcome criterion6(SharedState&) {
    Outcome out;
    GaleDiagram g = perles_gale_diagram();
    auto gf = gale_facets(g);
    out.require(gf.circuits.size() == 34,
                "expected 34 circuits, got " + std::to_string(gf.circuits.size()));
    auto perm = gf.pattern.match_columns(perles_data::pattern());
    out.require(perm.has_value() &&
                    gf.pattern.permuted_columns(*perm).same_support(perles_data::pattern()),
                "circuit supports do not match the published 12x34 pattern");
    return out;
}

Outcome criterion7(SharedState&) {
    Outcome out;
    auto c = perles_case();
    auto rep = perles_subideal(c);
    out.require(rep.equals_published, "scaled subideal differs from the published generators");
    for (const auto& [gen, member] : rep.membership)
        out.require(member, "published generator not a member: " + gen);
    return out;
}

Outcome criterion8(SharedState&) {
    Outcome out;
    auto c = perles_case();
    auto rep = perles_parametric_verify(c);
    for (const auto* r : {&rep.alpha1, &rep.alpha2}) {
        const std::string tag = r->alpha_name + ": ";
        out.require(r->matches_figure && r->completion_unique,
                    tag + "completed matrix does not match the published matrix");
        out.require(r->rank_is_nine, tag + "rank is not nine");
        out.require(r->ones_in_column_span,
                    tag + "all-ones not in the column span (renormalized representative)");
        out.require(is_zero(r->witness_value), tag + "witness does not vanish");
    }
    out.require(rep.factors_separate_roots,
                "linear factors do not separate the two roots");
    out.require(rep.alpha1.positive_on_support, "alpha1 matrix not positive on support");
    SlackPattern perles = perles_data::pattern();
    out.require(!is_morally_2_level(perles) && perles.support_rank() >= 10,
                "perles pattern not rejected by the support-rank test");
    return out;
}

Outcome criterion9(SharedState&) {
    Outcome out;
    for (const char* name : {"square", "bisimplex3", "freesum(simplex2,simplex2)", "cube3",
                             "example-7vertex-4polytope", "example-8vertex-5polytope"}) {
        SlackPattern pat = pattern_of(name);
        auto c = toric_ideal_TP(pat, ToricMethod::Cycles);
        auto k = toric_ideal_TP(pat, ToricMethod::Kernel);
        out.require(ideal_equal(c.ideal, k.ideal),
                    std::string("cycle and kernel routes differ on ") + name);
    }
    return out;
}

Outcome criterion10(SharedState& st) {
    Outcome out;
    std::mt19937_64 rng(20240811);

    // saturation idempotence on randomized small ideals
    int done = 0;
    for (int it = 0; it < 200 && done < 15; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            std::vector<Term> terms;
            std::uniform_int_distribution<int> expd(0, 2), coef(-3, 3);
            for (int tcount = 0; tcount < 2; ++tcount) {
                Monomial m(3);
                for (std::size_t v = 0; v < 3; ++v) m.set(v, expd(rng));
                int cv = coef(rng);
                if (cv == 0) cv = 1;
                terms.push_back({Rational(cv), m});
            }
            Polynomial g(3, std::move(terms));
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal in(3, gens);
        if (ideal_member(Polynomial::constant(3, Rational(1)), in)) continue;
        ++done;
        Ideal s1 = saturate_all_variables(in);
        Ideal s2 = saturate_all_variables(s1);
        if (!ideal_equal(s1, s2)) {
            out.require(false, "saturation not idempotent on a random ideal");
            break;
        }
    }
    out.require(done >= 10, "too few random saturation samples");

    // slack-ideal properties on the computable catalog patterns
    std::vector<std::string> names = {"square", "triangle", "bisimplex3", "cube3",
                                      "example-7vertex-4polytope"};
    for (const auto& name : names) {
        VRep p = std::get<VRep>(construct_catalog(name));
        auto fe = facet_enumeration(p);
        auto s = slack_matrix(p, fe.h);
        SlackPattern pat = SlackPattern::from_matrix(p.d, s);
        auto ip = slack_ideal(pat);
        auto tp = toric_ideal_TP(pat, ToricMethod::Cycles);

        // no monomials in the basis
        if (!ip.ideal.is_zero_ideal()) {
            for (const auto& g : reduced_groebner(ip.ideal, TermOrder::grevlex()))
                out.require(g.term_count() >= 2, name + ": monomial in slack ideal basis");
        }

        // generators vanish on the slack matrix and random positive rescalings
        auto eval_all = [&](const ExactMatrix<Rational>& m) {
            std::vector<Rational> point(pat.num_vars());
            for (std::size_t v = 0; v < pat.num_vars(); ++v) {
                auto [i, j] = pat.cell_of(v);
                point[v] = m(i, j);
            }
            for (const auto& g : ip.ideal.generators())
                if (sgn(g.evaluate(point)) != 0) return false;
            return true;
        };
        out.require(eval_all(s), name + ": generator does not vanish on the slack matrix");
        std::uniform_int_distribution<int> num(1, 7), den(1, 7);
        for (int it = 0; it < 3; ++it) {
            ExactMatrix<Rational> scaled = s;
            for (std::size_t i = 0; i < s.rows(); ++i) {
                Rational ri(num(rng), den(rng));
                ri.canonicalize();
                for (std::size_t j = 0; j < s.cols(); ++j) scaled(i, j) *= ri;
            }
            for (std::size_t j = 0; j < s.cols(); ++j) {
                Rational cj(num(rng), den(rng));
                cj.canonicalize();
                for (std::size_t i = 0; i < s.rows(); ++i) scaled(i, j) *= cj;
            }
            out.require(eval_all(scaled), name + ": generator does not vanish on a rescaling");
        }

        // equivalence of the rank test with ideal containment
        out.require(is_morally_2_level(pat) == is_subideal(ip.ideal, tp.ideal),
                    name + ": morally-2-level disagrees with ideal containment");
        auto cls = classify_ideal(ip.ideal);
        if (cls.is_pure_difference)
            out.require(is_subideal(ip.ideal, tp.ideal),
                        name + ": pure difference but not contained in T_P");
        // every pure-difference binomial of the basis individually lies in T_P
        if (!ip.ideal.is_zero_ideal()) {
            for (const auto& g : reduced_groebner(ip.ideal, TermOrder::grevlex()))
                if (g.is_pure_difference())
                    out.require(ideal_member(g, tp.ideal),
                                name + ": basis binomial outside T_P");
        }
    }

    // reuse the heavy 8-vertex ideals when criterion 5 already ran
    if (st.ip_8vertex && st.tp_8vertex) {
        SlackPattern pat = published_pattern_8vertex();
        out.require(is_morally_2_level(pat) == is_subideal(*st.ip_8vertex, *st.tp_8vertex),
                    "8-vertex: morally-2-level disagrees with ideal containment");
        for (const auto& g : reduced_groebner(*st.ip_8vertex, TermOrder::grevlex()))
            out.require(g.term_count() >= 2, "8-vertex: monomial in slack ideal basis");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    SharedState st;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    struct Criterion {
        int id;
        const char* label;
        std::function<Outcome(SharedState&)> fn;
    };
    std::vector<Criterion> criteria = {
        {1, "trivial ideals: slack ideal of simplices is zero", criterion1},
        {2, "square pipeline: slack ideal = toric ideal, graphic", criterion2},
        {3, "7-vertex 4-polytope: published support, binomials, graphic", criterion3},
        {4, "3-cube: morally 2-level, 80 toric / 222 slack minimal generators", criterion4},
        {5, "8-vertex 5-polytope: toric, strict containment, dimensions 20/19", criterion5},
        {6, "perles gale diagram: 34 circuits matching the published support", criterion6},
        {7, "perles scaled subideal equals the published generators", criterion7},
        {8, "perles parametric matrices, rank nine, witness factorization", criterion8},
        {9, "toric ideal oracle equivalence on six catalog patterns", criterion9},
        {10, "property suites: saturation, vanishing, containment equivalences", criterion10},
    };

    int failures = 0;
    for (auto& c : criteria) {
        if (only && c.id != only) continue;
        auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.fn(st);
        } catch (const std::exception& e) {
            out.pass = false;
            out.details = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.label, secs, out.details.empty() ? "" : " -- ", out.details.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
