#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slackkit/catalog.hpp"
#include "slackkit/polytope.hpp"
#include "test_helpers.hpp"

using namespace slackkit;
using test_helpers::random_rational;

TEST_CASE("facet enumeration basics") {
    SECTION("triangle") {
        VRep t = simplex(2);
        auto fe = facet_enumeration(t);
        CHECK(fe.h.facet_count() == 3);
    }
    SECTION("unit cube") {
        auto fe = facet_enumeration(cube(3));
        REQUIRE(fe.h.facet_count() == 6);
        for (const auto& inc : fe.incidence) CHECK(inc.size() == 4);
    }
    SECTION("simplices of all catalog dimensions") {
        for (std::size_t d = 1; d <= 6; ++d)
            CHECK(facet_enumeration(simplex(d)).h.facet_count() == d + 1);
    }
    SECTION("degenerate input is rejected with a witness") {
        VRep flat{2, ExactMatrix<Rational>(3, 2)};
        flat.vertices(1, 0) = 1;
        flat.vertices(2, 0) = 2;  // three collinear points
        CHECK_THROWS_WITH(facet_enumeration(flat),
                          Catch::Matchers::ContainsSubstring("not full-dimensional"));
    }
}

TEST_CASE("the 7-vertex 4-polytope of the catalog") {
    VRep p = seven_vertex_four_polytope();
    auto fe = facet_enumeration(p);
    REQUIRE(fe.h.facet_count() == 7);

    // f-vector (7,17,17,7): check vertex and facet counts, and that the
    // support matches the published pattern up to column order
    auto s = slack_matrix(p, fe.h);
    SlackPattern mine = SlackPattern::from_matrix(4, s);
    SlackPattern published = published_pattern_7vertex();
    auto perm = mine.match_columns(published);
    REQUIRE(perm.has_value());
    CHECK(mine.permuted_columns(*perm).same_support(published));
    CHECK(mine.num_vars() == 17);
}

TEST_CASE("the 8-vertex 5-polytope of the catalog") {
    VRep p = eight_vertex_five_polytope();
    auto fe = facet_enumeration(p);
    REQUIRE(fe.h.facet_count() == 12);
    SlackPattern mine = SlackPattern::from_matrix(5, slack_matrix(p, fe.h));
    SlackPattern published = published_pattern_8vertex();
    auto perm = mine.match_columns(published);
    REQUIRE(perm.has_value());
    CHECK(mine.permuted_columns(*perm).same_support(published));
    CHECK(mine.num_vars() == 32);
}

TEST_CASE("slack matrices") {
    SECTION("unit square has two zeros per row and rank 3") {
        auto fe = facet_enumeration(cube(2));
        auto s = slack_matrix(cube(2), fe.h);
        REQUIRE(s.rows() == 4);
        REQUIRE(s.cols() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            std::size_t zeros = 0;
            for (std::size_t j = 0; j < 4; ++j) zeros += sgn(s(i, j)) == 0;
            CHECK(zeros == 2);
        }
        CHECK(rank(s) == 3);
    }
    SECTION("simplex slack matrix is identity-patterned") {
        for (std::size_t d = 2; d <= 4; ++d) {
            auto p = simplex(d);
            auto s = slack_matrix(p, facet_enumeration(p).h);
            std::size_t zeros = 0, stars = 0;
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = 0; j <= d; ++j) (sgn(s(i, j)) == 0 ? zeros : stars)++;
            CHECK(stars == d + 1);  // one off-facet per vertex
            CHECK(rank(s) == d + 1);
        }
    }
    SECTION("rank is d+1 for catalog polytopes") {
        for (const char* name : {"square", "triangle", "cube3", "cross3", "bisimplex3",
                                 "example-7vertex-4polytope", "example-8vertex-5polytope"}) {
            VRep p = std::get<VRep>(construct_catalog(name));
            auto s = slack_matrix(p, facet_enumeration(p).h);
            CHECK(rank(s) == p.d + 1);
        }
    }
    SECTION("invalid H-description is rejected") {
        auto fe = facet_enumeration(cube(2));
        HRep bad = fe.h;
        bad.rhs[0] -= 2;  // pushes a vertex outside
        CHECK_THROWS_AS(slack_matrix(cube(2), bad), ValidationError);
    }
}

TEST_CASE("slack matrix validation") {
    auto fe = facet_enumeration(cube(2));
    auto s = slack_matrix(cube(2), fe.h);
    SlackPattern pat = SlackPattern::from_matrix(2, s);
    SECTION("true slack matrix passes all three conditions") {
        auto rep = validate_slack_matrix(s, pat);
        CHECK(rep.support_ok);
        CHECK(rep.rank_ok);
        CHECK(rep.ones_in_column_span);
        CHECK(rep.all());
    }
    SECTION("all-ones matrix fails the support condition") {
        ExactMatrix<Rational> ones(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
        auto rep = validate_slack_matrix(ones, pat);
        CHECK_FALSE(rep.support_ok);
        CHECK_FALSE(rep.all());
    }
}

TEST_CASE("catalog constructions") {
    SECTION("product of segments is the square") {
        VRep sq = std::get<VRep>(construct_catalog("product(simplex1,simplex1)"));
        CHECK(sq.vertex_count() == 4);
        CHECK(facet_enumeration(sq).h.facet_count() == 4);
    }
    SECTION("bisimplex has the K32 incidence pattern") {
        VRep b = std::get<VRep>(construct_catalog("bisimplex3"));
        CHECK(b.vertex_count() == 5);
        auto fe = facet_enumeration(b);
        REQUIRE(fe.h.facet_count() == 6);
        auto pat = SlackPattern::from_matrix(3, slack_matrix(b, fe.h));
        // vertex-edge incidence of K_{3,2}: every column has exactly two
        // stars, simplex-2 vertices are off two facets, segment vertices
        // off three
        for (std::size_t j = 0; j < 6; ++j) CHECK(pat.col_star_count(j) == 2);
        std::multiset<std::size_t> row_counts;
        for (std::size_t i = 0; i < 5; ++i) row_counts.insert(pat.row_star_count(i));
        CHECK(row_counts == std::multiset<std::size_t>{2, 2, 2, 3, 3});
    }
    SECTION("facet and vertex counting identities") {
        VRep p = simplex(2), q = cube(2);
        auto pf = facet_enumeration(p).h.facet_count();
        auto qf = facet_enumeration(q).h.facet_count();
        VRep prod = product(p, q);
        CHECK(prod.vertex_count() == p.vertex_count() * q.vertex_count());
        CHECK(facet_enumeration(prod).h.facet_count() == pf + qf);
        VRep sum = free_sum(p, q);
        CHECK(sum.vertex_count() == p.vertex_count() + q.vertex_count());
        CHECK(facet_enumeration(sum).h.facet_count() == pf * qf);
    }
    SECTION("pyramid and prism") {
        VRep pyr = pyramid(simplex(2));
        CHECK(pyr.d == 3);
        CHECK(pyr.vertex_count() == 4);
        CHECK(facet_enumeration(pyr).h.facet_count() == 4);  // a simplex
        VRep pr = prism(simplex(2));
        CHECK(pr.vertex_count() == 6);
        CHECK(facet_enumeration(pr).h.facet_count() == 5);
    }
    SECTION("unknown names carry the catalog") {
        CHECK_THROWS_WITH(construct_catalog("dodecahedron"),
                          Catch::Matchers::ContainsSubstring("known entries"));
    }
    SECTION("perles entry is a pattern") {
        auto e = construct_catalog("perles");
        REQUIRE(std::holds_alternative<SlackPattern>(e));
        const auto& pat = std::get<SlackPattern>(e);
        CHECK(pat.rows() == 12);
        CHECK(pat.cols() == 34);
        CHECK(pat.dimension() == 8);
        CHECK(pat.num_vars() == 120);
    }
}

TEST_CASE("round trip: catalog polytopes validate their own slack matrices") {
    for (const char* name : {"square", "triangle", "simplex4", "cube3", "cross3", "bisimplex3",
                             "example-7vertex-4polytope", "example-8vertex-5polytope",
                             "freesum(simplex2,simplex2)"}) {
        VRep p = std::get<VRep>(construct_catalog(name));
        auto fe = facet_enumeration(p);
        auto s = slack_matrix(p, fe.h);
        auto rep = validate_slack_matrix(s, SlackPattern::from_matrix(p.d, s));
        INFO(name);
        CHECK(rep.all());
    }
}

TEST_CASE("slack matrix equivariance") {
    std::mt19937_64 rng(321);
    VRep p = std::get<VRep>(construct_catalog("bisimplex3"));
    auto fe = facet_enumeration(p);
    auto s = slack_matrix(p, fe.h);

    SECTION("translation leaves slacks unchanged") {
        VRep q = p;
        std::vector<Rational> shift = {random_rational(rng), random_rational(rng),
                                       random_rational(rng)};
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            for (std::size_t j = 0; j < q.d; ++j) q.vertices(i, j) += shift[j];
        HRep h = fe.h;
        for (std::size_t f = 0; f < h.facet_count(); ++f)
            for (std::size_t j = 0; j < q.d; ++j) h.rhs[f] += h.w_matrix(f, j) * shift[j];
        CHECK(slack_matrix(q, h) == s);
    }
    SECTION("rescaling an inequality scales its column") {
        HRep h = fe.h;
        Rational c(3, 2);
        for (std::size_t j = 0; j < p.d; ++j) h.w_matrix(0, j) *= c;
        h.rhs[0] *= c;
        auto s2 = slack_matrix(p, h);
        for (std::size_t i = 0; i < s.rows(); ++i) {
            CHECK(s2(i, 0) == s(i, 0) * c);
            for (std::size_t j = 1; j < s.cols(); ++j) CHECK(s2(i, j) == s(i, j));
        }
    }
}
