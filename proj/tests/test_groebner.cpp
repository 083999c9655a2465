#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slackkit/groebner.hpp"
#include "test_helpers.hpp"

using namespace slackkit;
using test_helpers::random_polynomial;

namespace {
Polynomial P(std::size_t nvars, const std::string& s) { return Polynomial::parse(nvars, s); }
Ideal I(std::size_t nvars, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(P(nvars, s));
    return Ideal(nvars, std::move(g));
}
} // namespace

TEST_CASE("normal form examples") {
    CHECK(normal_form(P(2, "x1^2"), {P(2, "x1")}).is_zero());
    CHECK(normal_form(P(2, "x1*x2+x2"), {P(2, "x1-1")}) == P(2, "2*x2"));
    // self reduction
    auto g1 = P(2, "x1^2-x2");
    auto g2 = P(2, "x1*x2-1");
    for (const auto& g : {g1, g2}) CHECK(normal_form(g, {g1, g2}).is_zero());
}

TEST_CASE("division certificate reconstructs the input") {
    std::mt19937_64 rng(123321);
    for (int it = 0; it < 60; ++it) {
        Polynomial f = random_polynomial(rng, 3, 5, 3);
        std::vector<Polynomial> basis;
        for (int k = 0; k < 2; ++k) {
            Polynomial g = random_polynomial(rng, 3, 3, 2);
            if (!g.is_zero()) basis.push_back(g);
        }
        if (basis.empty()) continue;
        DivisionCertificate cert;
        Polynomial r = normal_form(f, basis, TermOrder::grevlex(), nullptr, &cert);
        Polynomial rebuilt = cert.remainder;
        for (std::size_t k = 0; k < basis.size(); ++k)
            rebuilt = rebuilt + cert.quotients[k] * basis[k];
        CHECK(rebuilt == f);
        CHECK(r == cert.remainder);
    }
}

TEST_CASE("reduced groebner basis examples") {
    SECTION("substitution ideal under lex") {
        auto gb = reduced_groebner(I(2, {"x1-1", "x1*x2-1"}), TermOrder::lex());
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == P(2, "x1-1"));
        CHECK(gb[1] == P(2, "x2-1"));
    }
    SECTION("single binomial is already reduced") {
        auto gb = reduced_groebner(I(8, {"x2*x3*x6*x7 - x1*x4*x5*x8"}), TermOrder::grevlex());
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == P(8, "x2*x3*x6*x7 - x1*x4*x5*x8"));
    }
    SECTION("textbook example has the expected basis") {
        // <x^2+y, xy-1> grevlex: classic completion
        auto gb = reduced_groebner(I(2, {"x1^2+x2", "x1*x2-1"}), TermOrder::grevlex());
        for (const auto& g : gb) {
            CHECK(normal_form(P(2, "x1^2+x2"), gb).is_zero());
            CHECK(normal_form(P(2, "x1*x2-1"), gb).is_zero());
            (void)g;
        }
        // x2^2 * x1 = x1 x2 * x2 -> x2; and x1 = -x2^2 ... membership checks:
        CHECK(normal_form(P(2, "x1+x2^2"), gb).is_zero());
    }
}

TEST_CASE("groebner idempotence") {
    std::mt19937_64 rng(246810);
    for (int it = 0; it < 25; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            auto g = random_polynomial(rng, 3, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto gb = reduced_groebner(Ideal(3, gens), TermOrder::grevlex());
        auto gb2 = reduced_groebner(Ideal(3, gb), TermOrder::grevlex());
        CHECK(gb == gb2);
    }
}

TEST_CASE("membership and containment") {
    auto f = P(3, "x1*x2 - x3");
    auto g = P(3, "x2^2 - 1");
    Ideal ideal(3, {f, g});
    CHECK(ideal_member(f, ideal));
    CHECK(ideal_member(f + g.scaled(Rational(7, 2)), ideal));
    CHECK_FALSE(ideal_member(P(3, "x1"), ideal));
    CHECK(is_subideal(Ideal(3, {f}), ideal));
    CHECK_FALSE(is_subideal(ideal, Ideal(3, {f})));
    CHECK(ideal_equal(I(2, {"x1-x2"}), I(2, {"2*x1-2*x2"})));
}

TEST_CASE("elimination") {
    SECTION("rabinowitsch saturation by hand") {
        // eliminate y (=x3) from <y*x1 - 1, x1*x2>  ->  <x2>
        Ideal big = I(3, {"x3*x1-1", "x1*x2"});
        Ideal out = eliminate(big, {2});
        REQUIRE(out.generators().size() == 1);
        CHECK(out.generators()[0] == P(3, "x2"));
    }
    SECTION("chain of differences") {
        Ideal out = eliminate(I(3, {"x1-x2", "x2-x3"}), {1});
        REQUIRE(out.generators().size() == 1);
        CHECK(out.generators()[0] == P(3, "x1-x3"));
    }
    SECTION("eliminating nothing keeps the ideal") {
        Ideal in = I(2, {"x1^2-x2", "x1*x2"});
        Ideal out = eliminate(in, {});
        CHECK(ideal_equal(in, out));
    }
    SECTION("every eliminated generator still lies in the ideal") {
        std::mt19937_64 rng(1010);
        for (int it = 0; it < 20; ++it) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k) {
                auto g = random_polynomial(rng, 3, 3, 2);
                if (!g.is_zero()) gens.push_back(g);
            }
            if (gens.empty()) continue;
            Ideal in(3, gens);
            Ideal out = eliminate(in, {0});
            for (const auto& g : out.generators()) {
                CHECK_FALSE(g.uses_variable(0));
                CHECK(ideal_member(g, in));
            }
        }
    }
}

TEST_CASE("saturation examples") {
    SECTION("monomial saturation") {
        Ideal out = saturate(I(2, {"x1*x2"}), {0});
        CHECK(ideal_equal(out, I(2, {"x2"})));
    }
    SECTION("factor out x1") {
        Ideal out = saturate(I(2, {"x1^2 - x1*x2"}), {0, 1});
        CHECK(ideal_equal(out, I(2, {"x1 - x2"})));
    }
    SECTION("square minor ideal is already saturated") {
        Ideal sq = I(8, {"x2*x3*x6*x7 - x1*x4*x5*x8"});
        Ideal out = saturate_all_variables(sq);
        CHECK(ideal_equal(out, sq));
        auto gb = reduced_groebner(out, TermOrder::grevlex());
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == P(8, "x2*x3*x6*x7 - x1*x4*x5*x8"));
    }
}

TEST_CASE("saturation is idempotent on random small ideals") {
    std::mt19937_64 rng(777555);
    int done = 0;
    for (int it = 0; it < 200 && done < 25; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            auto g = random_polynomial(rng, 3, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal in(3, gens);
        if (ideal_member(Polynomial::constant(3, Rational(1)), in)) continue;  // unit ideal
        ++done;
        Ideal s1 = saturate_all_variables(in);
        Ideal s2 = saturate_all_variables(s1);
        CHECK(ideal_equal(s1, s2));
    }
    CHECK(done >= 10);
}

TEST_CASE("homogeneous saturation shortcut agrees with rabinowitsch") {
    std::mt19937_64 rng(424243);
    int done = 0;
    for (int it = 0; it < 300 && done < 20; ++it) {
        // random homogeneous binomial/trinomial ideals in 3 variables
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            std::uniform_int_distribution<int> expd(0, 2);
            auto mono = [&](int a, int b, int c) {
                Monomial m(3);
                m.set(0, a); m.set(1, b); m.set(2, c);
                return m;
            };
            int a = expd(rng), b = expd(rng), c = expd(rng);
            int d = a + b + c;
            int a2 = std::uniform_int_distribution<int>(0, d)(rng);
            int b2 = std::uniform_int_distribution<int>(0, d - a2)(rng);
            int c2 = d - a2 - b2;
            Polynomial g = Polynomial::from_monomial(3, Rational(1), mono(a, b, c)) -
                           Polynomial::from_monomial(3, Rational(2), mono(a2, b2, c2));
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal in(3, gens);
        bool homog = true;
        for (const auto& g : in.generators()) homog &= g.is_homogeneous();
        if (!homog) continue;
        ++done;
        for (std::size_t v = 0; v < 3; ++v) {
            Ideal fast = detail::saturate_var_homogeneous(in, v, nullptr);
            Ideal slow = detail::saturate_var_rabinowitsch(in, v, nullptr);
            CHECK(ideal_equal(fast, slow));
        }
    }
    CHECK(done >= 10);
}

TEST_CASE("budget exhaustion is reported distinctly") {
    Budget tiny = Budget::steps(3);
    Ideal hard = I(3, {"x1^3*x2-x3", "x2^3*x3-x1", "x3^3*x1-x2"});
    CHECK_THROWS_AS(reduced_groebner(hard, TermOrder::grevlex(), &tiny), BudgetExceeded);
}
