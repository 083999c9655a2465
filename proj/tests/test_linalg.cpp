#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slackkit/matrix.hpp"
#include "test_helpers.hpp"

using namespace slackkit;
using test_helpers::random_rational;

namespace {

ExactMatrix<Rational> make(std::size_t r, std::size_t c, std::vector<long> v) {
    ExactMatrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
    return m;
}

// independent oracle: cofactor expansion along the first row
template <typename K>
K cofactor_det(const ExactMatrix<K>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return scalar_traits<K>::one();
    if (n == 1) return m(0, 0);
    K acc = scalar_traits<K>::zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (scalar_traits<K>::is_zero(m(0, j))) continue;
        ExactMatrix<K> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub(i - 1, cc++) = m(i, k);
            }
        }
        K piece = m(0, j) * cofactor_det(sub);
        if (j % 2 == 0)
            acc = acc + piece;
        else
            acc = acc - piece;
    }
    return acc;
}

// slack matrix of the unit square in the library's canonical facet order
ExactMatrix<Rational> square_slack() {
    return make(4, 4,
                {0, 0, 1, 1,
                 0, 1, 0, 1,
                 1, 0, 1, 0,
                 1, 1, 0, 0});
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(ExactMatrix<Rational>::identity(3)) == 3);
    CHECK(rank(square_slack()) == 3);  // d+1 for the square
    ExactMatrix<Rational> z(2, 5);
    CHECK(rank(z) == 0);
}

TEST_CASE("bareiss determinant equals cofactor expansion") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = dim(rng);
        ExactMatrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant over the quadratic field") {
    ExactMatrix<QuadExt> m(2, 2);
    m(0, 0) = QuadExt::phi();
    m(0, 1) = QuadExt(1);
    m(1, 0) = QuadExt(1);
    m(1, 1) = QuadExt::phi() - QuadExt(1);
    // phi(phi-1) - 1 = phi^2 - phi - 1 = 0
    CHECK(is_zero(determinant(m)));
    CHECK(rank(m) == 1);
}

TEST_CASE("rank invariances") {
    std::mt19937_64 rng(2222);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        ExactMatrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = (rng() % 3 == 0) ? Rational(0) : random_rational(rng);
        std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        // permute rows and scale one row by a nonzero constant
        ExactMatrix<Rational> p = m;
        if (r > 1) {
            for (std::size_t j = 0; j < c; ++j) std::swap(p(0, j), p(r - 1, j));
        }
        for (std::size_t j = 0; j < c; ++j) p(0, j) *= Rational(7, 3);
        CHECK(rank(p) == rk);
    }
}

TEST_CASE("nullspace vectors satisfy Mv = 0 and rank-nullity") {
    std::mt19937_64 rng(9090);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        ExactMatrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = (rng() % 2 == 0) ? Rational(0) : random_rational(rng);
        auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == c);
        for (const auto& v : ns) {
            auto y = matvec(m, v);
            for (const auto& e : y) CHECK(sgn(e) == 0);
        }
    }
}

TEST_CASE("column span membership with witness") {
    auto s = square_slack();
    std::vector<Rational> ones(4, Rational(1));
    auto w = column_span_member(s, ones);
    REQUIRE(w.has_value());
    auto y = matvec(s, *w);
    CHECK(y == ones);

    // e1 is not in the span of the square's slack columns
    std::vector<Rational> e1 = {Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK_FALSE(column_span_member(s, e1).has_value());
    CHECK_THROWS_AS(column_span_member(s, std::vector<Rational>(3, Rational(1))),
                    DimensionMismatch);
}

TEST_CASE("rref is idempotent and canonical") {
    std::mt19937_64 rng(555);
    for (int it = 0; it < 30; ++it) {
        ExactMatrix<Rational> m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_rational(rng);
        auto r = rref(m);
        CHECK(rref(r) == r);
    }
}
