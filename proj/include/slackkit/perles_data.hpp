#pragma once

#include <array>
#include <string>
#include <vector>

#include "slackkit/matrix.hpp"
#include "slackkit/pattern.hpp"

namespace slackkit {
namespace perles_data {

// 12x34 vertex-facet non-incidence support of the Perles polytope
// (d = 8), rows ordered A,B,C,D,E,F,G,H,-F,-G,-H,-I.
inline const std::vector<std::string>& support_rows() {
    static const std::vector<std::string> rows = {
        "000***0000000********0000000000000",
        "000*00***0000****0000****000000000",
        "000000*00**00**00**00*000**0000000",
        "0000*000000**00**00*00**000***0000",
        "0000000*0*0*000000000**00*0**0***0",
        "*000000000*0*0000*0*000000*00*000*",
        "0*000000*00000000000000**0000**00*",
        "00*00*000000000000*0*0000*0000****",
        "*00*000*000000000000*000*00*000**0",
        "0*00*0000*000*000**0*00000***00*00",
        "00*000*00000*00*000000***0*0*00000",
        "00000*00*0**00*0*00*0*000*000**0**",
    };
    return rows;
}

inline SlackPattern pattern() { return pattern_from_strings(8, support_rows()); }

// The 12x13 submatrix of the first 13 columns, with its own row-major
// variable numbering x1..x36.
inline SlackPattern submatrix_pattern() {
    std::vector<std::string> rows;
    for (const auto& r : support_rows()) rows.push_back(r.substr(0, 13));
    return pattern_from_strings(8, rows);
}

// Variables (1-based, submatrix numbering) scaled to one: the edges of a
// maximal spanning tree of the restricted non-incidence graph.
inline const std::vector<std::size_t>& scaled_to_one() {
    static const std::vector<std::size_t> fixed = {1,  4,  5,  6,  7,  8,  9,  10,
                                                   13, 15, 16, 17, 18, 21, 22, 26,
                                                   27, 28, 29, 30, 31, 32, 33, 35};
    return fixed;
}

// Generators of the scaled slack subideal, in the 36-variable ring.
inline const std::vector<std::string>& subideal_generator_strings() {
    static const std::vector<std::string> gens = {
        "x36^2+x36-1", "x34-x36-1", "x25-x36",    "x24-x36", "x23-1",  "x20-x36",
        "x19-x36",     "x14-x36-1", "x12-x36",    "x11-1",   "x3-1",   "x2-x36-1",
    };
    return gens;
}

// Entries of the completed 12x34 parametrized slack matrix; tokens are
// 0, 1, a (=alpha), a1 (=alpha+1), a2 (=alpha+2), m (=1-alpha).
inline const std::vector<std::string>& completed_matrix_tokens() {
    static const std::vector<std::string> rows = {
        "0,0,0,1,a1,1,0,0,0,0,0,0,0,1,1,a,a1,a,1,1,a1,0,0,0,0,0,0,0,0,0,0,0,0,0",
        "0,0,0,1,0,0,1,1,1,0,0,0,0,m,1,a,a,0,0,0,0,a,m,1,a2,0,0,0,0,0,0,0,0,0",
        "0,0,0,0,0,0,1,0,0,1,1,0,0,1,1,0,0,1,a,0,0,1,0,0,0,m,a1,0,0,0,0,0,0,0",
        "0,0,0,0,1,0,0,0,0,0,0,a,1,0,0,1,1,0,0,1,0,0,1,1,0,0,0,1,1,1,0,0,0,0",
        "0,0,0,0,0,0,0,a1,0,1,0,1,0,0,0,0,0,0,0,0,0,1,a,0,0,1,0,a2,1,0,1,a2,a1,0",
        "1,0,0,0,0,0,0,0,0,0,1,0,a,0,0,0,0,m,0,a,0,0,0,0,0,0,1,0,0,a1,0,0,0,1",
        "0,a,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,m,1,0,0,0,0,1,m,0,0,1",
        "0,0,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,m,0,1,0,0,0,0,a,0,0,0,0,1,1,1,1",
        "a,0,0,a,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,m,0,0,0,1,0,0,a,0,0,0,1,m,0",
        "0,1,0,0,1,0,0,0,0,1,0,0,0,1,0,0,0,1,1,0,1,0,0,0,0,0,1,1,m,0,0,1,0,0",
        "0,0,1,0,0,0,1,0,0,0,0,0,1,0,0,1,0,0,0,0,0,0,1,a1,a1,0,a,0,a,0,0,0,0,0",
        "0,0,0,0,0,1,0,0,a1,0,1,a,0,0,1,0,1,0,0,1,0,1,0,0,0,1,0,0,0,a2,a1,0,1,a2",
    };
    return rows;
}

inline QuadExt token_value(const std::string& tok, const QuadExt& alpha) {
    if (tok == "0") return QuadExt(0);
    if (tok == "1") return QuadExt(1);
    if (tok == "a") return alpha;
    if (tok == "a1") return alpha + QuadExt(1);
    if (tok == "a2") return alpha + QuadExt(2);
    if (tok == "m") return QuadExt(1) - alpha;
    throw ParseError("unknown matrix token '" + tok + "'");
}

// Completed parametrized matrix instantiated at a root of x^2+x-1.
inline ExactMatrix<QuadExt> completed_matrix(const QuadExt& alpha) {
    const auto& rows = completed_matrix_tokens();
    ExactMatrix<QuadExt> m(12, 34);
    for (std::size_t i = 0; i < 12; ++i) {
        std::size_t j = 0;
        std::string tok;
        for (char c : rows[i] + ",") {
            if (c == ',') {
                m(i, j++) = token_value(tok, alpha);
                tok.clear();
            } else {
                tok += c;
            }
        }
        if (j != 34) throw ParseError("completed matrix row has wrong length");
    }
    return m;
}

// Affine Gale diagram lifted to 12 vectors in Q(sqrt5)^3.  Black points
// enter as (p, 1), open circles as -(p, 1); the plane coordinates carry
// a y-rescaling that moves the regular-pentagon data into Q(sqrt5).
inline ExactMatrix<QuadExt> gale_vectors() {
    const QuadExt phi = QuadExt::phi();
    const QuadExt one(1), zero(0);
    // the interior point I sits on the four lines AH, BG, CF, DE
    const QuadExt iy = QuadExt(Rational(1, 2), Rational(1, 10));  // (5+sqrt5)/10
    struct P {
        QuadExt x, y;
    };
    const P a{-(phi + phi), zero}, b{phi + phi + QuadExt(2), zero};
    const P c{-phi, phi + one}, d{phi + QuadExt(2), phi + one};
    const P e{zero, zero}, f{QuadExt(2), zero};
    const P g{one - phi, one}, h{phi + one, one};
    const P i{one, iy};
    std::vector<P> black = {a, b, c, d, e, f, g, h};
    std::vector<P> white = {f, g, h, i};
    ExactMatrix<QuadExt> m(12, 3);
    for (std::size_t k = 0; k < 8; ++k) {
        m(k, 0) = black[k].x;
        m(k, 1) = black[k].y;
        m(k, 2) = one;
    }
    for (std::size_t k = 0; k < 4; ++k) {
        m(8 + k, 0) = -white[k].x;
        m(8 + k, 1) = -white[k].y;
        m(8 + k, 2) = -one;
    }
    return m;
}

inline std::vector<std::string> gale_labels() {
    return {"A", "B", "C", "D", "E", "F", "G", "H", "-F", "-G", "-H", "-I"};
}

} // namespace perles_data
} // namespace slackkit
