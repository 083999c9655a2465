#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slackkit/monomial.hpp"
#include "slackkit/numeric.hpp"

namespace slackkit {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted in
// descending standard grevlex; that canonical form backs equality,
// printing and hashing.  Gröbner routines that work under a different
// order keep their own sorted views.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    // Takes any term list, sorts and coalesces it.
    Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
        normalize(std::move(terms));
    }

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (sgn(c) != 0) p.terms_.push_back({c, Monomial(nvars)});
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        p.terms_.push_back({Rational(1), Monomial::variable(nvars, i)});
        return p;
    }

    static Polynomial from_monomial(std::size_t nvars, const Rational& c, Monomial m) {
        Polynomial p(nvars);
        if (sgn(c) != 0) p.terms_.push_back({c, std::move(m)});
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint32_t d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial() const { return terms_.size() == 2; }

    // exactly two terms with coefficients +c, -c
    bool is_pure_difference() const {
        return terms_.size() == 2 && sgn(terms_[0].coeff + terms_[1].coeff) == 0;
    }

    bool uses_variable(std::size_t v) const {
        for (const auto& t : terms_)
            if (t.mono[v] > 0) return true;
        return false;
    }

    // leading term under an arbitrary order (single scan)
    const Term& leading_term(const TermOrder& order) const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        if (order.is_standard_grevlex()) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        std::vector<Term> out;
        out.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            int c = grevlex_compare(f.terms_[i].mono, g.terms_[j].mono);
            if (c > 0)
                out.push_back(f.terms_[i++]);
            else if (c < 0)
                out.push_back(g.terms_[j++]);
            else {
                Rational s = f.terms_[i].coeff + g.terms_[j].coeff;
                if (sgn(s) != 0) out.push_back({std::move(s), f.terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < f.terms_.size(); ++i) out.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
        Polynomial r(f.nvars_);
        r.terms_ = std::move(out);
        return r;
    }

    friend Polynomial operator-(const Polynomial& f) {
        Polynomial r = f;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

    Polynomial scaled(const Rational& c) const {
        if (sgn(c) == 0) return Polynomial(nvars_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    // this * c * m
    Polynomial times_monomial(const Rational& c, const Monomial& m) const {
        if (sgn(c) == 0) return Polynomial(nvars_);
        Polynomial r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
        return r;  // multiplying by a fixed monomial preserves grevlex order
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        std::vector<Term> cross;
        cross.reserve(f.terms_.size() * g.terms_.size());
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) cross.push_back({a.coeff * b.coeff, a.mono * b.mono});
        return Polynomial(f.nvars_, std::move(cross));
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        if (f.nvars_ != g.nvars_ || f.terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < f.terms_.size(); ++i)
            if (f.terms_[i].coeff != g.terms_[i].coeff || f.terms_[i].mono != g.terms_[i].mono)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

    // divide by gcd of coefficients, make leading coefficient positive
    Polynomial primitive_part() const {
        if (terms_.empty()) return *this;
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& t : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (sgn(terms_.front().coeff) < 0) scale = -scale;
        return scaled(scale);
    }

    Polynomial monic(const TermOrder& order) const {
        if (terms_.empty()) return *this;
        return scaled(Rational(1) / leading_term(order).coeff);
    }

    // full evaluation; K is Rational or QuadExt
    template <typename K>
    K evaluate(const std::vector<K>& values) const {
        if (values.size() != nvars_) throw DimensionMismatch("evaluation point length");
        K acc = scalar_traits<K>::zero();
        for (const auto& t : terms_) {
            K prod = K(t.coeff);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (std::uint32_t k = 0; k < t.mono[v]; ++k) prod = prod * values[v];
            acc = acc + prod;
        }
        return acc;
    }

    // partial substitution with rational values (empty optionals stay symbolic)
    Polynomial substitute(const std::vector<std::optional<Rational>>& assignment) const {
        if (assignment.size() != nvars_) throw DimensionMismatch("substitution length");
        std::vector<Term> out;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            Monomial m(nvars_);
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (t.mono[v] == 0) continue;
                if (assignment[v]) {
                    for (std::uint32_t k = 0; k < t.mono[v]; ++k) c *= *assignment[v];
                } else {
                    m.set(v, t.mono[v]);
                }
            }
            if (sgn(c) != 0) out.push_back({std::move(c), std::move(m)});
        }
        return Polynomial(nvars_, std::move(out));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (sgn(c) < 0) { os << "-"; c = -c; }
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
                if (sgn(c) < 0) c = -c;
            }
            first = false;
            bool has_vars = !t.mono.is_one();
            if (c != 1 || !has_vars) {
                os << c.get_str();
                if (has_vars) os << "*";
            }
            bool star = false;
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (t.mono[v] == 0) continue;
                if (star) os << "*";
                star = true;
                os << "x" << (v + 1);
                if (t.mono[v] > 1) os << "^" << t.mono[v];
            }
        }
        return os.str();
    }

    static Polynomial parse(std::size_t nvars, std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void check_ring(const Polynomial& g) const {
        if (nvars_ != g.nvars_)
            throw RingMismatch("polynomials live in different rings (" +
                               std::to_string(nvars_) + " vs " + std::to_string(g.nvars_) +
                               " variables)");
    }

    void normalize(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return grevlex_compare(a.mono, b.mono) > 0;
        });
        terms_.clear();
        for (auto& t : terms) {
            if (sgn(t.coeff) == 0) continue;
            if (!terms_.empty() && terms_.back().mono == t.mono)
                terms_.back().coeff += t.coeff;
            else
                terms_.push_back(std::move(t));
            if (!terms_.empty() && sgn(terms_.back().coeff) == 0) terms_.pop_back();
        }
    }

    std::size_t nvars_;
    std::vector<Term> terms_;
};

// --- parsing -----------------------------------------------------------

namespace detail {

struct PolyLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw ParseError("expected digits at position " + std::to_string(pos) +
                             " in polynomial '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace detail

inline Polynomial Polynomial::parse(std::size_t nvars, std::string_view text) {
    detail::PolyLexer lx{text};
    std::vector<Term> terms;
    if (lx.eof()) throw ParseError("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
            sign = 1;
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos) +
                             " in polynomial '" + std::string(text) + "'");
        }
        first = false;
        Rational coeff(sign);
        Monomial mono(nvars);
        bool saw_factor = false;
        for (;;) {
            char c = lx.peek();
            if (c == 'x') {
                ++lx.pos;
                std::string idx = lx.number();
                std::size_t v = std::stoul(idx);
                if (v < 1 || v > nvars)
                    throw ParseError("variable x" + idx + " outside ring with " +
                                     std::to_string(nvars) + " variables");
                std::uint32_t e = 1;
                if (lx.accept('^')) e = static_cast<std::uint32_t>(std::stoul(lx.number()));
                mono.set(v - 1, mono[v - 1] + e);
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                std::string den = "1";
                if (lx.accept('/')) den = lx.number();
                coeff *= parse_rational(num + "/" + den);
                saw_factor = true;
            } else {
                break;
            }
            if (!lx.accept('*')) break;
        }
        if (!saw_factor)
            throw ParseError("dangling sign at position " + std::to_string(lx.pos) +
                             " in polynomial '" + std::string(text) + "'");
        terms.push_back({std::move(coeff), std::move(mono)});
    }
    return Polynomial(nvars, std::move(terms));
}

// --- classification ----------------------------------------------------

struct PolynomialClass {
    bool is_monomial = false;
    bool is_binomial = false;
    bool is_pure_difference = false;
    std::optional<bool> is_row_column_homogeneous;  // set when a cell map is given
};

// cell_of[v] = (row, col) of variable v in a symbolic slack matrix.
// A polynomial is row/column homogeneous when every monomial has the
// same total degree in the variables of each row and of each column.
inline PolynomialClass classify_polynomial(
    const Polynomial& f,
    const std::vector<std::pair<std::size_t, std::size_t>>* cell_of = nullptr) {
    PolynomialClass out;
    out.is_monomial = f.is_monomial();
    out.is_binomial = f.is_binomial();
    out.is_pure_difference = f.is_pure_difference();
    if (!cell_of) return out;

    std::size_t max_row = 0, max_col = 0;
    for (const auto& [r, c] : *cell_of) {
        max_row = std::max(max_row, r + 1);
        max_col = std::max(max_col, c + 1);
    }
    for (std::size_t v = 0; v < f.nvars(); ++v)
        if (f.uses_variable(v) && v >= cell_of->size())
            throw ValidationError("pattern does not cover variable x" + std::to_string(v + 1));

    bool homogeneous = true;
    std::vector<std::uint32_t> row_deg0(max_row), col_deg0(max_col);
    bool have_ref = false;
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> row_deg(max_row, 0), col_deg(max_col, 0);
        for (std::size_t v = 0; v < f.nvars() && v < cell_of->size(); ++v) {
            if (t.mono[v] == 0) continue;
            row_deg[(*cell_of)[v].first] += t.mono[v];
            col_deg[(*cell_of)[v].second] += t.mono[v];
        }
        if (!have_ref) {
            row_deg0 = row_deg;
            col_deg0 = col_deg;
            have_ref = true;
        } else if (row_deg != row_deg0 || col_deg != col_deg0) {
            homogeneous = false;
            break;
        }
    }
    out.is_row_column_homogeneous = homogeneous;
    return out;
}

} // namespace slackkit
