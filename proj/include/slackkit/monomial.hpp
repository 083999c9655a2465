#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "slackkit/errors.hpp"

namespace slackkit {

// Exponent vector of fixed length (the ambient ring's variable count).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exps() const { return e_; }

    bool is_one() const { return deg_ == 0; }

    void set(std::size_t i, std::uint32_t v) {
        deg_ += v - e_[i];
        e_[i] = v;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        r.deg_ += b.deg_;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    // b / a, requires divisibility
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r = b;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= a.e_[i];
        r.deg_ -= a.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < r.e_.size(); ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Folded support bitmask (variable index mod 64).  If a divides b
    // then mask(a) is a subset of mask(b), so this is a sound divisor
    // prefilter for any variable count.
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) m |= std::uint64_t(1) << (i & 63);
        return m;
    }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

// Graded reverse lexicographic comparison with the standard ranking
// x1 > x2 > ... ; returns +1 when a > b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
    }
    return 0;
}

inline int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
    return 0;
}

// Term orders: grevlex, lex, and block orders built from variable
// sequences.  A block order compares block by block; a monomial using a
// variable of an earlier block dominates.  Blocks with an explicit
// variable sequence also express permuted rankings (e.g. grevlex with
// one chosen variable ranked last, used by saturation).
class TermOrder {
public:
    enum class Kind { Grevlex, Lex };

    TermOrder() = default;

    static TermOrder grevlex() { return TermOrder(); }

    static TermOrder lex() {
        TermOrder o;
        o.kind_ = Kind::Lex;
        return o;
    }

    static TermOrder block(std::vector<std::vector<std::size_t>> blocks,
                           std::vector<Kind> kinds) {
        if (blocks.size() != kinds.size())
            throw Error("term order: block/kind count mismatch");
        TermOrder o;
        o.blocks_ = std::move(blocks);
        o.kinds_ = std::move(kinds);
        return o;
    }

    // Block order eliminating `vars`: the eliminated block dominates.
    static TermOrder elimination(const std::vector<std::size_t>& vars, std::size_t nvars) {
        std::vector<bool> in(nvars, false);
        for (auto v : vars) in[v] = true;
        std::vector<std::size_t> first, rest;
        for (std::size_t i = 0; i < nvars; ++i) (in[i] ? first : rest).push_back(i);
        return block({std::move(first), std::move(rest)}, {Kind::Grevlex, Kind::Grevlex});
    }

    // grevlex with variable `v` ranked last (smallest)
    static TermOrder grevlex_var_last(std::size_t v, std::size_t nvars) {
        std::vector<std::size_t> seq;
        for (std::size_t i = 0; i < nvars; ++i)
            if (i != v) seq.push_back(i);
        seq.push_back(v);
        return block({std::move(seq)}, {Kind::Grevlex});
    }

    bool is_standard_grevlex() const { return blocks_.empty() && kind_ == Kind::Grevlex; }
    bool is_standard_lex() const { return blocks_.empty() && kind_ == Kind::Lex; }

    int compare(const Monomial& a, const Monomial& b) const {
        if (blocks_.empty())
            return kind_ == Kind::Grevlex ? grevlex_compare(a, b) : lex_compare(a, b);
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            int c = compare_block(a, b, blocks_[k], kinds_[k]);
            if (c != 0) return c;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string description() const {
        if (is_standard_grevlex()) return "grevlex";
        if (is_standard_lex()) return "lex";
        return "block";
    }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    static int compare_block(const Monomial& a, const Monomial& b,
                             const std::vector<std::size_t>& seq, Kind kind) {
        if (kind == Kind::Grevlex) {
            std::uint32_t da = 0, db = 0;
            for (auto v : seq) { da += a[v]; db += b[v]; }
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = seq.size(); i-- > 0;) {
                std::size_t v = seq[i];
                if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
            }
            return 0;
        }
        for (auto v : seq)
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        return 0;
    }

    Kind kind_ = Kind::Grevlex;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<Kind> kinds_;
};

} // namespace slackkit
