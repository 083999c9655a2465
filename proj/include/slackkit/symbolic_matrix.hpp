#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "slackkit/pattern.hpp"
#include "slackkit/polynomial.hpp"

namespace slackkit {

// Symbolic slack matrix: each star of the pattern is a distinct
// variable until a scaling fixes it to a field constant.
class SymbolicSlackMatrix {
public:
    struct Cell {
        enum class Kind { Zero, Var, Const } kind = Kind::Zero;
        std::size_t var = 0;  // 0-based
        Rational value;
    };

    explicit SymbolicSlackMatrix(SlackPattern pattern) : pattern_(std::move(pattern)) {
        cells_.resize(pattern_.rows() * pattern_.cols());
        for (std::size_t i = 0; i < pattern_.rows(); ++i)
            for (std::size_t j = 0; j < pattern_.cols(); ++j)
                if (pattern_.is_star(i, j)) {
                    Cell& c = cell(i, j);
                    c.kind = Cell::Kind::Var;
                    c.var = pattern_.var_at(i, j);
                }
    }

    const SlackPattern& pattern() const { return pattern_; }
    std::size_t rows() const { return pattern_.rows(); }
    std::size_t cols() const { return pattern_.cols(); }
    std::size_t num_vars() const { return pattern_.num_vars(); }

    const Cell& cell(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }

    void fix_variable(std::size_t var, const Rational& value) {
        if (sgn(value) == 0) throw ValidationError("scaling to zero would change the support");
        auto [i, j] = pattern_.cell_of(var);
        Cell& c = cell(i, j);
        c.kind = Cell::Kind::Const;
        c.value = value;
    }

    std::vector<std::size_t> free_variables() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < num_vars(); ++v) {
            auto [i, j] = pattern_.cell_of(v);
            if (cell(i, j).kind == Cell::Kind::Var) out.push_back(v);
        }
        return out;
    }

    Polynomial cell_polynomial(std::size_t i, std::size_t j) const {
        const Cell& c = cell(i, j);
        switch (c.kind) {
            case Cell::Kind::Zero: return Polynomial::zero(num_vars());
            case Cell::Kind::Var: return Polynomial::variable(num_vars(), c.var);
            case Cell::Kind::Const: return Polynomial::constant(num_vars(), c.value);
        }
        return Polynomial::zero(num_vars());
    }

    // Determinant of the square submatrix on the given row/column index
    // sets, by expansion along the sparsest line with memoization on
    // (row set, column set).  Requires at most 64 rows and columns.
    Polynomial submatrix_determinant(const std::vector<std::size_t>& rows_sel,
                                     const std::vector<std::size_t>& cols_sel) const {
        if (rows_sel.size() != cols_sel.size())
            throw DimensionMismatch("symbolic determinant of non-square selection");
        Memo memo;
        return det_rec(rows_sel, cols_sel, memo);
    }

    Polynomial determinant() const {
        std::vector<std::size_t> r(rows()), c(cols());
        for (std::size_t i = 0; i < rows(); ++i) r[i] = i;
        for (std::size_t j = 0; j < cols(); ++j) c[j] = j;
        if (rows() != cols()) throw DimensionMismatch("determinant of non-square matrix");
        return submatrix_determinant(r, c);
    }

private:
    struct Key {
        std::uint64_t r, c;
        bool operator==(const Key& o) const { return r == o.r && c == o.c; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = k.r * 0x9e3779b97f4a7c15ull;
            h ^= k.c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };
    using Memo = std::unordered_map<Key, Polynomial, KeyHash>;

    Cell& cell(std::size_t i, std::size_t j) { return cells_[i * cols() + j]; }

    bool nonzero(std::size_t i, std::size_t j) const {
        return cell(i, j).kind != Cell::Kind::Zero;
    }

    Polynomial det_rec(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs,
                       Memo& memo) const {
        const std::size_t k = rs.size();
        if (k == 0) return Polynomial::constant(num_vars(), Rational(1));
        Key key{0, 0};
        for (auto r : rs) key.r |= std::uint64_t(1) << r;
        for (auto c : cs) key.c |= std::uint64_t(1) << c;
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // sparsest row or column within the selection
        std::size_t best = 0, best_count = k + 1;
        bool best_is_row = true;
        for (std::size_t a = 0; a < k; ++a) {
            std::size_t n = 0;
            for (std::size_t b = 0; b < k; ++b) n += nonzero(rs[a], cs[b]);
            if (n < best_count) { best_count = n; best = a; best_is_row = true; }
        }
        for (std::size_t b = 0; b < k; ++b) {
            std::size_t n = 0;
            for (std::size_t a = 0; a < k; ++a) n += nonzero(rs[a], cs[b]);
            if (n < best_count) { best_count = n; best = b; best_is_row = false; }
        }
        Polynomial acc = Polynomial::zero(num_vars());
        if (best_count == 0) {
            memo.emplace(key, acc);
            return acc;
        }
        if (k == 1) {
            acc = cell_polynomial(rs[0], cs[0]);
            memo.emplace(key, acc);
            return acc;
        }
        if (best_is_row) {
            std::vector<std::size_t> sub_rows;
            for (std::size_t a = 0; a < k; ++a)
                if (a != best) sub_rows.push_back(rs[a]);
            for (std::size_t b = 0; b < k; ++b) {
                if (!nonzero(rs[best], cs[b])) continue;
                std::vector<std::size_t> sub_cols;
                for (std::size_t x = 0; x < k; ++x)
                    if (x != b) sub_cols.push_back(cs[x]);
                Polynomial minor = det_rec(sub_rows, sub_cols, memo);
                if (minor.is_zero()) continue;
                Polynomial piece = multiply_by_cell(minor, rs[best], cs[b]);
                if ((best + b) % 2 == 1) piece = -piece;
                acc = acc + piece;
            }
        } else {
            std::vector<std::size_t> sub_cols;
            for (std::size_t b = 0; b < k; ++b)
                if (b != best) sub_cols.push_back(cs[b]);
            for (std::size_t a = 0; a < k; ++a) {
                if (!nonzero(rs[a], cs[best])) continue;
                std::vector<std::size_t> sub_rows;
                for (std::size_t x = 0; x < k; ++x)
                    if (x != a) sub_rows.push_back(rs[x]);
                Polynomial minor = det_rec(sub_rows, sub_cols, memo);
                if (minor.is_zero()) continue;
                Polynomial piece = multiply_by_cell(minor, rs[a], cs[best]);
                if ((a + best) % 2 == 1) piece = -piece;
                acc = acc + piece;
            }
        }
        memo.emplace(key, acc);
        return acc;
    }

    Polynomial multiply_by_cell(const Polynomial& p, std::size_t i, std::size_t j) const {
        const Cell& c = cell(i, j);
        if (c.kind == Cell::Kind::Const) return p.scaled(c.value);
        return p.times_monomial(Rational(1), Monomial::variable(num_vars(), c.var));
    }

    SlackPattern pattern_;
    std::vector<Cell> cells_;
};

} // namespace slackkit
