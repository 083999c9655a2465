#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "slackkit/matrix.hpp"
#include "slackkit/numeric.hpp"

namespace slackkit {

// The 0/1 support of a symbolic slack matrix together with the polytope
// dimension.  Nonzero cells are numbered row-major, 1-indexed in all
// printed output (x1, x2, ...), 0-indexed internally.
class SlackPattern {
public:
    SlackPattern() : d_(0) {}

    SlackPattern(std::size_t d, std::vector<std::vector<int>> support) : d_(d) {
        if (support.empty() || support.front().empty())
            throw ValidationError("slack pattern must be non-empty");
        cols_ = support.front().size();
        for (const auto& row : support)
            if (row.size() != cols_)
                throw ValidationError("slack pattern rows have unequal lengths");
        rows_ = support.size();
        support_.assign(rows_ * cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                int v = support[i][j];
                if (v != 0 && v != 1) throw ValidationError("slack pattern entries must be 0 or 1");
                support_[i * cols_ + j] = v;
            }
        index_cells();
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_star_count(i) == 0)
                throw ValidationError("slack pattern has a zero row (row " + std::to_string(i + 1) + ")");
        for (std::size_t j = 0; j < cols_; ++j)
            if (col_star_count(j) == 0)
                throw ValidationError("slack pattern has a zero column (column " +
                                      std::to_string(j + 1) + ")");
    }

    // Builds the pattern from the zero set of a numeric slack matrix.
    template <typename K>
    static SlackPattern from_matrix(std::size_t d, const ExactMatrix<K>& s) {
        std::vector<std::vector<int>> sup(s.rows(), std::vector<int>(s.cols(), 0));
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                sup[i][j] = scalar_traits<K>::is_zero(s(i, j)) ? 0 : 1;
        return SlackPattern(d, std::move(sup));
    }

    std::size_t dimension() const { return d_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_vars() const { return cells_.size(); }

    bool is_star(std::size_t i, std::size_t j) const { return support_[i * cols_ + j] != 0; }

    // 0-based variable index of a star cell
    std::size_t var_at(std::size_t i, std::size_t j) const {
        if (!is_star(i, j)) throw Error("var_at: cell is zero");
        return var_index_[i * cols_ + j];
    }

    std::pair<std::size_t, std::size_t> cell_of(std::size_t var) const { return cells_.at(var); }

    const std::vector<std::pair<std::size_t, std::size_t>>& cell_map() const { return cells_; }

    std::size_t row_star_count(std::size_t i) const {
        std::size_t n = 0;
        for (std::size_t j = 0; j < cols_; ++j) n += is_star(i, j);
        return n;
    }
    std::size_t col_star_count(std::size_t j) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < rows_; ++i) n += is_star(i, j);
        return n;
    }

    std::vector<std::size_t> column_support(std::size_t j) const {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < rows_; ++i)
            if (is_star(i, j)) rows.push_back(i);
        return rows;
    }

    ExactMatrix<Rational> support_matrix() const {
        ExactMatrix<Rational> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (is_star(i, j)) m(i, j) = 1;
        return m;
    }

    std::size_t support_rank() const { return rank(support_matrix()); }

    // A realizable pattern must have support rank at least d+1.
    bool rank_plausible() const { return support_rank() >= d_ + 1; }

    SlackPattern permuted_columns(const std::vector<std::size_t>& perm) const {
        if (perm.size() != cols_) throw DimensionMismatch("column permutation size");
        std::vector<std::vector<int>> sup(rows_, std::vector<int>(cols_, 0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                sup[i][j] = support_[i * cols_ + perm[j]];
        return SlackPattern(d_, std::move(sup));
    }

    // Canonical column order: lexicographic on the sorted row supports.
    std::vector<std::size_t> canonical_column_order() const {
        std::vector<std::size_t> perm(cols_);
        for (std::size_t j = 0; j < cols_; ++j) perm[j] = j;
        std::vector<std::vector<std::size_t>> sig(cols_);
        for (std::size_t j = 0; j < cols_; ++j) sig[j] = column_support(j);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            if (sig[a] != sig[b]) return sig[a] < sig[b];
            return a < b;
        });
        return perm;
    }

    SlackPattern canonicalized() const { return permuted_columns(canonical_column_order()); }

    // Permutation p with this->permuted_columns(p) == target, if any.
    std::optional<std::vector<std::size_t>> match_columns(const SlackPattern& target) const {
        if (rows_ != target.rows_ || cols_ != target.cols_) return std::nullopt;
        std::vector<bool> used(cols_, false);
        std::vector<std::size_t> perm(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            auto want = target.column_support(j);
            bool found = false;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (used[k]) continue;
                if (column_support(k) == want) {
                    perm[j] = k;
                    used[k] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return perm;
    }

    bool same_support(const SlackPattern& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && support_ == o.support_;
    }

    friend bool operator==(const SlackPattern& a, const SlackPattern& b) {
        return a.d_ == b.d_ && a.same_support(b);
    }

private:
    void index_cells() {
        var_index_.assign(rows_ * cols_, 0);
        cells_.clear();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (support_[i * cols_ + j]) {
                    var_index_[i * cols_ + j] = cells_.size();
                    cells_.emplace_back(i, j);
                }
    }

    std::size_t d_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<int> support_;
    std::vector<std::size_t> var_index_;
    std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

// Parses rows of '0' / '*' characters (spaces ignored), e.g. "0*0*".
inline SlackPattern pattern_from_strings(std::size_t d, const std::vector<std::string>& rows) {
    std::vector<std::vector<int>> sup;
    for (const auto& r : rows) {
        std::vector<int> row;
        for (char c : r) {
            if (c == ' ' || c == '\t') continue;
            if (c == '0')
                row.push_back(0);
            else if (c == '*' || c == '1')
                row.push_back(1);
            else
                throw ParseError(std::string("unexpected character '") + c + "' in pattern row");
        }
        sup.push_back(std::move(row));
    }
    return SlackPattern(d, std::move(sup));
}

} // namespace slackkit
