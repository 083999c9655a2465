#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "slackkit/numeric.hpp"

namespace slackkit {

// Dense exact matrix over Q or Q(sqrt 5).  All eliminations are exact;
// rank and determinant use fraction-free (Bareiss) elimination with
// sparse-aware pivoting since slack matrices are mostly zeros.
template <typename K>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t r, std::size_t c)
        : rows_(r), cols_(c), a_(r * c, scalar_traits<K>::zero()) {}
    ExactMatrix(std::size_t r, std::size_t c, std::vector<K> entries)
        : rows_(r), cols_(c), a_(std::move(entries)) {
        if (a_.size() != r * c) throw DimensionMismatch("matrix entry count");
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<K>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

namespace detail {

// One Bareiss sweep; returns (echelon matrix, rank, det of leading block, sign).
template <typename K>
struct BareissState {
    ExactMatrix<K> m;
    std::size_t rank = 0;
    K last_pivot;
    int sign = 1;
};

template <typename K>
BareissState<K> bareiss_eliminate(ExactMatrix<K> w) {
    using T = scalar_traits<K>;
    BareissState<K> st{std::move(w), 0, T::one(), 1};
    ExactMatrix<K>& m = st.m;
    const std::size_t rows = m.rows(), cols = m.cols();
    K prev = T::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // sparse-aware pivot: among rows with nonzero entry in this
        // column, prefer the one with the fewest nonzeros
        std::size_t pivot = rows;
        std::size_t best = cols + 1;
        for (std::size_t i = r; i < rows; ++i) {
            if (T::is_zero(m(i, c))) continue;
            std::size_t nz = 0;
            for (std::size_t j = c; j < cols; ++j)
                if (!T::is_zero(m(i, j))) ++nz;
            if (nz < best) { best = nz; pivot = i; }
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
            st.sign = -st.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (T::is_zero(m(i, c))) {
                // still need the Bareiss rescale to keep the invariant
                for (std::size_t j = c + 1; j < cols; ++j)
                    if (!T::is_zero(m(i, j))) m(i, j) = m(i, j) * m(r, c) / prev;
            } else {
                for (std::size_t j = c + 1; j < cols; ++j)
                    m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
                m(i, c) = T::zero();
            }
        }
        prev = m(r, c);
        st.last_pivot = prev;
        ++r;
    }
    st.rank = r;
    return st;
}

} // namespace detail

template <typename K>
std::size_t rank(const ExactMatrix<K>& m) {
    return detail::bareiss_eliminate(m).rank;
}

template <typename K>
K determinant(const ExactMatrix<K>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    if (m.rows() == 0) return scalar_traits<K>::one();
    auto st = detail::bareiss_eliminate(m);
    if (st.rank < m.rows()) return scalar_traits<K>::zero();
    // Bareiss: the final pivot equals the determinant of the leading block
    K d = st.last_pivot;
    return st.sign > 0 ? d : -d;
}

struct RrefPivots {
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form via exact Gauss-Jordan.
template <typename K>
ExactMatrix<K> rref(ExactMatrix<K> m, RrefPivots* pivots = nullptr) {
    using T = scalar_traits<K>;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pcols;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!T::is_zero(m(i, c))) { pivot = i; break; }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        K inv = m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) / inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || T::is_zero(m(i, c))) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pcols.push_back(c);
        ++r;
    }
    if (pivots) pivots->pivot_cols = std::move(pcols);
    return m;
}

// Basis of {v : M v = 0}, one vector per free column.
template <typename K>
std::vector<std::vector<K>> nullspace(const ExactMatrix<K>& m) {
    using T = scalar_traits<K>;
    RrefPivots piv;
    ExactMatrix<K> r = rref(m, &piv);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(cols, T::zero());
        v[free_c] = T::one();
        for (std::size_t k = 0; k < piv.pivot_cols.size(); ++k)
            v[piv.pivot_cols[k]] = -r(k, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M c = v exactly.  Returns the witness coefficients when v lies
// in the column span, nothing otherwise.
template <typename K>
std::optional<std::vector<K>> column_span_member(const ExactMatrix<K>& m,
                                                 const std::vector<K>& v) {
    using T = scalar_traits<K>;
    if (v.size() != m.rows()) throw DimensionMismatch("column_span_member vector length");
    ExactMatrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[i];
    }
    RrefPivots piv;
    ExactMatrix<K> r = rref(std::move(aug), &piv);
    for (auto c : piv.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    std::vector<K> witness(m.cols(), T::zero());
    for (std::size_t k = 0; k < piv.pivot_cols.size(); ++k)
        witness[piv.pivot_cols[k]] = r(k, m.cols());
    return witness;
}

template <typename K>
std::vector<K> matvec(const ExactMatrix<K>& m, const std::vector<K>& x) {
    using T = scalar_traits<K>;
    if (x.size() != m.cols()) throw DimensionMismatch("matvec length");
    std::vector<K> y(m.rows(), T::zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!T::is_zero(m(i, j))) y[i] = y[i] + m(i, j) * x[j];
    return y;
}

} // namespace slackkit
