#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "slackkit/numeric.hpp"

namespace slackkit {

// Dense integer matrix, row-major.  Rows of an IntegerLattice generate
// the lattice as a subgroup of Z^cols.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Integer(0)) {}
    IntMat(std::size_t r, std::size_t c, std::vector<Integer> entries)
        : rows_(r), cols_(c), a_(std::move(entries)) {
        if (a_.size() != r * c) throw DimensionMismatch("integer matrix entry count");
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("integer matrix product");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (sgn((*this)(i, k)) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> a_;
};

using IntegerLattice = IntMat;

struct HermiteResult {
    IntMat h;          // row echelon form, pivots positive, entries above pivots reduced
    IntMat u;          // unimodular, u * input = h
    std::size_t rank;  // number of nonzero rows of h
};

// Row-style Hermite normal form via integer row operations.
inline HermiteResult hermite_form(const IntMat& input) {
    IntMat h = input;
    IntMat u = IntMat::identity(h.rows());
    std::size_t r = 0;
    const std::size_t m = h.rows(), n = h.cols();
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // eliminate below position (r, col) with gcd row combinations
        std::size_t pivot = m;
        for (std::size_t i = r; i < m; ++i)
            if (sgn(h(i, col)) != 0) { pivot = i; break; }
        if (pivot == m) continue;
        h.swap_rows(r, pivot);
        u.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < m; ++i) {
            while (sgn(h(i, col)) != 0) {
                Integer q = h(r, col) / h(i, col);  // truncated division
                for (std::size_t k = 0; k < n; ++k) h(r, k) -= q * h(i, k);
                for (std::size_t k = 0; k < m; ++k) u(r, k) -= q * u(i, k);
                h.swap_rows(r, i);
                u.swap_rows(r, i);
            }
        }
        if (sgn(h(r, col)) < 0) {
            for (std::size_t k = 0; k < n; ++k) h(r, k) = -h(r, k);
            for (std::size_t k = 0; k < m; ++k) u(r, k) = -u(r, k);
        }
        // reduce entries above the pivot
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
            if (sgn(q) != 0) {
                for (std::size_t k = 0; k < n; ++k) h(i, k) -= q * h(r, k);
                for (std::size_t k = 0; k < m; ++k) u(i, k) -= q * u(r, k);
            }
        }
        ++r;
    }
    return HermiteResult{std::move(h), std::move(u), r};
}

struct SmithResult {
    IntMat d;  // diagonal, d1 | d2 | ...
    IntMat u;  // unimodular, u * input * v = d
    IntMat v;
    std::vector<Integer> invariants;  // nonzero diagonal entries
    bool saturated;                   // all nonzero invariant factors equal 1
};

// Smith normal form with unimodular transforms on both sides.
inline SmithResult smith_form(const IntMat& input) {
    IntMat d = input;
    const std::size_t m = d.rows(), n = d.cols();
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);

    auto row_op = [&](std::size_t i, std::size_t j, const Integer& q) {
        // row i -= q * row j
        for (std::size_t k = 0; k < n; ++k) d(i, k) -= q * d(j, k);
        for (std::size_t k = 0; k < m; ++k) u(i, k) -= q * u(j, k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Integer& q) {
        // col i -= q * col j
        for (std::size_t k = 0; k < m; ++k) d(k, i) -= q * d(k, j);
        for (std::size_t k = 0; k < n; ++k) v(k, i) -= q * v(k, j);
    };

    // Remainder-then-swap elimination: every row/column swap replaces the
    // pivot by a strictly smaller remainder, so each pivot terminates.
    auto clear_pivot_lines = [&](std::size_t t) {
        bool swapped = true;
        while (swapped) {
            swapped = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                row_op(i, t, q);
                if (sgn(d(i, t)) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    swapped = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                col_op(j, t, q);
                if (sgn(d(t, j)) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    swapped = true;
                }
            }
        }
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot in the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m && pi == m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (sgn(d(i, j)) != 0) { pi = i; pj = j; break; }
        if (pi == m) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        clear_pivot_lines(t);

        // enforce divisibility d(t,t) | d(i,j) on the trailing block
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j)
                if (sgn(d(i, j) % d(t, t)) != 0) {
                    // add row i to row t and redo this pivot (it shrinks)
                    for (std::size_t k = 0; k < n; ++k) d(t, k) += d(i, k);
                    for (std::size_t k = 0; k < m; ++k) u(t, k) += u(i, k);
                    fixed = true;
                }
        if (fixed) continue;
        if (sgn(d(t, t)) < 0) {
            for (std::size_t k = 0; k < n; ++k) d(t, k) = -d(t, k);
            for (std::size_t k = 0; k < m; ++k) u(t, k) = -u(t, k);
        }
        ++t;
    }

    SmithResult res{std::move(d), std::move(u), std::move(v), {}, true};
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        if (sgn(res.d(i, i)) != 0) {
            res.invariants.push_back(res.d(i, i));
            if (res.d(i, i) != 1) res.saturated = false;
        }
    }
    return res;
}

// Z^n / L is torsion-free iff every nonzero invariant factor is 1.
inline bool is_saturated(const IntegerLattice& generators) {
    if (generators.rows() == 0) return true;
    return smith_form(generators).saturated;
}

// Basis of ker_Z(a) = {u : a u = 0}, returned as rows.  Computed from a
// Hermite form of the transpose, so the basis spans the full (saturated)
// kernel lattice.
inline IntMat kernel_basis(const IntMat& a) {
    HermiteResult hr = hermite_form(a.transpose());
    const std::size_t n = a.cols();
    std::size_t k = n - hr.rank;
    IntMat ker(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) ker(i, j) = hr.u(hr.rank + i, j);
    return ker;
}

// Canonical form of the row lattice: nonzero rows of the Hermite form.
inline IntMat lattice_canonical(const IntMat& generators) {
    HermiteResult hr = hermite_form(generators);
    IntMat c(hr.rank, generators.cols());
    for (std::size_t i = 0; i < hr.rank; ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) c(i, j) = hr.h(i, j);
    return c;
}

inline bool same_lattice(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) return false;
    return lattice_canonical(a) == lattice_canonical(b);
}

inline Integer determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // fraction-free Bareiss over Z
    IntMat w = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (sgn(w(i, k)) != 0) { p = i; break; }
        if (p == n) return 0;
        if (p != k) { w.swap_rows(k, p); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Integer(-w(n - 1, n - 1));
}

} // namespace slackkit
