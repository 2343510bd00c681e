#pragma once

// Exact integer and F2 linear algebra: Hermite and Smith normal forms,
// canonical reduction modulo a row lattice, bit-packed GF(2) elimination.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kotoric/integer.hpp"

namespace kotoric {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Int& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix out(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }
};

struct HnfResult {
    IntMatrix h;  // row-style Hermite form: positive pivots, entries above a pivot in [0, pivot)
    IntMatrix u;  // unimodular, u * input == h
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), columns increasing
};

namespace detail {

inline std::size_t row_nonzeros(const IntMatrix& a, std::size_t r) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < a.cols; ++c)
        if (a(r, c) != 0) ++n;
    return n;
}

inline void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols; ++c) a(dst, c) -= q * a(src, c);
}

inline void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
}

inline void negate_row(IntMatrix& a, std::size_t i) {
    for (std::size_t c = 0; c < a.cols; ++c) a(i, c) = -a(i, c);
}

}  // namespace detail

// Row-style HNF by Euclidean row reduction. Pivot rows are chosen by smallest
// absolute pivot value, ties broken by fewest nonzeros to limit fill-in.
inline HnfResult hermite_normal_form(IntMatrix a) {
    const std::size_t m = a.rows, n = a.cols;
    IntMatrix u = IntMatrix::identity(m);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        while (true) {
            // pick the surviving row with the smallest nonzero entry in column c
            std::size_t best = m;
            std::size_t best_nnz = 0;
            for (std::size_t i = r; i < m; ++i) {
                if (a(i, c) == 0) continue;
                if (best == m || abs(a(i, c)) < abs(a(best, c)) ||
                    (abs(a(i, c)) == abs(a(best, c)) && detail::row_nonzeros(a, i) < best_nnz)) {
                    best = i;
                    best_nnz = detail::row_nonzeros(a, i);
                }
            }
            if (best == m) break;  // column is zero below r
            bool others = false;
            for (std::size_t i = r; i < m; ++i) {
                if (i == best || a(i, c) == 0) continue;
                Int q = a(i, c) / a(best, c);  // truncated division shrinks |a(i,c)|
                detail::add_row_multiple(a, i, best, q);
                detail::add_row_multiple(u, i, best, q);
                if (a(i, c) != 0) others = true;
            }
            if (!others) {
                detail::swap_rows(a, r, best);
                detail::swap_rows(u, r, best);
                if (a(r, c) < 0) {
                    detail::negate_row(a, r);
                    detail::negate_row(u, r);
                }
                // reduce entries above the pivot into [0, pivot)
                for (std::size_t i = 0; i < r; ++i) {
                    Int q = floor_div(a(i, c), a(r, c));
                    detail::add_row_multiple(a, i, r, q);
                    detail::add_row_multiple(u, i, r, q);
                }
                pivots.emplace_back(r, c);
                ++r;
                break;
            }
        }
    }
    return HnfResult{std::move(a), std::move(u), std::move(pivots)};
}

inline std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).pivots.size(); }

// Invariant factors d1 | d2 | ..., zero-padded to min(rows, cols).
inline std::vector<Int> smith_normal_form(IntMatrix a) {
    const std::size_t m = a.rows, n = a.cols;
    std::vector<Int> factors;
    std::size_t t = 0;
    while (t < m && t < n) {
        // locate the smallest nonzero entry of the trailing submatrix
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;  // submatrix is zero
        detail::swap_rows(a, t, pi);
        for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                detail::add_row_multiple(a, i, t, q);
                if (a(i, t) != 0) {  // remainder smaller than pivot: swap up and restart
                    detail::swap_rows(a, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0)
                    for (std::size_t i = 0; i < m; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the remaining submatrix
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t c2 = 0; c2 < n; ++c2) a(t, c2) += a(i, c2);
                        clean = false;
                    }
        }
        factors.push_back(abs(a(t, t)));
        ++t;
    }
    factors.resize(std::min(m, n), Int(0));
    return factors;
}

// Canonical representative of v modulo the row lattice described by an HNF.
inline std::vector<Int> lattice_reduce(const HnfResult& hnf, std::vector<Int> v) {
    if (v.size() != hnf.h.cols) throw std::invalid_argument("lattice_reduce: length mismatch");
    for (const auto& [r, c] : hnf.pivots) {
        Int q = floor_div(v[c], hnf.h(r, c));
        if (q == 0) continue;
        for (std::size_t j = c; j < hnf.h.cols; ++j) v[j] -= q * hnf.h(r, j);
    }
    return v;
}

inline bool lattice_contains(const HnfResult& hnf, std::vector<Int> v) {
    v = lattice_reduce(hnf, std::move(v));
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// --- GF(2) ---

struct F2Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;  // row-major, packed

    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

    bool get(std::size_t r, std::size_t c) const {
        return (bits[r * words + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v)
            bits[r * words + c / 64] |= mask;
        else
            bits[r * words + c / 64] &= ~mask;
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
    }
    bool row_zero(std::size_t r) const {
        for (std::size_t w = 0; w < words; ++w)
            if (bits[r * words + w]) return false;
        return true;
    }
};

inline std::size_t f2_rank(F2Matrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t piv = a.rows;
        for (std::size_t i = r; i < a.rows; ++i)
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == a.rows) continue;
        if (piv != r)
            for (std::size_t w = 0; w < a.words; ++w)
                std::swap(a.bits[r * a.words + w], a.bits[piv * a.words + w]);
        for (std::size_t i = 0; i < a.rows; ++i)
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        ++r;
    }
    return r;
}

// Basis of the right kernel, one row per basis vector.
inline F2Matrix f2_kernel_basis(F2Matrix a) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t piv = a.rows;
        for (std::size_t i = r; i < a.rows; ++i)
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == a.rows) continue;
        if (piv != r)
            for (std::size_t w = 0; w < a.words; ++w)
                std::swap(a.bits[r * a.words + w], a.bits[piv * a.words + w]);
        for (std::size_t i = 0; i < a.rows; ++i)
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::size_t nfree = a.cols - pivot_col.size();
    F2Matrix kernel(nfree, a.cols);
    std::size_t k = 0;
    for (std::size_t c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        kernel.set(k, c, true);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (a.get(i, c)) kernel.set(k, pivot_col[i], true);
        ++k;
    }
    return kernel;
}

}  // namespace kotoric
