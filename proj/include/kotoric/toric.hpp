#pragma once

// Quasitoric manifold data (K_P, lambda): the direct-summand validity test,
// mod-2 cohomology with its Sq^2 action, the Sq^2-acyclicity decision, and
// the finite integer KU model of the manifold with its conjugation action.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kotoric/dj.hpp"
#include "kotoric/integer.hpp"
#include "kotoric/ko.hpp"
#include "kotoric/ku.hpp"
#include "kotoric/linalg.hpp"
#include "kotoric/simplicial.hpp"

namespace kotoric {

struct CharacteristicMatrix {
    std::vector<std::vector<int>> rows;  // row i = lambda(F_i) in Z^n

    int facets() const { return static_cast<int>(rows.size()); }
    int n() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

    void check_rectangular() const {
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != n())
                throw std::invalid_argument("CharacteristicMatrix: ragged rows");
    }
};

// The rows attached to every face must span a direct summand: the Smith form
// of the face submatrix must have |face| invariant factors, all equal to 1.
// Faces of a valid pair inherit validity, but every face is checked.
inline bool validate_characteristic(const SimplicialComplex& k, const CharacteristicMatrix& lam) {
    lam.check_rectangular();
    if (lam.facets() != k.vertex_count())
        throw std::invalid_argument("validate_characteristic: one row per vertex required");
    const int n = lam.n();
    for (const auto& face : k.all_faces()) {
        if (face.empty()) continue;
        if (static_cast<int>(face.size()) > n) return false;
        IntMatrix sub(face.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < face.size(); ++i)
            for (int j = 0; j < n; ++j)
                sub(i, static_cast<std::size_t>(j)) =
                    lam.rows[static_cast<std::size_t>(face[i] - 1)][static_cast<std::size_t>(j)];
        for (const Int& d : smith_normal_form(std::move(sub)))
            if (d != 1) return false;
    }
    return true;
}

// ---- mod 2 cohomology ----

namespace detail {

// face-supported exponent vectors of the given total degree
inline std::vector<Exponents> face_monomials(const SimplicialComplex& k, int degree) {
    const int m = k.vertex_count();
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == m) {
            if (left == 0 && k.is_face(support(cur))) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

// echelonized F2 row span with canonical reduction onto the non-pivot columns
struct F2Span {
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // echelon rows, packed
    std::vector<std::size_t> pivot;                // pivot column per row
    std::vector<std::size_t> quotient_cols;        // non-pivot columns

    explicit F2Span(std::size_t c) : cols(c) {}

    static bool bit(const std::vector<std::uint64_t>& v, std::size_t c) {
        return (v[c / 64] >> (c % 64)) & 1u;
    }
    static void flip(std::vector<std::uint64_t>& v, std::size_t c) {
        v[c / 64] ^= (std::uint64_t(1) << (c % 64));
    }
    static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
    }

    std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (bit(v, pivot[r])) xor_into(v, rows[r]);
        return v;
    }

    void insert(std::vector<std::uint64_t> v) {
        v = reduce(std::move(v));
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(v, c)) {
                // keep rows fully reduced against each other
                for (auto& row : rows)
                    if (bit(row, c)) xor_into(row, v);
                rows.push_back(std::move(v));
                pivot.push_back(c);
                return;
            }
    }

    void finish() {
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t c : pivot) is_pivot[c] = true;
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) quotient_cols.push_back(c);
    }
};

}  // namespace detail

// Graded ring F2[v_1..v_m]/(I_SR + J_linear) through cohomological degree 2n,
// with the Sq^2 matrices between consecutive degrees.
struct Mod2Cohomology {
    int n = 0;
    std::vector<std::vector<Exponents>> monomials;      // per half-degree, face monomials
    std::vector<detail::F2Span> relations;              // per half-degree, span of J-multiples
    std::vector<std::vector<std::size_t>> basis;        // per half-degree, monomial indices
    std::vector<F2Matrix> sq2;                          // sq2[i]: H^{2i} -> H^{2i+2}

    int dim(int i) const {
        return (i < 0 || i > n) ? 0 : static_cast<int>(basis[static_cast<std::size_t>(i)].size());
    }
    int total_dim() const {
        int d = 0;
        for (int i = 0; i <= n; ++i) d += dim(i);
        return d;
    }
};

inline Mod2Cohomology mod2_cohomology(const SimplicialComplex& k, const CharacteristicMatrix& lam) {
    if (!validate_characteristic(k, lam))
        throw std::domain_error("mod2_cohomology: characteristic data invalid");
    const int m = k.vertex_count();
    const int n = lam.n();

    Mod2Cohomology h;
    h.n = n;
    h.monomials.resize(static_cast<std::size_t>(n) + 1);
    h.basis.resize(static_cast<std::size_t>(n) + 1);

    std::vector<std::map<Exponents, std::size_t>> index(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        h.monomials[static_cast<std::size_t>(i)] = detail::face_monomials(k, i);
        for (std::size_t j = 0; j < h.monomials[static_cast<std::size_t>(i)].size(); ++j)
            index[static_cast<std::size_t>(i)].emplace(h.monomials[static_cast<std::size_t>(i)][j],
                                                       j);
    }

    // multiply a face monomial by the mod-2 linear form of column j and pack;
    // non-face products lie in I_SR and are dropped
    auto pack_linear_multiple = [&](int deg, const Exponents& mono, int col) {
        const std::size_t cols = h.monomials[static_cast<std::size_t>(deg)].size();
        std::vector<std::uint64_t> row((cols + 63) / 64, 0);
        for (int v = 0; v < m; ++v) {
            if (lam.rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)] % 2 == 0)
                continue;
            Exponents prod = mono;
            ++prod[static_cast<std::size_t>(v)];
            auto it = index[static_cast<std::size_t>(deg)].find(prod);
            if (it != index[static_cast<std::size_t>(deg)].end())
                detail::F2Span::flip(row, it->second);
        }
        return row;
    };

    for (int i = 0; i <= n; ++i) {
        detail::F2Span span(h.monomials[static_cast<std::size_t>(i)].size());
        if (i > 0) {
            for (const auto& mono : h.monomials[static_cast<std::size_t>(i - 1)])
                for (int j = 0; j < n; ++j) span.insert(pack_linear_multiple(i, mono, j));
        }
        span.finish();
        h.basis[static_cast<std::size_t>(i)] = span.quotient_cols;
        h.relations.push_back(std::move(span));
    }

    // Sq^2 on a monomial v^a is sum_i a_i v_i v^a mod 2; reduce into the
    // quotient basis one degree up
    for (int i = 0; i < n; ++i) {
        const auto& span_up = h.relations[static_cast<std::size_t>(i + 1)];
        const auto& basis_up = h.basis[static_cast<std::size_t>(i + 1)];
        F2Matrix mat(basis_up.size(), h.basis[static_cast<std::size_t>(i)].size());
        for (std::size_t bcol = 0; bcol < h.basis[static_cast<std::size_t>(i)].size(); ++bcol) {
            const Exponents& mono =
                h.monomials[static_cast<std::size_t>(i)][h.basis[static_cast<std::size_t>(i)][bcol]];
            std::vector<std::uint64_t> img(
                (h.monomials[static_cast<std::size_t>(i + 1)].size() + 63) / 64, 0);
            for (int v = 0; v < m; ++v) {
                if (mono[static_cast<std::size_t>(v)] % 2 == 0) continue;
                Exponents prod = mono;
                ++prod[static_cast<std::size_t>(v)];
                auto it = index[static_cast<std::size_t>(i + 1)].find(prod);
                if (it != index[static_cast<std::size_t>(i + 1)].end())
                    detail::F2Span::flip(img, it->second);
            }
            img = span_up.reduce(std::move(img));
            for (std::size_t brow = 0; brow < basis_up.size(); ++brow)
                if (detail::F2Span::bit(img, basis_up[brow])) mat.set(brow, bcol, true);
        }
        h.sq2.push_back(std::move(mat));
    }
    return h;
}

// ---- BB numbers ----

// Multiplicities in the decomposition of reduced cohomology into trivial
// summands and Sq^2-joined pairs: m_j = rank Sq^2 on H^{2j}, and
// s_i = dim H^{2i} - m_i - m_{i-1}. The unit class is excluded.
struct BBNumbers {
    std::vector<int> s;  // indexed 0..n
    std::vector<int> m;  // indexed 0..n-1
    std::vector<int> reduced_dim;
};

inline BBNumbers bb_numbers(const Mod2Cohomology& h) {
    const int n = h.n;
    BBNumbers out;
    out.s.assign(static_cast<std::size_t>(n) + 1, 0);
    out.m.assign(std::max(n, 0), 0);
    out.reduced_dim.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) out.reduced_dim[static_cast<std::size_t>(i)] = h.dim(i);
    for (int j = 1; j < n; ++j)
        out.m[static_cast<std::size_t>(j)] =
            static_cast<int>(f2_rank(h.sq2[static_cast<std::size_t>(j)]));
    for (int i = 1; i <= n; ++i) {
        const int mi = (i < n) ? out.m[static_cast<std::size_t>(i)] : 0;
        const int mprev = out.m[static_cast<std::size_t>(i - 1)];
        out.s[static_cast<std::size_t>(i)] =
            out.reduced_dim[static_cast<std::size_t>(i)] - mi - mprev;
    }
    return out;
}

inline BBNumbers bb_numbers(const SimplicialComplex& k, const CharacteristicMatrix& lam) {
    return bb_numbers(mod2_cohomology(k, lam));
}

inline bool is_sq2_acyclic(const SimplicialComplex& k, const CharacteristicMatrix& lam) {
    for (int si : bb_numbers(k, lam).s)
        if (si != 0) return false;
    return true;
}

// ---- finite KU model of the manifold ----

// Integer model of KU^0(M^{2n}): polynomials in x_1..x_m modulo the lattice
// spanned, inside the monomial window of total degree < window, by non-face
// monomials, all monomial multiples of the column classes
// prod_i (1+x_i)^{lambda_ij} - 1, and the window cutoff itself. Monomials of
// total degree >= window vanish on a 2n-manifold whenever window >= n+1.
class FiniteKuAlgebra {
public:
    static FiniteKuAlgebra build(const SimplicialComplex& k, const CharacteristicMatrix& lam,
                                 int window) {
        if (!validate_characteristic(k, lam))
            throw std::domain_error("manifold_ku: characteristic data invalid");
        const int n = lam.n();
        if (window < n + 1) throw std::invalid_argument("manifold_ku: window must be >= n+1");

        FiniteKuAlgebra alg;
        alg.complex_ = std::make_shared<SimplicialComplex>(k);
        alg.lambda_ = lam;
        alg.window_ = window;
        // bridge truncation: even per-variable bound >= window-1 keeps the
        // canonical KU form faithful through the total-degree cutoff
        const int d = std::max(2, window - 1 + ((window - 1) % 2));
        alg.trunc_.emplace(Truncation::uniform(std::max(k.vertex_count(), 0), d));

        for (int deg = 0; deg < window; ++deg)
            for (const auto& mono : detail::face_monomials(k, deg)) {
                alg.columns_.emplace(mono, alg.monomials_.size());
                alg.monomials_.push_back(mono);
            }

        // lattice rows: monomial multiples of each column class
        std::vector<std::vector<Int>> rows;
        for (int j = 0; j < lam.n(); ++j) {
            KuElement gj = alg.column_class(j);
            for (const auto& mono : alg.monomials_) {
                KuElement mon = ku_zero(*alg.trunc_, 0);
                mon.coeffs[mono] = 1;
                std::vector<Int> row = alg.vectorize(ku_mul(gj, mon));
                bool nonzero = false;
                for (const Int& x : row)
                    if (x != 0) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        IntMatrix rel(rows.size(), alg.monomials_.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < alg.monomials_.size(); ++j) rel(i, j) = rows[i][j];
        alg.hnf_ = hermite_normal_form(std::move(rel));

        for (const auto& [r, c] : alg.hnf_.pivots)
            if (alg.hnf_.h(r, c) != 1)
                throw std::domain_error(
                    "manifold_ku: quotient has torsion; enlarge the window");
        std::vector<bool> is_pivot(alg.monomials_.size(), false);
        for (const auto& [r, c] : alg.hnf_.pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < alg.monomials_.size(); ++c)
            if (!is_pivot[c]) alg.free_cols_.push_back(c);

        if (alg.rank() != alg.complex_->facets().size())
            throw std::domain_error(
                "manifold_ku: rank does not match the facet count; enlarge the window");

        const BBNumbers bb = bb_numbers(k, lam);
        alg.acyclic_ = true;
        for (int si : bb.s)
            if (si != 0) alg.acyclic_ = false;
        return alg;
    }

    const SimplicialComplex& complex() const { return *complex_; }
    const Truncation& oracle_truncation() const { return *trunc_; }
    int window() const { return window_; }
    std::size_t rank() const { return free_cols_.size(); }
    bool sq2_acyclic() const { return acyclic_; }
    const std::vector<Exponents>& basis_monomials() const { return monomials_; }

    // canonical coset representative; all-zero means membership in the ideal
    std::vector<Int> normal_form(const KuElement& a) const {
        if (!(a.trunc == *trunc_))
            throw std::invalid_argument("FiniteKuAlgebra: element is not at the model truncation");
        return lattice_reduce(hnf_, vectorize(a));
    }
    bool contains(const KuElement& a) const {
        for (const Int& x : normal_form(a))
            if (x != 0) return false;
        return true;
    }

    // conjugation on the quotient in the free-column coordinates
    IntMatrix conjugation_matrix() const {
        const std::size_t n = free_cols_.size();
        IntMatrix t(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            KuElement mon = ku_zero(*trunc_, 0);
            mon.coeffs[monomials_[free_cols_[j]]] = 1;
            std::vector<Int> nf = normal_form(ku_conjugate(mon));
            for (std::size_t i = 0; i < n; ++i) t(i, j) = nf[free_cols_[i]];
        }
        return t;
    }

    // rank of the image of (1 + (-1)^s conj) on the degree -2s part
    std::size_t c_image_rank(int s) const {
        IntMatrix t = conjugation_matrix();
        const std::size_t n = free_cols_.size();
        IntMatrix map(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                map(i, j) = odd(s) ? -t(i, j) : t(i, j);
                if (i == j) map(i, j) += 1;
            }
        return kotoric::rank(map);
    }

private:
    // prod_i (1+x_i)^{lambda_ij} - 1, negative exponents via the truncated
    // geometric series for (1+x)^{-1}
    KuElement column_class(int j) const {
        KuElement acc = ku_unit(*trunc_);
        for (int i = 0; i < complex_->vertex_count(); ++i) {
            const int e = lambda_.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e == 0) continue;
            KuElement base = ku_unit(*trunc_);
            Exponents xi(static_cast<std::size_t>(complex_->vertex_count()), 0);
            xi[static_cast<std::size_t>(i)] = 1;
            if (e > 0) {
                base.coeffs[xi] = 1;  // 1 + x_i
            } else {
                // (1+x)^{-1} = 1 - x + x^2 - ...
                Exponents a(xi.size(), 0);
                base = ku_zero(*trunc_, 0);
                for (int p = 0; p <= trunc_->bound(i); ++p) {
                    a[static_cast<std::size_t>(i)] = p;
                    base.coeffs[a] = (p % 2 ? -1 : 1);
                }
            }
            for (int rep = 0; rep < std::abs(e); ++rep) acc = ku_mul(acc, base);
        }
        return ku_sub(acc, ku_unit(*trunc_));
    }

    // coefficients on the window monomials; terms at or beyond the window
    // cutoff and non-face terms vanish in the model
    std::vector<Int> vectorize(const KuElement& a) const {
        std::vector<Int> v(monomials_.size());
        for (const auto& [e, c] : a.coeffs) {
            auto it = columns_.find(e);
            if (it != columns_.end()) v[it->second] = c;
        }
        return v;
    }

    std::shared_ptr<SimplicialComplex> complex_;
    CharacteristicMatrix lambda_;
    int window_ = 0;
    std::optional<Truncation> trunc_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> columns_;
    std::vector<std::size_t> free_cols_;
    HnfResult hnf_;
    bool acyclic_ = false;
};

inline FiniteKuAlgebra manifold_ku(const SimplicialComplex& k, const CharacteristicMatrix& lam,
                                   int window) {
    return FiniteKuAlgebra::build(k, lam, window);
}

// Quotient-model equality of complexifications: the decision procedure behind
// the manifold equality test, with no acyclicity requirement of its own.
inline bool model_quotient_equal(const KoElement& a, const KoElement& b,
                                 const FiniteKuAlgebra& model) {
    if (a.m != b.m || a.m != model.complex().vertex_count())
        throw std::invalid_argument("model_quotient_equal: rank mismatch");
    if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
        throw std::invalid_argument("model_quotient_equal: degree mismatch");
    KoElement diff = ko_sub(a, b);
    if (!diff.scalar.torsion_part().is_zero()) return false;
    return model.contains(complexify(diff, model.oracle_truncation()));
}

// Equality in KO*(M^{2n}) for an Sq^2-acyclic manifold. Soundness: c(w) in
// J^{KU} forces 2w in r(J^{KU}) since rc = 2, and the torsion-free quotient
// upgrades 2w = 0 to w = 0.
inline bool manifold_ko_equal(const KoElement& a, const KoElement& b,
                              const FiniteKuAlgebra& model) {
    if (!model.sq2_acyclic())
        throw std::domain_error("manifold_ko_equal: manifold is not Sq^2-acyclic");
    return model_quotient_equal(a, b, model);
}

inline std::size_t model_c_image_rank(const FiniteKuAlgebra& model, int degree) {
    if (odd(degree)) return 0;
    return model.c_image_rank(-degree / 2);
}

inline std::size_t manifold_ko_rank(const FiniteKuAlgebra& model, int degree) {
    if (!model.sq2_acyclic())
        throw std::domain_error("manifold_ko_rank: manifold is not Sq^2-acyclic");
    return model_c_image_rank(model, degree);
}

}  // namespace kotoric
