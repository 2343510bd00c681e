#pragma once

// Exact truncated model of KU*(prod_i CP^{d_i}): the ambient ring for all
// equality decisions. Elements are canonical, conjugate-free sparse integer
// polynomials v^s * sum c_a x^a with a_i <= d_i. Conjugates exist only
// transiently: xbar_i expands to the truncated series of -x_i/(1+x_i), and
// vbar = -v.

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kotoric/integer.hpp"

namespace kotoric {

using Exponents = std::vector<int>;

class Truncation {
public:
    explicit Truncation(std::vector<int> d) : d_(std::move(d)) {
        for (int di : d_)
            if (di < 2 || di % 2 != 0)
                throw std::invalid_argument("Truncation: bounds must be even and >= 2");
    }
    static Truncation uniform(int m, int d) { return Truncation(std::vector<int>(m, d)); }

    int vars() const { return static_cast<int>(d_.size()); }
    int bound(int i) const { return d_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& bounds() const { return d_; }
    bool operator==(const Truncation&) const = default;

private:
    std::vector<int> d_;
};

struct KuElement {
    Truncation trunc;
    int s = 0;  // element lives in KU^{-2s}
    std::map<Exponents, Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const KuElement& a, const KuElement& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.trunc == b.trunc && a.s == b.s && a.coeffs == b.coeffs;
    }
};

inline KuElement ku_zero(const Truncation& t, int s = 0) { return KuElement{t, s, {}}; }

inline KuElement ku_unit(const Truncation& t, int s = 0) {
    KuElement e{t, s, {}};
    e.coeffs[Exponents(static_cast<std::size_t>(t.vars()), 0)] = 1;
    return e;
}

namespace detail {

inline void ku_accumulate(KuElement& acc, const Exponents& a, const Int& c) {
    if (c == 0) return;
    auto it = acc.coeffs.find(a);
    if (it == acc.coeffs.end()) {
        acc.coeffs.emplace(a, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.coeffs.erase(it);
    }
}

// dense univariate product truncated at degree d
inline std::vector<Int> poly_mul_trunc(const std::vector<Int>& p, const std::vector<Int>& q,
                                       int d) {
    std::vector<Int> out(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size() && i + j <= static_cast<std::size_t>(d); ++j)
            out[i + j] += p[i] * q[j];
    }
    return out;
}

}  // namespace detail

// Canonical form of v^s x^I xbar^J. The conjugate generators are eliminated by
// substituting xbar_i = sum_{k>=1} (-1)^k x_i^k, truncated at d_i.
inline KuElement ku_monomial(const Exponents& I, const Exponents& J, int s, const Truncation& t) {
    const std::size_t m = static_cast<std::size_t>(t.vars());
    if (I.size() != m || J.size() != m)
        throw std::invalid_argument("ku_monomial: exponent length mismatch");
    for (std::size_t i = 0; i < m; ++i)
        if (I[i] < 0 || J[i] < 0) throw std::invalid_argument("ku_monomial: negative exponent");

    // per-variable factor x^{I_i} * xbar^{J_i} as a dense truncated polynomial
    std::vector<std::vector<Int>> factor(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int d = t.bound(static_cast<int>(i));
        std::vector<Int> p(static_cast<std::size_t>(d) + 1);
        if (I[i] <= d) p[static_cast<std::size_t>(I[i])] = 1;
        if (J[i] > 0) {
            std::vector<Int> xbar(static_cast<std::size_t>(d) + 1);
            for (int k = 1; k <= d; ++k) xbar[static_cast<std::size_t>(k)] = (k % 2 ? -1 : 1);
            for (int rep = 0; rep < J[i]; ++rep) p = detail::poly_mul_trunc(p, xbar, d);
        }
        factor[i] = std::move(p);
    }

    KuElement out = ku_zero(t, s);
    Exponents a(m, 0);
    // tensor the per-variable factors into the sparse map
    auto expand = [&](auto&& self, std::size_t i, const Int& c) -> void {
        if (c == 0) return;
        if (i == m) {
            detail::ku_accumulate(out, a, c);
            return;
        }
        for (std::size_t k = 0; k < factor[i].size(); ++k) {
            if (factor[i][k] == 0) continue;
            a[i] = static_cast<int>(k);
            self(self, i + 1, c * factor[i][k]);
        }
        a[i] = 0;
    };
    expand(expand, 0, Int(1));
    return out;
}

inline KuElement ku_add(const KuElement& a, const KuElement& b) {
    if (!(a.trunc == b.trunc)) throw std::invalid_argument("ku_add: truncation mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.s != b.s) throw std::invalid_argument("ku_add: degree mismatch");
    KuElement out = a;
    for (const auto& [e, c] : b.coeffs) detail::ku_accumulate(out, e, c);
    return out;
}

inline KuElement ku_scale(const KuElement& a, const Int& n) {
    KuElement out = ku_zero(a.trunc, a.s);
    if (n == 0) return out;
    for (const auto& [e, c] : a.coeffs) out.coeffs.emplace(e, c * n);
    return out;
}

inline KuElement ku_sub(const KuElement& a, const KuElement& b) {
    return ku_add(a, ku_scale(b, -1));
}

inline KuElement ku_mul(const KuElement& a, const KuElement& b) {
    if (!(a.trunc == b.trunc)) throw std::invalid_argument("ku_mul: truncation mismatch");
    const std::size_t m = static_cast<std::size_t>(a.trunc.vars());
    KuElement out = ku_zero(a.trunc, a.s + b.s);
    Exponents e(m);
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > a.trunc.bound(static_cast<int>(i))) {
                    inside = false;
                    break;
                }
            }
            if (inside) detail::ku_accumulate(out, e, ca * cb);
        }
    return out;
}

// Ring involution x_i -> xbar_i, v -> -v.
inline KuElement ku_conjugate(const KuElement& a) {
    const std::size_t m = static_cast<std::size_t>(a.trunc.vars());
    KuElement out = ku_zero(a.trunc, a.s);
    const Exponents zero(m, 0);
    const Int sign = odd(a.s) ? -1 : 1;
    for (const auto& [e, c] : a.coeffs) {
        KuElement term = ku_monomial(zero, e, a.s, a.trunc);
        for (const auto& [te, tc] : term.coeffs) detail::ku_accumulate(out, te, tc * c * sign);
    }
    return out;
}

// Set x_i = 0 for every vertex i outside sigma (1-based).
inline KuElement ku_restrict(const KuElement& a, const std::set<int>& sigma) {
    const std::size_t m = static_cast<std::size_t>(a.trunc.vars());
    KuElement out = ku_zero(a.trunc, a.s);
    for (const auto& [e, c] : a.coeffs) {
        bool keep = true;
        for (std::size_t i = 0; i < m; ++i)
            if (e[i] > 0 && sigma.count(static_cast<int>(i) + 1) == 0) {
                keep = false;
                break;
            }
        if (keep) out.coeffs.emplace(e, c);
    }
    return out;
}

}  // namespace kotoric
