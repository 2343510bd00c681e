#pragma once

// The KO*(BT^m) engine. Elements are formal integer combinations of the
// bracket generators [I,J]^(s) = r(v^s x^I xbar^J) in normal form, plus a
// coefficient-ring part, with the rewriting relations
//   (A) [I,J]^(s) = (-1)^s [J,I]^(s)
//   (B) [I,J]^(s) = -[I',J]^(s) - [I,J']^(s)   (decrement a shared index)
//   (C) [I,J]^(s)[H,K]^(t) = [I+H,J+K]^(s+t) + (-1)^s [J+H,I+K]^(s+t)
// and the coefficient ring KO* = Z[e,a,b,b^-1]/(2e, e^3, ea, a^2-4b).
// Complexification into the truncated KU model is the equality oracle.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "kotoric/integer.hpp"
#include "kotoric/ku.hpp"

namespace kotoric {

// ---- coefficient ring ----

enum class KoKind : int { Unit = 0, Alpha = 1, E = 2, E2 = 3 };  // b^t, a*b^t, e*b^t, e^2*b^t

struct KoToken {
    KoKind kind = KoKind::Unit;
    int t = 0;  // beta exponent
    friend bool operator<(const KoToken& x, const KoToken& y) {
        return std::tie(x.kind, x.t) < std::tie(y.kind, y.t);
    }
    friend bool operator==(const KoToken& x, const KoToken& y) {
        return x.kind == y.kind && x.t == y.t;
    }
};

inline int token_degree(const KoToken& tok) {
    switch (tok.kind) {
        case KoKind::Unit: return -8 * tok.t;
        case KoKind::Alpha: return -4 - 8 * tok.t;
        case KoKind::E: return -1 - 8 * tok.t;
        case KoKind::E2: return -2 - 8 * tok.t;
    }
    return 0;
}

inline bool token_is_torsion(const KoToken& tok) {
    return tok.kind == KoKind::E || tok.kind == KoKind::E2;
}

class KoScalar {
public:
    KoScalar() = default;

    static KoScalar zero() { return {}; }
    static KoScalar term(KoToken tok, Int c) {
        KoScalar s;
        s.put(tok, std::move(c));
        return s;
    }
    static KoScalar integer(Int n) { return term({KoKind::Unit, 0}, std::move(n)); }
    static KoScalar beta(int t, Int c = 1) { return term({KoKind::Unit, t}, std::move(c)); }
    static KoScalar alpha(int t = 0, Int c = 1) { return term({KoKind::Alpha, t}, std::move(c)); }
    static KoScalar e(int t = 0) { return term({KoKind::E, t}, 1); }
    static KoScalar e2(int t = 0) { return term({KoKind::E2, t}, 1); }

    // r(v^s): 0 for s odd, a*b^{(s-2)/4} for s = 2 mod 4, 2 b^{s/4} for s = 0 mod 4.
    static KoScalar r_v_power(int s) {
        if (odd(s)) return {};
        if (mod4(s) == 0) return beta(s / 4, 2);
        return alpha((s - 2) / 4);
    }

    void put(const KoToken& tok, Int c) {
        if (token_is_torsion(tok)) c = floor_mod(c, 2);
        if (c == 0) return;
        auto it = c_.find(tok);
        if (it == c_.end()) {
            c_.emplace(tok, std::move(c));
        } else {
            it->second += c;
            if (token_is_torsion(tok)) it->second = floor_mod(it->second, 2);
            if (it->second == 0) c_.erase(it);
        }
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<KoToken, Int>& terms() const { return c_; }

    bool is_homogeneous() const {
        if (c_.empty()) return true;
        int d = token_degree(c_.begin()->first);
        for (const auto& [tok, c] : c_)
            if (token_degree(tok) != d) return false;
        return true;
    }
    // degree of a nonzero homogeneous scalar
    int degree() const {
        if (c_.empty() || !is_homogeneous())
            throw std::invalid_argument("KoScalar::degree: not homogeneous");
        return token_degree(c_.begin()->first);
    }

    KoScalar torsion_part() const {
        KoScalar out;
        for (const auto& [tok, c] : c_)
            if (token_is_torsion(tok)) out.put(tok, c);
        return out;
    }

    friend KoScalar operator+(const KoScalar& x, const KoScalar& y) {
        KoScalar out = x;
        for (const auto& [tok, c] : y.c_) out.put(tok, c);
        return out;
    }
    friend KoScalar operator-(const KoScalar& x, const KoScalar& y) {
        KoScalar out = x;
        for (const auto& [tok, c] : y.c_) out.put(tok, -c);
        return out;
    }
    KoScalar scaled(const Int& n) const {
        KoScalar out;
        for (const auto& [tok, c] : c_) out.put(tok, c * n);
        return out;
    }
    // ring product with 2e = 0, e^3 = 0, ea = 0, a^2 = 4b
    friend KoScalar operator*(const KoScalar& x, const KoScalar& y) {
        KoScalar out;
        for (const auto& [tx, cx] : x.c_)
            for (const auto& [ty, cy] : y.c_) {
                const int t = tx.t + ty.t;
                const Int c = cx * cy;
                const KoKind a = tx.kind, b = ty.kind;
                if (a == KoKind::Unit || b == KoKind::Unit) {
                    KoKind other = (a == KoKind::Unit) ? b : a;
                    out.put({other, t}, c);
                } else if (a == KoKind::Alpha && b == KoKind::Alpha) {
                    out.put({KoKind::Unit, t + 1}, 4 * c);
                } else if (a == KoKind::E && b == KoKind::E) {
                    out.put({KoKind::E2, t}, c);
                }
                // every other pairing involves ea, e^3 or e^4 and vanishes
            }
        return out;
    }
    friend bool operator==(const KoScalar& x, const KoScalar& y) { return x.c_ == y.c_; }

private:
    std::map<KoToken, Int> c_;
};

// ---- bracket generators ----

struct G2Symbol {
    Exponents I, J;
    int s = 0;  // lives in KO^{-2s}

    friend bool operator<(const G2Symbol& x, const G2Symbol& y) {
        return std::tie(x.s, x.I, x.J) < std::tie(y.s, y.I, y.J);
    }
    friend bool operator==(const G2Symbol& x, const G2Symbol& y) {
        return x.s == y.s && x.I == y.I && x.J == y.J;
    }
};

// Normal-form conditions: I.J = 0, the first touched index has J-entry 0,
// and (I,J) != (0,0).
inline bool is_g2_normal(const Exponents& I, const Exponents& J) {
    if (I.size() != J.size()) return false;
    bool nonzero = false;
    bool leading_seen = false;
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 0 || J[k] < 0) return false;
        if (I[k] != 0 && J[k] != 0) return false;
        if (!leading_seen && (I[k] != 0 || J[k] != 0)) {
            leading_seen = true;
            if (J[k] != 0) return false;
        }
        if (I[k] != 0 || J[k] != 0) nonzero = true;
    }
    return nonzero;
}

inline bool is_g2_normal(const G2Symbol& sym) { return is_g2_normal(sym.I, sym.J); }

struct KoElement {
    int m = 0;       // ambient variable count
    int degree = 0;  // cohomological degree; reduced terms satisfy degree = -2s
    KoScalar scalar;
    std::map<G2Symbol, Int> reduced;

    bool is_zero() const { return scalar.is_zero() && reduced.empty(); }

    // Syntactic normal-form equality; zeros of different recorded degrees agree.
    friend bool operator==(const KoElement& a, const KoElement& b) {
        return a.m == b.m && a.scalar == b.scalar && a.reduced == b.reduced &&
               (a.degree == b.degree || a.is_zero());
    }
};

inline KoElement ko_zero(int m, int degree = 0) { return KoElement{m, degree, {}, {}}; }

inline KoElement ko_from_scalar(int m, const KoScalar& s, int degree_if_zero = 0) {
    KoElement e{m, degree_if_zero, s, {}};
    if (!s.is_zero()) {
        if (!s.is_homogeneous())
            throw std::invalid_argument("ko_from_scalar: scalar not homogeneous");
        e.degree = s.degree();
    }
    return e;
}

inline KoElement ko_one(int m) { return ko_from_scalar(m, KoScalar::integer(1)); }

namespace detail {

inline void ko_put(KoElement& acc, const G2Symbol& sym, const Int& c) {
    if (c == 0) return;
    auto it = acc.reduced.find(sym);
    if (it == acc.reduced.end()) {
        acc.reduced.emplace(sym, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.reduced.erase(it);
    }
}

}  // namespace detail

inline KoElement ko_add(const KoElement& a, const KoElement& b) {
    if (a.m != b.m) throw std::invalid_argument("ko_add: ambient rank mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw std::invalid_argument("ko_add: degree mismatch");
    KoElement out = a;
    out.scalar = a.scalar + b.scalar;
    for (const auto& [sym, c] : b.reduced) detail::ko_put(out, sym, c);
    return out;
}

inline KoElement ko_scale(const KoElement& a, const Int& n) {
    KoElement out = ko_zero(a.m, a.degree);
    if (n == 0) return out;
    out.scalar = a.scalar.scaled(n);
    for (const auto& [sym, c] : a.reduced) out.reduced.emplace(sym, c * n);
    return out;
}

inline KoElement ko_sub(const KoElement& a, const KoElement& b) {
    return ko_add(a, ko_scale(b, -1));
}

// ---- normalization ----

// G2 normal form of r(v^s x^I xbar^J). Relation (B) is applied at the smallest
// index with I_k J_k != 0 (|I|+|J| strictly decreases), then relation (A)
// corrects the leading index, and the empty pair folds into r(v^s).
inline KoElement normalize_symbol(const Exponents& I, const Exponents& J, int s) {
    if (I.size() != J.size()) throw std::invalid_argument("normalize_symbol: length mismatch");
    const int m = static_cast<int>(I.size());
    for (int v : I)
        if (v < 0) throw std::invalid_argument("normalize_symbol: negative exponent");
    for (int v : J)
        if (v < 0) throw std::invalid_argument("normalize_symbol: negative exponent");

    KoElement out = ko_zero(m, -2 * s);

    struct Key {
        int total;
        Exponents I, J;
        // larger totals first so relation (B) children are always pending
        bool operator<(const Key& y) const {
            return std::tie(y.total, I, J) < std::tie(total, y.I, y.J);
        }
    };
    std::map<Key, Int> work;
    {
        int total = 0;
        for (int v : I) total += v;
        for (int v : J) total += v;
        work.emplace(Key{total, I, J}, 1);
    }
    const Int sign_a = odd(s) ? -1 : 1;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        Key key = std::move(node.key());
        Int c = std::move(node.mapped());
        if (c == 0) continue;

        int pivot = -1;
        for (int k = 0; k < m; ++k)
            if (key.I[k] > 0 && key.J[k] > 0) {
                pivot = k;
                break;
            }
        if (pivot >= 0) {
            Key left{key.total - 1, key.I, key.J};
            --left.I[static_cast<std::size_t>(pivot)];
            Key right{key.total - 1, key.I, key.J};
            --right.J[static_cast<std::size_t>(pivot)];
            work[std::move(left)] -= c;
            work[std::move(right)] -= c;
            continue;
        }
        if (key.total == 0) {
            out.scalar = out.scalar + KoScalar::r_v_power(s).scaled(c);
            continue;
        }
        int lead = 0;
        while (key.I[static_cast<std::size_t>(lead)] == 0 &&
               key.J[static_cast<std::size_t>(lead)] == 0)
            ++lead;
        if (key.J[static_cast<std::size_t>(lead)] != 0)
            detail::ko_put(out, G2Symbol{key.J, key.I, s}, c * sign_a);
        else
            detail::ko_put(out, G2Symbol{key.I, key.J, s}, c);
    }
    return out;
}

// Linear extension of r over the monomials of a canonical KU element.
inline KoElement realify(const KuElement& u) {
    const int m = u.trunc.vars();
    KoElement out = ko_zero(m, -2 * u.s);
    const Exponents zero(static_cast<std::size_t>(m), 0);
    for (const auto& [e, c] : u.coeffs) {
        if (e == zero)
            out.scalar = out.scalar + KoScalar::r_v_power(u.s).scaled(c);
        else
            detail::ko_put(out, G2Symbol{e, zero, u.s}, c);
    }
    return out;
}

// c([I,J]^(s)) = v^s x^I xbar^J + (-1)^s v^s xbar^I x^J;
// c(b^t) = v^{4t}, c(a b^t) = 2 v^{2+4t}, c(e b^t) = c(e^2 b^t) = 0.
inline KuElement complexify(const KoElement& a, const Truncation& t) {
    if (t.vars() != a.m) throw std::invalid_argument("complexify: truncation rank mismatch");
    if (odd(a.degree)) return ku_zero(t, 0);  // only e-torsion lives in odd degree
    const int s = -a.degree / 2;
    KuElement out = ku_zero(t, s);
    const Exponents zero(static_cast<std::size_t>(a.m), 0);
    for (const auto& [tok, c] : a.scalar.terms()) {
        if (token_is_torsion(tok)) continue;
        if (token_degree(tok) != a.degree)
            throw std::logic_error("complexify: scalar token outside element degree");
        detail::ku_accumulate(out, zero, tok.kind == KoKind::Alpha ? 2 * c : c);
    }
    for (const auto& [sym, c] : a.reduced) {
        if (sym.s != s) throw std::logic_error("complexify: symbol outside element degree");
        KuElement fwd = ku_monomial(sym.I, sym.J, sym.s, t);
        for (const auto& [e, fc] : fwd.coeffs) detail::ku_accumulate(out, e, fc * c);
        KuElement bwd = ku_monomial(sym.J, sym.I, sym.s, t);
        const Int sign = odd(sym.s) ? -1 : 1;
        for (const auto& [e, bc] : bwd.coeffs) detail::ku_accumulate(out, e, bc * c * sign);
    }
    return out;
}

// ---- module structure and products ----

// e kills reduced classes, a b^t sends [I,J]^(s) to 2[I,J]^(s+2+4t),
// b^t shifts s by 4t; the scalar part multiplies in KO*.
inline KoElement ko_module_action(const KoScalar& lam, const KoElement& a) {
    if (lam.is_zero() || a.is_zero())
        return ko_zero(a.m, a.degree + (lam.is_zero() || !lam.is_homogeneous() ? 0 : lam.degree()));
    if (!lam.is_homogeneous())
        throw std::invalid_argument("ko_module_action: scalar not homogeneous");
    KoElement out = ko_zero(a.m, a.degree + lam.degree());
    out.scalar = lam * a.scalar;
    for (const auto& [tok, lc] : lam.terms()) {
        if (token_is_torsion(tok)) continue;
        const int shift = (tok.kind == KoKind::Alpha) ? 2 + 4 * tok.t : 4 * tok.t;
        const Int factor = (tok.kind == KoKind::Alpha) ? 2 * lc : lc;
        for (const auto& [sym, c] : a.reduced)
            detail::ko_put(out, G2Symbol{sym.I, sym.J, sym.s + shift}, c * factor);
    }
    return out;
}

namespace detail {

inline void ko_accumulate(KoElement& acc, const KoElement& part, const Int& scale) {
    if (scale == 0 || part.is_zero()) return;
    acc.scalar = acc.scalar + part.scalar.scaled(scale);
    for (const auto& [sym, c] : part.reduced) ko_put(acc, sym, c * scale);
}

}  // namespace detail

inline KoElement ko_mul(const KoElement& a, const KoElement& b) {
    if (a.m != b.m) throw std::invalid_argument("ko_mul: ambient rank mismatch");
    KoElement out = ko_zero(a.m, a.degree + b.degree);
    out.scalar = a.scalar * b.scalar;
    // scalar x reduced via the module action
    for (const auto& [tok, lc] : a.scalar.terms()) {
        if (token_is_torsion(tok)) continue;
        const int shift = (tok.kind == KoKind::Alpha) ? 2 + 4 * tok.t : 4 * tok.t;
        const Int factor = (tok.kind == KoKind::Alpha) ? 2 * lc : lc;
        for (const auto& [sym, c] : b.reduced)
            detail::ko_put(out, G2Symbol{sym.I, sym.J, sym.s + shift}, c * factor);
    }
    for (const auto& [tok, lc] : b.scalar.terms()) {
        if (token_is_torsion(tok)) continue;
        const int shift = (tok.kind == KoKind::Alpha) ? 2 + 4 * tok.t : 4 * tok.t;
        const Int factor = (tok.kind == KoKind::Alpha) ? 2 * lc : lc;
        for (const auto& [sym, c] : a.reduced)
            detail::ko_put(out, G2Symbol{sym.I, sym.J, sym.s + shift}, c * factor);
    }
    // reduced x reduced via relation (C)
    const std::size_t m = static_cast<std::size_t>(a.m);
    for (const auto& [sa, ca] : a.reduced)
        for (const auto& [sb, cb] : b.reduced) {
            Exponents ih(m), jk(m), jh(m), ik(m);
            for (std::size_t i = 0; i < m; ++i) {
                ih[i] = sa.I[i] + sb.I[i];
                jk[i] = sa.J[i] + sb.J[i];
                jh[i] = sa.J[i] + sb.I[i];
                ik[i] = sa.I[i] + sb.J[i];
            }
            const int st = sa.s + sb.s;
            const Int c = ca * cb;
            detail::ko_accumulate(out, normalize_symbol(ih, jk, st), c);
            detail::ko_accumulate(out, normalize_symbol(jh, ik, st),
                                  odd(sa.s) ? -c : c);
        }
    return out;
}

// gamma^j acts on reduced classes only: [I,J]^(s) -> [I,J]^(s+2j).
inline KoElement gamma_shift(const KoElement& a, int j) {
    if (!a.scalar.is_zero())
        throw std::domain_error("gamma_shift: gamma acts on reduced classes only");
    KoElement out = ko_zero(a.m, a.degree - 4 * j);
    for (const auto& [sym, c] : a.reduced)
        out.reduced.emplace(G2Symbol{sym.I, sym.J, sym.s + 2 * j}, c);
    return out;
}

// X_S^(s) = r(v^s prod_{i in S} x_i); the empty set gives the scalar r(v^s).
inline KoElement g1_class(const std::set<int>& S, int s, int m) {
    for (int v : S)
        if (v < 1 || v > m) throw std::invalid_argument("g1_class: vertex out of range");
    if (S.empty()) return ko_from_scalar(m, KoScalar::r_v_power(s), -2 * s);
    KoElement out = ko_zero(m, -2 * s);
    Exponents I(static_cast<std::size_t>(m), 0);
    for (int v : S) I[static_cast<std::size_t>(v - 1)] = 1;
    out.reduced.emplace(G2Symbol{I, Exponents(static_cast<std::size_t>(m), 0), s}, 1);
    return out;
}

// ---- the relation families of the first presentation ----

namespace detail {

inline KoElement x_product(const std::set<int>& S, int m) {
    KoElement acc = ko_one(m);
    for (int i : S) acc = ko_mul(acc, g1_class({i}, 0, m));
    return acc;
}

inline std::set<int> set_union(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

template <typename F>
void for_each_subset(const std::set<int>& s, F&& f) {
    std::vector<int> v(s.begin(), s.end());
    const std::size_t n = v.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::set<int> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) sub.insert(v[i]);
        f(sub);
    }
}

}  // namespace detail

// Both sides of relation (I) for disjoint A, B, C and s, t in {0,1}.
inline std::pair<KoElement, KoElement> relation_I_sides(const std::set<int>& A,
                                                        const std::set<int>& B,
                                                        const std::set<int>& C, int s, int t,
                                                        int m) {
    for (int v : A)
        if (B.count(v) || C.count(v)) throw std::invalid_argument("relation_I: subsets overlap");
    for (int v : B)
        if (C.count(v)) throw std::invalid_argument("relation_I: subsets overlap");
    if (s < 0 || s > 1 || t < 0 || t > 1)
        throw std::invalid_argument("relation_I: s,t must be 0 or 1");

    KoElement lhs = ko_mul(g1_class(detail::set_union(A, B), s, m),
                           g1_class(detail::set_union(A, C), t, m));

    KoElement bracket = ko_zero(m, -2 * (s + t));
    detail::for_each_subset(A, [&](const std::set<int>& T) {
        bracket = ko_add(bracket,
                         g1_class(detail::set_union(T, detail::set_union(B, C)), s + t, m));
    });
    const bool outer_neg = odd(s + static_cast<int>(A.size() + B.size()));
    detail::for_each_subset(B, [&](const std::set<int>& S2) {
        std::set<int> rest;  // B \ S2
        for (int v : B)
            if (!S2.count(v)) rest.insert(v);
        KoElement term = ko_mul(detail::x_product(S2, m),
                                g1_class(detail::set_union(C, rest), s + t, m));
        Int sign = (odd(static_cast<int>(S2.size())) != outer_neg) ? -1 : 1;
        bracket = ko_add(bracket, ko_scale(term, sign));
    });
    KoElement rhs = ko_mul(detail::x_product(A, m), bracket);
    return {lhs, rhs};
}

// Both sides of relation (II) for i < min(S), |S| > 1, s in {0,1}.
inline std::pair<KoElement, KoElement> relation_II_sides(int i, const std::set<int>& S, int s,
                                                         int m) {
    if (S.size() < 2) throw std::invalid_argument("relation_II: |S| must exceed 1");
    if (i >= *S.begin()) throw std::invalid_argument("relation_II: need i < min(S)");
    if (s < 0 || s > 1) throw std::invalid_argument("relation_II: s must be 0 or 1");

    KoElement lhs = ko_mul(g1_class({i}, 0, m), g1_class(S, s, m));

    KoElement sum = ko_zero(m, -2 * s);
    detail::for_each_subset(S, [&](const std::set<int>& T) {
        std::set<int> rest;  // S \ T
        for (int v : S)
            if (!T.count(v)) rest.insert(v);
        std::set<int> iT = T;
        iT.insert(i);
        KoElement term = ko_mul(detail::x_product(rest, m), g1_class(iT, s, m));
        Int sign = (odd(static_cast<int>(T.size())) != odd(s)) ? -1 : 1;
        sum = ko_add(sum, ko_scale(term, sign));
    });
    std::set<int> iS = S;
    iS.insert(i);
    KoElement rhs = ko_add(sum, g1_class(iS, s, m));
    return {lhs, rhs};
}

// ---- equality ----

// Symbolic mode: normal forms of finite sums are compared syntactically
// (no finite relations exist among the bracket generators).
inline bool ko_equal(const KoElement& a, const KoElement& b) {
    if (a.m != b.m) throw std::invalid_argument("ko_equal: ambient rank mismatch");
    if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
        throw std::invalid_argument("ko_equal: degree mismatch");
    return a.scalar == b.scalar && a.reduced == b.reduced;
}

// Truncated mode: compare complexifications in the truncated KU model, where
// genuine finite relations appear. Complexification kills the e-torsion part
// of the coefficient ring, so that part is compared directly.
inline bool ko_equal(const KoElement& a, const KoElement& b, const Truncation& t) {
    if (a.m != b.m) throw std::invalid_argument("ko_equal: ambient rank mismatch");
    if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
        throw std::invalid_argument("ko_equal: degree mismatch");
    KoElement diff = ko_sub(a, b);
    if (!diff.scalar.torsion_part().is_zero()) return false;
    return complexify(diff, t).is_zero();
}

// ---- rank census for the smash-product module ----

// Counts basis elements two independent ways: the free-module monomial basis
// {X^e gamma^j M_S^(s) : 1 in S} with weight e_1 + sum_{i>=2}(2 e_i + [i not in S]),
// and the summand census of the graded-group description, pairs (k >= 1,
// f_2..f_m >= 1) with weight (k-1) + sum (f_i - 1). Odd degrees are empty.
inline std::pair<long long, long long> smash_rank_two_ways(int m, int degree, int window) {
    if (m < 1) throw std::invalid_argument("smash_rank_two_ways: m must be >= 1");
    if (odd(degree) || window < 0) return {0, 0};

    // side one: subsets S containing 1, exponents e with bounded weight
    long long count_ko = 0;
    const int others = m - 1;
    for (std::size_t mask = 0; mask < (std::size_t(1) << others); ++mask) {
        int base = 0;  // weight contribution of indices outside S
        for (int i = 0; i < others; ++i)
            if (!(mask & (std::size_t(1) << i))) ++base;
        if (base > window) continue;
        // count e >= 0 with e_1 + 2(e_2 + ... + e_m) <= window - base
        const int budget = window - base;
        auto count_tail = [&](auto&& self, int vars, int left) -> long long {
            if (vars == 0) return 1;
            long long total = 0;
            for (int e = 0; 2 * e <= left; ++e) total += self(self, vars - 1, left - 2 * e);
            return total;
        };
        for (int e1 = 0; e1 <= budget; ++e1) count_ko += count_tail(count_tail, others, budget - e1);
    }

    // side two: summand index k >= 1 and exponents f_i >= 1,
    // i.e. lattice points a_0..a_{m-1} >= 0 with sum <= window
    long long count_ku = 1;
    for (int i = 1; i <= m; ++i) count_ku = count_ku * (window + i) / i;  // C(window + m, m)

    return {count_ko, count_ku};
}

}  // namespace kotoric
