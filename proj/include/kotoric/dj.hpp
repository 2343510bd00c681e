#pragma once

// Stanley-Reisner quotients for the KU and KO rings of a Davis-Januszkiewicz
// space, and the inverse-limit model over the face category as a cross-check.
// Support of a term is preserved by every rewriting step, so both quotient
// maps are term filters on canonical forms.

#include <set>
#include <stdexcept>
#include <vector>

#include "kotoric/ko.hpp"
#include "kotoric/ku.hpp"
#include "kotoric/simplicial.hpp"

namespace kotoric {

namespace detail {

inline std::set<int> support(const Exponents& e) {
    std::set<int> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) out.insert(static_cast<int>(i) + 1);
    return out;
}

inline std::set<int> symbol_support(const G2Symbol& sym) {
    std::set<int> out = support(sym.I);
    for (int v : support(sym.J)) out.insert(v);
    return out;
}

}  // namespace detail

// Delete every monomial whose support is a non-face.
inline KuElement sr_reduce_ku(const KuElement& a, const SimplicialComplex& k) {
    if (a.trunc.vars() != k.vertex_count())
        throw std::invalid_argument("sr_reduce_ku: rank mismatch");
    KuElement out = ku_zero(a.trunc, a.s);
    for (const auto& [e, c] : a.coeffs)
        if (k.is_face(detail::support(e))) out.coeffs.emplace(e, c);
    return out;
}

// Delete every bracket term with eps(I) u eps(J) not a face; the scalar part
// is untouched.
inline KoElement sr_reduce_ko(const KoElement& a, const SimplicialComplex& k) {
    if (a.m != k.vertex_count()) throw std::invalid_argument("sr_reduce_ko: rank mismatch");
    KoElement out = ko_zero(a.m, a.degree);
    out.scalar = a.scalar;
    for (const auto& [sym, c] : a.reduced)
        if (k.is_face(detail::symbol_support(sym))) out.reduced.emplace(sym, c);
    return out;
}

// Equality in KO*(DJ(K)): the difference must complexify into the kernel of
// the KU Stanley-Reisner quotient. Torsion scalars are invisible to c and
// survive the quotient, so they are compared directly.
inline bool dj_equal(const KoElement& a, const KoElement& b, const SimplicialComplex& k,
                     const Truncation& t) {
    if (a.m != b.m || a.m != k.vertex_count())
        throw std::invalid_argument("dj_equal: rank mismatch");
    if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
        throw std::invalid_argument("dj_equal: degree mismatch");
    KoElement diff = ko_sub(a, b);
    if (!diff.scalar.torsion_part().is_zero()) return false;
    return sr_reduce_ku(complexify(diff, t), k).is_zero();
}

// Kill bracket terms not supported inside sigma; the scalar restricts to
// itself along BT^sigma -> BT^m.
inline KoElement ko_restrict(const KoElement& a, const std::set<int>& sigma) {
    KoElement out = ko_zero(a.m, a.degree);
    out.scalar = a.scalar;
    for (const auto& [sym, c] : a.reduced) {
        bool inside = true;
        for (int v : detail::symbol_support(sym))
            if (!sigma.count(v)) {
                inside = false;
                break;
            }
        if (inside) out.reduced.emplace(sym, c);
    }
    return out;
}

struct LimitTuple {
    SimplicialComplex complex;
    std::vector<KoElement> components;  // one per facet, in facet order
};

inline LimitTuple limit_tuple(const KoElement& a, const SimplicialComplex& k) {
    if (a.m != k.vertex_count()) throw std::invalid_argument("limit_tuple: rank mismatch");
    LimitTuple out{k, {}};
    for (const auto& f : k.facets())
        out.components.push_back(ko_restrict(a, std::set<int>(f.begin(), f.end())));
    return out;
}

inline LimitTuple tuple_mul(const LimitTuple& t1, const LimitTuple& t2) {
    if (!(t1.complex == t2.complex)) throw std::invalid_argument("tuple_mul: complex mismatch");
    LimitTuple out{t1.complex, {}};
    for (std::size_t i = 0; i < t1.components.size(); ++i)
        out.components.push_back(ko_mul(t1.components[i], t2.components[i]));
    return out;
}

inline bool tuple_is_zero(const LimitTuple& t, const Truncation& tr) {
    for (const auto& c : t.components)
        if (!ko_equal(c, ko_zero(c.m, c.degree), tr)) return false;
    return true;
}

// Restrictions to every shared face of two facets must agree.
inline bool tuple_compatible(const LimitTuple& t, const Truncation& tr) {
    const auto& facets = t.complex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            std::set<int> shared;
            std::set<int> fj(facets[j].begin(), facets[j].end());
            for (int v : facets[i])
                if (fj.count(v)) shared.insert(v);
            if (!ko_equal(ko_restrict(t.components[i], shared),
                          ko_restrict(t.components[j], shared), tr))
                return false;
        }
    return true;
}

}  // namespace kotoric
