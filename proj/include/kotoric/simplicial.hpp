#pragma once

// Simplicial complexes on vertex set {1..m}, stored by their facets.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kotoric {

class SimplicialComplex {
public:
    // Facets are maximal faces; each must be sorted after normalization, no
    // facet may contain another, and every vertex must appear. m = 0 with the
    // single empty facet models the degenerate point case.
    SimplicialComplex(int m, std::vector<std::vector<int>> facets) : m_(m) {
        if (m < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
        if (facets.empty()) {
            if (m != 0)
                throw std::invalid_argument("SimplicialComplex: no facets but vertices present");
            facets.push_back({});
        }
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw std::invalid_argument("SimplicialComplex: repeated vertex in facet");
            for (int v : f)
                if (v < 1 || v > m)
                    throw std::invalid_argument("SimplicialComplex: vertex out of range");
        }
        for (std::size_t i = 0; i < facets.size(); ++i)
            for (std::size_t j = 0; j < facets.size(); ++j)
                if (i != j && std::includes(facets[i].begin(), facets[i].end(),
                                            facets[j].begin(), facets[j].end()))
                    throw std::invalid_argument("SimplicialComplex: facet contained in another");
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (const auto& f : facets)
            for (int v : f) seen[static_cast<std::size_t>(v)] = true;
        for (int v = 1; v <= m; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("SimplicialComplex: vertex " + std::to_string(v) +
                                            " lies in no facet");
        std::sort(facets.begin(), facets.end());
        facets_ = std::move(facets);
    }

    int vertex_count() const { return m_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    bool is_face(const std::set<int>& sigma) const {
        for (const auto& f : facets_)
            if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) return true;
        return false;
    }

    // every face, the empty one included, as sorted vertex lists
    std::vector<std::vector<int>> all_faces() const {
        std::set<std::vector<int>> faces;
        for (const auto& f : facets_) {
            const std::size_t n = f.size();
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::size_t(1) << i)) sub.push_back(f[i]);
                faces.insert(std::move(sub));
            }
        }
        return {faces.begin(), faces.end()};
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    int m_ = 0;
    std::vector<std::vector<int>> facets_;
};

// Inclusion-minimal non-faces, in increasing (size, lex) order.
inline std::vector<std::vector<int>> minimal_nonfaces(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(m) + 1);
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<int> sigma;
        for (int i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) sigma.push_back(i + 1);
        by_size[sigma.size()].push_back(std::move(sigma));
    }
    for (std::size_t size = 1; size <= static_cast<std::size_t>(m); ++size) {
        std::sort(by_size[size].begin(), by_size[size].end());
        for (auto& sigma : by_size[size]) {
            std::set<int> sset(sigma.begin(), sigma.end());
            if (k.is_face(sset)) continue;
            bool minimal = true;
            for (int v : sigma) {
                std::set<int> sub = sset;
                sub.erase(v);
                if (!k.is_face(sub)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(sigma);
        }
    }
    return out;
}

}  // namespace kotoric
