#pragma once

// JSON input formats: complexes {"m": int, "facets": [[int,..],..]} with
// 1-based vertices, and manifolds {"complex": <complex>, "lambda": [[int,..],..]}
// with one row per vertex. JSON output for elements is schema-stable and
// deterministic for fixed inputs.

#include <fstream>
#include <string>

#include <json.hpp>

#include "kotoric/ko.hpp"
#include "kotoric/simplicial.hpp"
#include "kotoric/text.hpp"
#include "kotoric/toric.hpp"

namespace kotoric {

using json = nlohmann::ordered_json;

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw parse_error("complex: expected {\"m\": int, \"facets\": [[..],..]}");
    return SimplicialComplex(j.at("m").get<int>(),
                             j.at("facets").get<std::vector<std::vector<int>>>());
}

inline std::pair<SimplicialComplex, CharacteristicMatrix> manifold_from_json(const json& j) {
    if (!j.is_object() || !j.contains("complex") || !j.contains("lambda"))
        throw parse_error("manifold: expected {\"complex\": .., \"lambda\": [[..],..]}");
    SimplicialComplex k = complex_from_json(j.at("complex"));
    CharacteristicMatrix lam{j.at("lambda").get<std::vector<std::vector<int>>>()};
    lam.check_rectangular();
    if (lam.facets() != k.vertex_count())
        throw parse_error("manifold: lambda needs one row per vertex");
    return {std::move(k), std::move(lam)};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& err) {
        throw parse_error(path + ": " + err.what());
    }
    return j;
}

inline json to_json(const KoElement& a) {
    json scalar = json::array();
    for (const auto& [tok, c] : a.scalar.terms()) {
        const char* kind = "beta";
        switch (tok.kind) {
            case KoKind::Unit: kind = "beta"; break;
            case KoKind::Alpha: kind = "alpha"; break;
            case KoKind::E: kind = "e"; break;
            case KoKind::E2: kind = "e2"; break;
        }
        scalar.push_back({{"kind", kind}, {"t", tok.t}, {"coeff", c.str()}});
    }
    json terms = json::array();
    for (const auto& [sym, c] : a.reduced)
        terms.push_back({{"I", sym.I}, {"J", sym.J}, {"s", sym.s}, {"coeff", c.str()}});
    return json{{"m", a.m},
                {"degree", a.degree},
                {"scalar", std::move(scalar)},
                {"terms", std::move(terms)},
                {"text", render(a)}};
}

}  // namespace kotoric
