#pragma once

#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

#include "affhecke/coeffs.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/kmodule.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

using json = nlohmann::ordered_json;

/// Raised for JSON that does not match the documented schemas.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything needed to rebuild a coefficient: the field and the torus dimension.
struct CoeffContext {
    std::uint32_t prime = 2;
    std::size_t dim = 0;
};

// Element: {"lambda": [...], "word": [...]} with e^lambda times the canonical
// finite reduced word.
json to_json(const AffineWeylElement& x);
AffineWeylElement element_from_json(const GroupPtr& group, const json& j);

json to_json(const Coweight& c);
Coweight coweight_from_json(const json& j, std::size_t rank);

// Fp: a bare integer in [0, p).
json to_json(Fp a);
Fp fp_from_json(const json& j, std::uint32_t p);

// Group ring: [{"exp": [...], "coeff": n}], sorted by exponent vector.
json to_json(const GroupRingElement& a);
GroupRingElement group_ring_from_json(const json& j, const CoeffContext& ctx);

template <class R>
R coeff_from_json(const json& j, const CoeffContext& ctx);
template <>
inline Fp coeff_from_json<Fp>(const json& j, const CoeffContext& ctx) { return fp_from_json(j, ctx.prime); }
template <>
inline GroupRingElement coeff_from_json<GroupRingElement>(const json& j, const CoeffContext& ctx) {
    return group_ring_from_json(j, ctx);
}

/// Sorts keys by (length, canonical reduced word) without recomputing them per comparison.
template <class Map>
std::vector<typename Map::const_iterator> canonical_order(const Map& terms) {
    struct Keyed {
        std::int64_t len;
        Word word;
        typename Map::const_iterator it;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(terms.size());
    for (auto it = terms.begin(); it != terms.end(); ++it) keyed.push_back({length(it->first), reduced_word(it->first), it});
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::tie(a.len, a.word) < std::tie(b.len, b.word); });
    std::vector<typename Map::const_iterator> out;
    for (auto& k : keyed) out.push_back(k.it);
    return out;
}

template <Coefficient R>
json terms_to_json(const std::map<AffineWeylElement, R>& terms) {
    json arr = json::array();
    for (auto it : canonical_order(terms)) arr.push_back({{"elem", to_json(it->first)}, {"coeff", to_json(it->second)}});
    return arr;
}

// Hecke element: {"basis": "Y" | "Ytilde", "terms": [{"elem", "coeff"}]}.
template <Coefficient R>
json to_json(const HeckeElement<R>& h) {
    return {{"basis", to_string(h.basis())}, {"terms", terms_to_json(h.terms())}};
}

HeckeBasis basis_from_json(const json& j);

template <Coefficient R>
HeckeElement<R> hecke_from_json(const GroupPtr& group, const json& j, const CoeffContext& ctx) {
    if (!j.is_object() || !j.contains("terms")) throw SchemaError("Hecke element must be an object with \"terms\"");
    HeckeElement<R> h(group, j.contains("basis") ? basis_from_json(j.at("basis")) : HeckeBasis::Y);
    for (const auto& t : j.at("terms")) h.add_term(element_from_json(group, t.at("elem")), coeff_from_json<R>(t.at("coeff"), ctx));
    return h;
}

// Schubert vector: [{"elem", "coeff"}].
template <Coefficient R>
json to_json(const SchubertVector<R>& v) {
    return terms_to_json(v.terms());
}

template <Coefficient R>
SchubertVector<R> schubert_from_json(const GroupPtr& group, const json& j, const CoeffContext& ctx) {
    if (!j.is_array()) throw SchemaError("Schubert vector must be an array of terms");
    SchubertVector<R> v(group);
    for (const auto& t : j) v.add_term(element_from_json(group, t.at("elem")), coeff_from_json<R>(t.at("coeff"), ctx));
    return v;
}

// Grassmannian vector: [{"lambda": [...], "coeff": <group ring>}], sorted by lambda.
json to_json(const GrassmannianVector& g);
GrassmannianVector grassmannian_from_json(const GroupPtr& group, const json& j, const CoeffContext& ctx);

// Ball: {"type", "rank", "max_length", "counts", "shells": [[elem, ...], ...]}.
json to_json(const Ball& ball, const AffineWeylGroup& group);
Ball ball_from_json(const GroupPtr& group, const json& j);

}  // namespace affhecke
