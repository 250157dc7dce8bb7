#include "affhecke/serialize.hpp"

#include <string>

namespace affhecke {

namespace {

std::vector<std::int64_t> int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SchemaError(std::string(what) + " must be an array of integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

}  // namespace

json to_json(const Coweight& c) { return c.coords; }

Coweight coweight_from_json(const json& j, std::size_t rank) {
    Coweight c{int_vector(j, "coweight")};
    if (c.size() != rank)
        throw SchemaError("coweight has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(rank));
    return c;
}

json to_json(const AffineWeylElement& x) {
    return {{"lambda", to_json(x.translation())}, {"word", finite_reduced_word(x)}};
}

AffineWeylElement element_from_json(const GroupPtr& group, const json& j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("word"))
        throw SchemaError("element must be an object with \"lambda\" and \"word\"");
    const auto lambda = coweight_from_json(j.at("lambda"), static_cast<std::size_t>(group->rank()));
    Word word;
    for (auto i : int_vector(j.at("word"), "word")) {
        if (i < 1 || i > group->rank()) throw SchemaError("finite word letter " + std::to_string(i) + " out of range");
        word.push_back(static_cast<int>(i));
    }
    return group->from_translation_and_finite_word(lambda, word);
}

json to_json(Fp a) { return a.value(); }

Fp fp_from_json(const json& j, std::uint32_t p) {
    if (!j.is_number_integer()) throw SchemaError("field element must be an integer");
    return Fp(j.get<std::int64_t>(), p);
}

json to_json(const GroupRingElement& a) {
    json arr = json::array();
    for (const auto& [chi, c] : a.terms()) arr.push_back({{"exp", chi.exponents}, {"coeff", c.value()}});
    return arr;
}

GroupRingElement group_ring_from_json(const json& j, const CoeffContext& ctx) {
    if (j.is_number_integer()) return GroupRingElement::constant(fp_from_json(j, ctx.prime), ctx.dim);
    if (!j.is_array()) throw SchemaError("group ring element must be an array of {\"exp\", \"coeff\"} terms");
    GroupRingElement out(ctx.prime, ctx.dim);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
            throw SchemaError("group ring term must have \"exp\" and \"coeff\"");
        TorusCharacter chi{int_vector(t.at("exp"), "exp")};
        if (chi.size() != ctx.dim)
            throw SchemaError("character has " + std::to_string(chi.size()) + " exponents, expected " + std::to_string(ctx.dim));
        out.add_term(chi, fp_from_json(t.at("coeff"), ctx.prime));
    }
    return out;
}

HeckeBasis basis_from_json(const json& j) {
    if (j == "Y") return HeckeBasis::Y;
    if (j == "Ytilde") return HeckeBasis::Ytilde;
    throw SchemaError("basis must be \"Y\" or \"Ytilde\"");
}

json to_json(const GrassmannianVector& g) {
    json arr = json::array();
    for (const auto& [lambda, c] : g.terms()) arr.push_back({{"lambda", to_json(lambda)}, {"coeff", to_json(c)}});
    return arr;
}

GrassmannianVector grassmannian_from_json(const GroupPtr& group, const json& j, const CoeffContext& ctx) {
    if (!j.is_array()) throw SchemaError("Grassmannian vector must be an array of terms");
    GrassmannianVector g(group);
    for (const auto& t : j)
        g.add_term(coweight_from_json(t.at("lambda"), static_cast<std::size_t>(group->rank())), group_ring_from_json(t.at("coeff"), ctx));
    return g;
}

json to_json(const Ball& ball, const AffineWeylGroup& group) {
    json shells = json::array();
    for (const auto& shell : ball.shells) {
        json s = json::array();
        for (const auto& x : shell) s.push_back(to_json(x));
        shells.push_back(std::move(s));
    }
    return {{"type", group.root_system().name()},
            {"rank", group.rank()},
            {"max_length", ball.max_length},
            {"count", ball.size()},
            {"counts", ball.counts()},
            {"shells", std::move(shells)}};
}

Ball ball_from_json(const GroupPtr& group, const json& j) {
    if (!j.is_object() || !j.contains("shells") || !j.contains("max_length")) throw SchemaError("ball must have \"shells\"");
    Ball ball;
    ball.max_length = j.at("max_length").get<std::int64_t>();
    for (const auto& s : j.at("shells")) {
        std::vector<AffineWeylElement> shell;
        for (const auto& e : s) shell.push_back(element_from_json(group, e));
        ball.shells.push_back(std::move(shell));
    }
    return ball;
}

}  // namespace affhecke
