#include "affhecke/kmodule.hpp"

namespace affhecke {

AffineWeylElement demazure_basis_rule(const AffineWeylElement& w, int i) {
    return is_right_descent(w, i) ? w : w.times_generator(i);
}

SchubertVector<Fp> specialize(const EquivariantClass& v) {
    SchubertVector<Fp> out(v.group());
    for (const auto& [w, c] : v.terms()) out.add_term(w, specialize_at_identity(c));
    return out;
}

EquivariantClass lift_coefficients(const SchubertVector<Fp>& v, std::size_t dim) {
    EquivariantClass out(v.group());
    for (const auto& [w, c] : v.terms()) out.add_term(w, GroupRingElement::constant(c, dim));
    return out;
}

void GrassmannianVector::add_term(const Coweight& lambda, const GroupRingElement& c) {
    if (lambda.size() != static_cast<std::size_t>(group_->rank()))
        throw std::invalid_argument("coweight " + to_string(lambda) + " has the wrong rank");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AffineWeylElement max_finite_coset_rep(const AffineWeylElement& x) {
    const auto& group = x.group();
    return min_coset_rep(x, finite_generators(group->rank())) * longest_finite_element(group);
}

EquivariantClass grassmannian_pullback(const GrassmannianVector& g) {
    EquivariantClass out(g.group());
    for (const auto& [lambda, c] : g.terms()) out.add_term(max_finite_coset_rep(g.group()->translation(lambda)), c);
    return out;
}

AffineWeylElement spherical_element(const GroupPtr& group, const Coweight& mu) {
    // w0 e^mu = e^{w0(mu)} w0
    const FinitePart& w0 = group->longest_finite_part();
    return group->element(w0.act(mu), w0);
}

std::optional<Coweight> spherical_exponent(const AffineWeylElement& x) {
    const FinitePart& w0 = x.group()->longest_finite_part();
    if (!(x.finite() == w0)) return std::nullopt;
    Coweight mu = w0.act(x.translation());  // w0 is an involution
    if (!x.root_system().is_dominant(mu)) return std::nullopt;
    return mu;
}

EquivariantClass spherical_act(const Coweight& lambda, const EquivariantClass& v) {
    const auto& group = v.group();
    if (!group->root_system().is_dominant(lambda))
        throw std::invalid_argument("coweight " + to_string(lambda) + " is not dominant");
    EquivariantClass out(group);
    for (const auto& [x, c] : v.terms()) {
        auto mu = spherical_exponent(x);
        if (!mu)
            throw std::invalid_argument("class " + to_string(reduced_word(x)) +
                                        " is not of the form w0 e^mu with mu dominant");
        out.add_term(spherical_element(group, *mu + lambda), c);
    }
    return out;
}

}  // namespace affhecke
