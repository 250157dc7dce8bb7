#include "affhecke/hecke.hpp"

namespace affhecke {

const char* to_string(HeckeBasis b) { return b == HeckeBasis::Y ? "Y" : "Ytilde"; }

HeckeElement<Fp> theta_embed(const DominantMonoidElement& a, const GroupPtr& group) {
    if (!(a.root_system() == group->root_system()))
        throw std::invalid_argument("monoid ring and Weyl group have different root systems");
    HeckeElement<Fp> h(group, HeckeBasis::Y);
    for (const auto& [lambda, c] : a.terms()) {
        if (!group->root_system().is_dominant(lambda))
            throw std::invalid_argument("coweight " + to_string(lambda) + " is not dominant");
        h.add_term(group->translation(lambda), c);
    }
    return h;
}

HeckeElement<GroupRingElement> lift_coefficients(const HeckeElement<Fp>& h, std::size_t dim) {
    HeckeElement<GroupRingElement> out(h.group(), h.basis());
    for (const auto& [w, c] : h.terms()) out.add_term(w, GroupRingElement::constant(c, dim));
    return out;
}

HeckeElement<Fp> specialize(const HeckeElement<GroupRingElement>& h) {
    HeckeElement<Fp> out(h.group(), h.basis());
    for (const auto& [w, c] : h.terms()) out.add_term(w, specialize_at_identity(c));
    return out;
}

}  // namespace affhecke
