#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "affhecke/coeffs.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

// The equivariant K-group of the affine flag variety, modelled as the free
// module over the coefficient ring on the Schubert classes [O_{S_w}], w in W.
// All operators act on the right: v * D_i, v * h.

/// Basis rule for D_i: the image of [O_{S_w}] is [O_{S_{w'}}] with w' returned
/// by the rule. Exposed so verification code can substitute a mutant.
using DemazureRule = AffineWeylElement (*)(const AffineWeylElement& w, int i);

/// [O_{S_w}] * D_i = [O_{S_w}] if w s_i < w, and [O_{S_{w s_i}}] otherwise.
AffineWeylElement demazure_basis_rule(const AffineWeylElement& w, int i);

template <Coefficient R>
class SchubertVector {
  public:
    using Terms = std::map<AffineWeylElement, R>;

    explicit SchubertVector(GroupPtr group) : group_(std::move(group)) {}

    const GroupPtr& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const AffineWeylElement& w, const R& c) {
        if (!w.group()->same_as(*group_)) throw std::invalid_argument("Schubert class from a different Weyl group");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const R* coefficient(const AffineWeylElement& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const SchubertVector& a, const SchubertVector& b) {
        return a.group_->same_as(*b.group_) && a.terms_ == b.terms_;
    }
    friend SchubertVector operator+(const SchubertVector& a, const SchubertVector& b) {
        SchubertVector out = a;
        for (const auto& [w, c] : b.terms_) out.add_term(w, c);
        return out;
    }
    friend SchubertVector operator*(const R& c, const SchubertVector& v) {
        SchubertVector out(v.group_);
        for (const auto& [w, d] : v.terms_) out.add_term(w, c * d);
        return out;
    }

  private:
    GroupPtr group_;
    Terms terms_;
};

using EquivariantClass = SchubertVector<GroupRingElement>;

/// c [O_{S_w}].
template <Coefficient R>
SchubertVector<R> schubert_class(const AffineWeylElement& w, const R& c) {
    SchubertVector<R> v(w.group());
    v.add_term(w, c);
    return v;
}

/// v * D_i, extended linearly; colliding targets add and cancelled terms drop.
template <Coefficient R>
SchubertVector<R> demazure_apply(const SchubertVector<R>& v, int i, DemazureRule rule = demazure_basis_rule) {
    SchubertVector<R> out(v.group());
    for (const auto& [w, c] : v.terms()) out.add_term(rule(w, i), c);
    return out;
}

/// v * D_{i_1} * ... * D_{i_n} for an explicit word.
template <Coefficient R>
SchubertVector<R> demazure_word_apply(const SchubertVector<R>& v, const Word& word, DemazureRule rule = demazure_basis_rule) {
    SchubertVector<R> out = v;
    for (int i : word) out = demazure_apply(out, i, rule);
    return out;
}

/// v * D_w along the canonical reduced word of w; D_1 is the identity.
template <Coefficient R>
SchubertVector<R> demazure_word_apply(const SchubertVector<R>& v, const AffineWeylElement& w,
                                      DemazureRule rule = demazure_basis_rule) {
    return demazure_word_apply(v, reduced_word(w), rule);
}

/// v * h, where sum c_w Y_w acts as sum c_w D_w.
template <Coefficient R>
SchubertVector<R> hecke_act(const SchubertVector<R>& v, const HeckeElement<R>& h, DemazureRule rule = demazure_basis_rule) {
    if (!v.group()->same_as(*h.group())) throw std::invalid_argument("Hecke action across different Weyl groups");
    SchubertVector<R> out(v.group());
    const auto hy = convert_basis(h, HeckeBasis::Y);
    for (const auto& [w, c] : hy.terms()) {
        const auto moved = demazure_word_apply(v, w, rule);
        for (const auto& [x, d] : moved.terms()) out.add_term(x, d * c);
    }
    return out;
}

/// Xi: Y_w -> [O_{S_w}].
template <Coefficient R>
SchubertVector<R> xi_forward(const HeckeElement<R>& h) {
    SchubertVector<R> v(h.group());
    const auto hy = convert_basis(h, HeckeBasis::Y);
    for (const auto& [w, c] : hy.terms()) v.add_term(w, c);
    return v;
}

/// Xi^{-1}: [O_{S_w}] -> Y_w.
template <Coefficient R>
HeckeElement<R> xi_inverse(const SchubertVector<R>& v) {
    HeckeElement<R> h(v.group(), HeckeBasis::Y);
    for (const auto& [w, c] : v.terms()) h.add_term(w, c);
    return h;
}

/// Evaluation at the identity of T~ on every coefficient.
SchubertVector<Fp> specialize(const EquivariantClass& v);

/// Lifts GF(p) coefficients to constants of k[T~].
EquivariantClass lift_coefficients(const SchubertVector<Fp>& v, std::size_t dim);

/// A class on the affine Grassmannian, keyed by the coweight lambda that labels
/// the coset e^lambda W0 (every coset has exactly one such label).
class GrassmannianVector {
  public:
    using Terms = std::map<Coweight, GroupRingElement>;

    explicit GrassmannianVector(GroupPtr group) : group_(std::move(group)) {}

    const GroupPtr& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Coweight& lambda, const GroupRingElement& c);

  private:
    GroupPtr group_;
    Terms terms_;
};

/// Maximal-length element of x W0, i.e. min_coset_rep(x, W0) * w0.
AffineWeylElement max_finite_coset_rep(const AffineWeylElement& x);

/// pi^*: the class indexed by e^lambda W0 goes to the flag-variety class of the
/// maximal representative of that coset (e^lambda w0 when lambda is antidominant).
EquivariantClass grassmannian_pullback(const GrassmannianVector& g);

/// The element w0 e^mu.
AffineWeylElement spherical_element(const GroupPtr& group, const Coweight& mu);

/// mu with x = w0 e^mu and mu dominant, if such mu exists.
std::optional<Coweight> spherical_exponent(const AffineWeylElement& x);

/// v * Theta(e^lambda) for v in the image of the antidominant pullback, via the
/// basis rule [O_{S_{w0 e^mu}}] -> [O_{S_{w0 e^{mu+lambda}}}]. Throws
/// std::invalid_argument if lambda is not dominant or v leaves that image.
EquivariantClass spherical_act(const Coweight& lambda, const EquivariantClass& v);

}  // namespace affhecke
