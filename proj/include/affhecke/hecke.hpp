#pragma once

#include <map>
#include <stdexcept>

#include "affhecke/coeffs.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

/// Which basis the coefficients of a HeckeElement refer to. Ytilde is also
/// the Iwahori-Matsumoto basis tau_w; Y_w = (-1)^{l(w)} Ytilde_w.
enum class HeckeBasis { Y, Ytilde };

const char* to_string(HeckeBasis b);

/// An element of the Iwahori-Hecke algebra with all parameters q_s = 0,
/// over the coefficient ring R, as a finitely supported map W -> R.
template <Coefficient R>
class HeckeElement {
  public:
    using Terms = std::map<AffineWeylElement, R>;

    explicit HeckeElement(GroupPtr group, HeckeBasis basis = HeckeBasis::Y) : group_(std::move(group)), basis_(basis) {}

    const GroupPtr& group() const { return group_; }
    HeckeBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const AffineWeylElement& w, const R& c) {
        if (!w.group()->same_as(*group_)) throw std::invalid_argument("Hecke term from a different Weyl group");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient of the basis element indexed by w, or nullptr when zero.
    const R* coefficient(const AffineWeylElement& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

  private:
    GroupPtr group_;
    HeckeBasis basis_;
    Terms terms_;
};

/// Relabels coefficients into the `target` basis by the sign (-1)^{l(w)}.
template <Coefficient R>
HeckeElement<R> convert_basis(const HeckeElement<R>& h, HeckeBasis target) {
    if (h.basis() == target) return h;
    HeckeElement<R> out(h.group(), target);
    for (const auto& [w, c] : h.terms()) out.add_term(w, length(w) % 2 == 0 ? c : -c);
    return out;
}

template <Coefficient R>
bool operator==(const HeckeElement<R>& a, const HeckeElement<R>& b) {
    if (!a.group()->same_as(*b.group())) return false;
    return convert_basis(a, HeckeBasis::Y).terms() == convert_basis(b, HeckeBasis::Y).terms();
}

template <Coefficient R>
HeckeElement<R> operator+(const HeckeElement<R>& a, const HeckeElement<R>& b) {
    HeckeElement<R> out = a;
    const auto bb = convert_basis(b, a.basis());
    for (const auto& [w, c] : bb.terms()) out.add_term(w, c);
    return out;
}

template <Coefficient R>
HeckeElement<R> operator*(const R& c, const HeckeElement<R>& h) {
    HeckeElement<R> out(h.group(), h.basis());
    for (const auto& [w, d] : h.terms()) out.add_term(w, c * d);
    return out;
}

/// c Y_w.
template <Coefficient R>
HeckeElement<R> basis_Y(const AffineWeylElement& w, const R& c) {
    HeckeElement<R> h(w.group(), HeckeBasis::Y);
    h.add_term(w, c);
    return h;
}

/// c Ytilde_w.
template <Coefficient R>
HeckeElement<R> basis_Ytilde(const AffineWeylElement& w, const R& c) {
    HeckeElement<R> h(w.group(), HeckeBasis::Ytilde);
    h.add_term(w, c);
    return h;
}

/// The one-step product in the Y basis: Y_x Y_{s_i} = Y_{x s_i} if l(x s_i) > l(x), else Y_x.
inline AffineWeylElement hecke_step(const AffineWeylElement& x, int i) {
    return is_right_descent(x, i) ? x : x.times_generator(i);
}

/// h Y_{s_{i_1}} ... Y_{s_{i_n}}, computed letter by letter. The word need not be reduced.
template <Coefficient R>
HeckeElement<R> multiply_by_word(const HeckeElement<R>& h, const Word& word) {
    HeckeElement<R> out(h.group(), HeckeBasis::Y);
    const auto hy = convert_basis(h, HeckeBasis::Y);
    for (const auto& [x, c] : hy.terms()) {
        AffineWeylElement z = x;
        for (int i : word) z = hecke_step(z, i);
        out.add_term(z, c);
    }
    return convert_basis(out, h.basis());
}

/// Product in the algebra; b is factored along the canonical reduced word of
/// each of its basis elements. The result is expressed in the basis of a.
template <Coefficient R>
HeckeElement<R> multiply_hecke(const HeckeElement<R>& a, const HeckeElement<R>& b) {
    if (!a.group()->same_as(*b.group())) throw std::invalid_argument("Hecke product across different Weyl groups");
    const auto ay = convert_basis(a, HeckeBasis::Y);
    HeckeElement<R> out(a.group(), HeckeBasis::Y);
    const auto by = convert_basis(b, HeckeBasis::Y);
    for (const auto& [y, d] : by.terms()) {
        const Word word = reduced_word(y);
        for (const auto& [x, c] : ay.terms()) {
            AffineWeylElement z = x;
            for (int i : word) z = hecke_step(z, i);
            out.add_term(z, c * d);
        }
    }
    return convert_basis(out, a.basis());
}

template <Coefficient R>
HeckeElement<R> operator*(const HeckeElement<R>& a, const HeckeElement<R>& b) {
    return multiply_hecke(a, b);
}

/// Theta: k[Lambda_+] -> H, e^lambda -> Y_{e^lambda}.
HeckeElement<Fp> theta_embed(const DominantMonoidElement& a, const GroupPtr& group);

/// Views GF(p) coefficients as constants of k[T~] (torus of dimension dim = l + 1).
HeckeElement<GroupRingElement> lift_coefficients(const HeckeElement<Fp>& h, std::size_t dim);

/// Applies evaluation at the identity of T~ to every coefficient.
HeckeElement<Fp> specialize(const HeckeElement<GroupRingElement>& h);

}  // namespace affhecke
