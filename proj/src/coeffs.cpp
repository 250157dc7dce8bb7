#include "affhecke/coeffs.hpp"

#include <sstream>
#include <stdexcept>

#include "affhecke/checked.hpp"

namespace affhecke {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

void require_prime(std::uint32_t p) {
    thread_local std::uint32_t last_checked = 0;
    if (p == last_checked) return;
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    last_checked = p;
}

void require_same_prime(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw std::invalid_argument("mixing coefficients from GF(" + std::to_string(a) + ") and GF(" + std::to_string(b) + ")");
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    require_prime(p);
    auto r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
}

Fp operator+(Fp a, Fp b) {
    require_same_prime(a.p_, b.p_);
    return Fp::raw(static_cast<std::uint32_t>((std::uint64_t{a.value_} + b.value_) % a.p_), a.p_);
}

Fp operator-(Fp a, Fp b) { return a + (-b); }

Fp operator*(Fp a, Fp b) {
    require_same_prime(a.p_, b.p_);
    return Fp::raw(static_cast<std::uint32_t>((std::uint64_t{a.value_} * b.value_) % a.p_), a.p_);
}

Fp Fp::pow(std::uint64_t e) const {
    Fp result = one_like(), base = *this;
    for (; e; e >>= 1) {
        if (e & 1) result = result * base;
        base = base * base;
    }
    return result;
}

Fp Fp::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(p_ - 2);
}

std::string to_string(Fp a) { return std::to_string(a.value()); }

TorusCharacter operator+(const TorusCharacter& a, const TorusCharacter& b) {
    if (a.size() != b.size()) throw std::invalid_argument("torus character dimension mismatch");
    TorusCharacter r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.exponents[i] = checked_add(r.exponents[i], b.exponents[i]);
    return r;
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) { require_prime(p); }

GroupRingElement GroupRingElement::constant(Fp c, std::size_t dim) {
    GroupRingElement a(c.prime(), dim);
    a.add_term(TorusCharacter::trivial(dim), c);
    return a;
}

GroupRingElement GroupRingElement::monomial(const TorusCharacter& chi, Fp c) {
    GroupRingElement a(c.prime(), chi.size());
    a.add_term(chi, c);
    return a;
}

Fp GroupRingElement::coefficient(const TorusCharacter& chi) const {
    auto it = terms_.find(chi);
    return it == terms_.end() ? Fp(0, p_) : it->second;
}

void GroupRingElement::add_term(const TorusCharacter& chi, Fp c) {
    if (chi.size() != dim_) throw std::invalid_argument("torus character has the wrong dimension");
    require_same_prime(p_, c.prime());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(chi, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GroupRingElement::check_compatible(const GroupRingElement& other) const {
    require_same_prime(p_, other.p_);
    if (dim_ != other.dim_) throw std::invalid_argument("group ring elements over tori of different rank");
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_compatible(b);
    GroupRingElement r = a;
    for (const auto& [chi, c] : b.terms_) r.add_term(chi, c);
    return r;
}

GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement r = a;
    for (auto& [chi, c] : r.terms_) c = -c;
    return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_compatible(b);
    GroupRingElement r = a.zero_like();
    for (const auto& [chi, c] : a.terms_)
        for (const auto& [psi, d] : b.terms_) r.add_term(chi + psi, c * d);
    return r;
}

GroupRingElement operator*(Fp c, const GroupRingElement& a) {
    require_same_prime(c.prime(), a.p_);
    GroupRingElement r = a.zero_like();
    if (c.is_zero()) return r;
    for (const auto& [chi, d] : a.terms_) r.terms_.emplace(chi, c * d);  // GF(p) has no zero divisors
    return r;
}

Fp specialize_at_identity(const GroupRingElement& a) {
    Fp s(0, a.prime());
    for (const auto& [chi, c] : a.terms()) s = s + c;
    return s;
}

std::string to_string(const GroupRingElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [chi, c] : a.terms()) {
        os << (first ? "" : " + ") << c.value() << "*x{";
        for (std::size_t i = 0; i < chi.size(); ++i) os << (i ? "," : "") << chi.exponents[i];
        os << '}';
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

DominantMonoidElement::DominantMonoidElement(RootSystemPtr sys, std::uint32_t p) : sys_(std::move(sys)), p_(p) {
    require_prime(p);
}

DominantMonoidElement DominantMonoidElement::monomial(RootSystemPtr sys, const Coweight& lambda, Fp c) {
    DominantMonoidElement a(std::move(sys), c.prime());
    a.add_term(lambda, c);
    return a;
}

DominantMonoidElement DominantMonoidElement::one(RootSystemPtr sys, std::uint32_t p) {
    const auto l = static_cast<std::size_t>(sys->rank());
    return monomial(std::move(sys), Coweight::zero(l), Fp(1, p));
}

void DominantMonoidElement::add_term(const Coweight& lambda, Fp c) {
    if (!sys_->is_dominant(lambda))
        throw std::invalid_argument("coweight " + to_string(lambda) + " is not dominant");
    require_same_prime(p_, c.prime());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DominantMonoidElement::check_compatible(const DominantMonoidElement& other) const {
    require_same_prime(p_, other.p_);
    if (!(*sys_ == *other.sys_)) throw std::invalid_argument("monoid ring elements over different root systems");
}

DominantMonoidElement operator+(const DominantMonoidElement& a, const DominantMonoidElement& b) {
    a.check_compatible(b);
    DominantMonoidElement r = a;
    for (const auto& [lambda, c] : b.terms_) r.add_term(lambda, c);
    return r;
}

DominantMonoidElement operator*(const DominantMonoidElement& a, const DominantMonoidElement& b) {
    a.check_compatible(b);
    DominantMonoidElement r(a.sys_, a.p_);
    for (const auto& [lambda, c] : a.terms_)
        for (const auto& [mu, d] : b.terms_) r.add_term(lambda + mu, c * d);
    return r;
}

}  // namespace affhecke
