#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "affhecke/rootdata.hpp"

namespace affhecke {

bool is_prime(std::uint32_t p);

/// An element of GF(p). Operations between different primes are rejected.
class Fp {
  public:
    Fp() = default;
    /// Reduces `value` modulo p. Throws std::invalid_argument if p is not prime.
    Fp(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Fp zero_like() const { return raw(0, p_); }
    Fp one_like() const { return raw(1 % p_, p_); }
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    friend Fp operator-(Fp a) { return raw(a.value_ == 0 ? 0 : a.p_ - a.value_, a.p_); }
    friend bool operator==(Fp a, Fp b) = default;

  private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp f;
        f.value_ = v;
        f.p_ = p;
        return f;
    }

    std::uint32_t value_ = 0;
    std::uint32_t p_ = 2;
};

std::string to_string(Fp a);

/// A character of the extended torus G_m x T: exponent 0 is the loop-rotation
/// factor, exponents 1..l the characters of T.
struct TorusCharacter {
    std::vector<std::int64_t> exponents;

    static TorusCharacter trivial(std::size_t dim) { return TorusCharacter{std::vector<std::int64_t>(dim, 0)}; }
    std::size_t size() const { return exponents.size(); }
    auto operator<=>(const TorusCharacter&) const = default;
};

TorusCharacter operator+(const TorusCharacter& a, const TorusCharacter& b);

/// The group ring k[T~] with k = GF(p): a finitely supported map from
/// characters to GF(p). No zero coefficient is ever stored.
class GroupRingElement {
  public:
    using Terms = std::map<TorusCharacter, Fp>;

    GroupRingElement() = default;
    GroupRingElement(std::uint32_t p, std::size_t dim);

    static GroupRingElement zero(std::uint32_t p, std::size_t dim) { return GroupRingElement(p, dim); }
    static GroupRingElement constant(Fp c, std::size_t dim);
    static GroupRingElement monomial(const TorusCharacter& chi, Fp c);

    std::uint32_t prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of chi (zero when absent).
    Fp coefficient(const TorusCharacter& chi) const;

    GroupRingElement zero_like() const { return GroupRingElement(p_, dim_); }
    GroupRingElement one_like() const { return constant(Fp(1, p_), dim_); }

    /// Adds c * chi in place, dropping the term if it cancels.
    void add_term(const TorusCharacter& chi, Fp c);

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(Fp c, const GroupRingElement& a);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) = default;

  private:
    void check_compatible(const GroupRingElement& other) const;

    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    Terms terms_;
};

/// Evaluation at the identity of T~: the sum of all coefficients.
Fp specialize_at_identity(const GroupRingElement& a);

std::string to_string(const GroupRingElement& a);

/// The monoid ring k[Lambda_+] of dominant coweights over GF(p).
class DominantMonoidElement {
  public:
    using Terms = std::map<Coweight, Fp>;

    DominantMonoidElement(RootSystemPtr sys, std::uint32_t p);
    /// c e^lambda; throws std::invalid_argument if lambda is not dominant.
    static DominantMonoidElement monomial(RootSystemPtr sys, const Coweight& lambda, Fp c);
    static DominantMonoidElement one(RootSystemPtr sys, std::uint32_t p);

    const RootSystem& root_system() const { return *sys_; }
    const RootSystemPtr& root_system_ptr() const { return sys_; }
    std::uint32_t prime() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Coweight& lambda, Fp c);

    friend DominantMonoidElement operator+(const DominantMonoidElement& a, const DominantMonoidElement& b);
    friend DominantMonoidElement operator*(const DominantMonoidElement& a, const DominantMonoidElement& b);
    friend bool operator==(const DominantMonoidElement& a, const DominantMonoidElement& b) {
        return *a.sys_ == *b.sys_ && a.p_ == b.p_ && a.terms_ == b.terms_;
    }

  private:
    void check_compatible(const DominantMonoidElement& other) const;

    RootSystemPtr sys_;
    std::uint32_t p_;
    Terms terms_;
};

/// Coefficient rings accepted by the Hecke algebra and the Schubert module.
template <class R>
concept Coefficient = std::regular<R> && requires(const R a, const R b) {
    { a + b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.one_like() } -> std::same_as<R>;
    { a.zero_like() } -> std::same_as<R>;
};

static_assert(Coefficient<Fp>);
static_assert(Coefficient<GroupRingElement>);

}  // namespace affhecke
