#include <doctest.h>

#include "affhecke/coeffs.hpp"
#include "oracles.hpp"

using namespace affhecke;

TEST_CASE("GF(p) axioms, exhaustively for small primes") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CAPTURE(p);
        std::vector<Fp> all;
        for (std::uint32_t v = 0; v < p; ++v) all.emplace_back(v, p);
        const Fp zero(0, p), one(1, p);
        for (auto a : all) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a + (-a) == zero);
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
            for (auto b : all) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                if (!a.is_zero() && !b.is_zero()) CHECK_FALSE((a * b).is_zero());
                for (auto c : all) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("GF(p) construction and mismatches") {
    CHECK(Fp(-1, 5).value() == 4);
    CHECK(Fp(12, 5).value() == 2);
    CHECK_THROWS_AS(Fp(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Fp(0, 3).inverse(), std::domain_error);
    CHECK(Fp(3, 7).pow(6) == Fp(1, 7));
}

TEST_CASE("group ring examples") {
    const std::size_t dim = 3;
    TorusCharacter chi{{0, 1, -2}};
    auto x = GroupRingElement::monomial(chi, Fp(1, 2));
    auto one = x.one_like();
    CHECK(one * x == x);
    CHECK(x * one == x);
    // (chi + 1)^2 = chi^2 + 1 in characteristic 2
    auto s = x + one;
    CHECK(s * s == GroupRingElement::monomial(chi + chi, Fp(1, 2)) + one);
    CHECK((s * s).terms().size() == 2);
    CHECK_THROWS_AS(x + GroupRingElement::zero(3, dim), std::invalid_argument);
    CHECK_THROWS_AS(x + GroupRingElement::zero(2, 2), std::invalid_argument);
}

TEST_CASE("group ring laws on random inputs") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int k = 0; k < 50; ++k) {
            auto a = oracle::random_group_ring(rng, p, 3), b = oracle::random_group_ring(rng, p, 3),
                 c = oracle::random_group_ring(rng, p, 3);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            for (const auto* e : {&a, &b, &c}) {
                auto prod = *e * (a + b);
                for (const auto& [chi, coeff] : prod.terms()) CHECK_FALSE(coeff.is_zero());
            }
            // single monomials are never zero divisors
            auto m = GroupRingElement::monomial(TorusCharacter{{1, -1, 2}}, Fp(1, p));
            CHECK((m * a).terms().size() == a.terms().size());
        }
    }
}

TEST_CASE("exponent overflow is reported") {
    TorusCharacter big{{std::numeric_limits<std::int64_t>::max()}};
    auto a = GroupRingElement::monomial(big, Fp(1, 3));
    CHECK_THROWS_AS(a * a, std::overflow_error);
}

TEST_CASE("specialize_at_identity") {
    auto m = GroupRingElement::monomial(TorusCharacter{{0, 4}}, Fp(3, 5));
    CHECK(specialize_at_identity(m) == Fp(3, 5));
    auto a = GroupRingElement::monomial(TorusCharacter{{1, 0}}, Fp(1, 3)) +
             GroupRingElement::monomial(TorusCharacter{{0, 1}}, Fp(2, 3));
    CHECK(specialize_at_identity(a) == Fp(0, 3));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto x = oracle::random_group_ring(rng, 5, 3), y = oracle::random_group_ring(rng, 5, 3);
        CHECK(specialize_at_identity(x * y) == specialize_at_identity(x) * specialize_at_identity(y));
        CHECK(specialize_at_identity(x + y) == specialize_at_identity(x) + specialize_at_identity(y));
    }
}

TEST_CASE("dominant monoid ring") {
    auto a1 = RootSystem::build('A', 1);
    auto e1 = DominantMonoidElement::monomial(a1, Coweight{{1}}, Fp(1, 3));
    CHECK(e1 * e1 == DominantMonoidElement::monomial(a1, Coweight{{2}}, Fp(1, 3)));
    CHECK(DominantMonoidElement::one(a1, 3) * e1 == e1);

    auto a2 = RootSystem::build('A', 2);
    auto th = DominantMonoidElement::monomial(a2, Coweight{{1, 1}}, Fp(1, 5));
    auto lhs = (th + DominantMonoidElement::one(a2, 5)) * th;
    auto rhs = DominantMonoidElement::monomial(a2, Coweight{{2, 2}}, Fp(1, 5)) + th;
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(DominantMonoidElement::monomial(a2, Coweight{{1, 0}}, Fp(1, 5)), std::invalid_argument);
    for (const auto& [lam, c] : lhs.terms()) CHECK(a2->is_dominant(lam));
}
