#pragma once

// Brute-force reference computations used only by the test suites. None of
// these route through the descent tests or closed-form counts they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/kmodule.hpp"
#include "affhecke/rootdata.hpp"
#include "affhecke/weyl.hpp"

namespace oracle {

using affhecke::AffineWeylElement;
using affhecke::Word;

/// Positive roots by the root-string algorithm: beta + alpha_i is a root iff
/// q > 0 where p - q = <alpha_i^vee, beta> and p is the length of the string
/// below beta. `cartan[i][j]` = <alpha_j^vee, alpha_i>.
inline std::set<std::vector<std::int64_t>> positive_roots_by_strings(const std::vector<std::vector<int>>& cartan) {
    const std::size_t l = cartan.size();
    std::set<std::vector<std::int64_t>> roots;
    std::vector<std::vector<std::int64_t>> layer;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<std::int64_t> e(l, 0);
        e[i] = 1;
        roots.insert(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::set<std::vector<std::int64_t>> next;
        for (const auto& beta : layer)
            for (std::size_t i = 0; i < l; ++i) {
                int p = 0;
                for (auto down = beta;;) {
                    down[i] -= 1;
                    if (!roots.count(down)) break;
                    ++p;
                }
                std::int64_t pairing = 0;  // <alpha_i^vee, beta>
                for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * cartan[j][i];
                const auto q = p - pairing;
                if (q > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (!roots.count(up)) next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        roots.insert(next.begin(), next.end());
    }
    return roots;
}

/// Word lengths of the Cayley graph: breadth-first search using only the group
/// law and equality. Returns the elements of each distance shell.
inline std::vector<std::set<AffineWeylElement>> cayley_shells(const affhecke::GroupPtr& g, int max_len) {
    std::vector<std::set<AffineWeylElement>> shells{{g->identity()}};
    std::set<AffineWeylElement> seen{g->identity()};
    for (int n = 0; n < max_len; ++n) {
        std::set<AffineWeylElement> next;
        for (const auto& x : shells.back())
            for (int i = 0; i <= g->rank(); ++i) {
                auto y = x * g->generator(i);
                if (!seen.count(y)) next.insert(y);
            }
        seen.insert(next.begin(), next.end());
        shells.push_back(std::move(next));
    }
    return shells;
}

/// Inversion count by listing affine roots (alpha, m) with |m| <= bound.
inline std::int64_t length_by_root_enumeration(const AffineWeylElement& x) {
    const auto& sys = x.root_system();
    std::int64_t bound = 1;
    for (const auto& a : sys.positive_roots()) bound = std::max(bound, std::abs(sys.pairing(x.translation(), x.finite().act(a))) + 1);
    std::int64_t count = 0;
    for (const auto& a : sys.positive_roots())
        for (const auto& alpha : {a, -a})
            for (std::int64_t m = -bound; m <= bound; ++m) {
                affhecke::AffineRoot r{alpha, m};
                if (!r.is_positive()) continue;
                if (!x.act(r).is_positive()) ++count;
            }
    return count;
}

/// u <= w iff u is the product of some subword of a reduced word of w.
inline bool bruhat_by_subwords(const AffineWeylElement& u, const AffineWeylElement& w) {
    const Word word = affhecke::reduced_word(w);
    const auto n = word.size();
    const auto& g = w.group();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AffineWeylElement p = g->identity();
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) p = p * g->generator(word[k]);
        if (p == u) return true;
    }
    return false;
}

/// Y_x Y_y by rewriting along the lexicographically last reduced word of y,
/// deciding each step by comparing lengths.
inline AffineWeylElement hecke_basis_product(const AffineWeylElement& x, const AffineWeylElement& y) {
    const auto words = affhecke::all_reduced_words(y, 20);
    const auto& g = x.group();
    AffineWeylElement z = x;
    for (int i : words.back()) {
        auto zs = z * g->generator(i);
        if (affhecke::length(zs) > affhecke::length(z)) z = zs;
    }
    return z;
}

inline affhecke::GroupRingElement random_group_ring(std::mt19937_64& rng, std::uint32_t p, std::size_t dim, int max_terms = 3,
                                                     int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expo(-max_exp, max_exp);
    std::uniform_int_distribution<std::int64_t> coeff(1, p - 1 ? p - 1 : 1);
    affhecke::GroupRingElement a(p, dim);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        affhecke::TorusCharacter chi = affhecke::TorusCharacter::trivial(dim);
        for (auto& e : chi.exponents) e = expo(rng);
        a.add_term(chi, affhecke::Fp(coeff(rng), p));
    }
    return a;
}

}  // namespace oracle
