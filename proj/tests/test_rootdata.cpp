#include <doctest.h>

#include <random>

#include "affhecke/rootdata.hpp"
#include "affhecke/weyl.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

Root root(std::vector<std::int64_t> c) { return Root{std::move(c)}; }
Coweight cw(std::vector<std::int64_t> c) { return Coweight{std::move(c)}; }

const std::vector<std::pair<char, int>> kAllTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4},
                                                     {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7},
                                                     {'E', 8}, {'F', 4}, {'G', 2}};

}  // namespace

TEST_CASE("build_root_system examples") {
    auto a1 = RootSystem::build('A', 1);
    REQUIRE(a1->positive_roots().size() == 1);
    CHECK(a1->highest_root() == root({1}));
    CHECK(a1->two_rho() == root({1}));

    auto a2 = RootSystem::build('A', 2);
    CHECK(a2->positive_roots().size() == 3);
    CHECK(a2->highest_root() == root({1, 1}));

    CHECK(RootSystem::build('G', 2)->positive_roots().size() == 6);
}

TEST_CASE("invalid type/rank pairs are rejected with the pair in the message") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'C', 1}, {'D', 3}, {'E', 5}, {'E', 9}, {'F', 3}, {'G', 3}, {'X', 2}}) {
        try {
            RootSystem::build(t, l);
            FAIL("accepted invalid type");
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            CHECK(msg.find(std::string("(") + t + ", " + std::to_string(l) + ")") != std::string::npos);
        }
    }
}

TEST_CASE("root closure agrees with the root-string oracle") {
    for (auto [t, l] : kAllTypes) {
        CAPTURE(t);
        CAPTURE(l);
        auto sys = RootSystem::build(t, l);
        std::vector<std::vector<int>> cartan(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l)));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(sys->cartan(i, j));
        const auto expected = oracle::positive_roots_by_strings(cartan);
        std::set<std::vector<std::int64_t>> got;
        for (const auto& r : sys->positive_roots()) got.insert(r.coords);
        CHECK(got == expected);
        CHECK(sys->positive_roots().size() == expected_positive_root_count(t, l));
    }
}

TEST_CASE("root system invariants") {
    for (auto [t, l] : kAllTypes) {
        CAPTURE(t);
        CAPTURE(l);
        auto sys = RootSystem::build(t, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j)
                    CHECK(sys->cartan(i, j) == 2);
                else
                    CHECK((sys->cartan(i, j) <= 0 && sys->cartan(i, j) >= -3));
            }
        // each simple root once, no duplicates
        std::set<Root> seen(sys->positive_roots().begin(), sys->positive_roots().end());
        CHECK(seen.size() == sys->positive_roots().size());
        for (int i = 1; i <= l; ++i) CHECK(seen.count(sys->simple_root(i)) == 1);
        // closed under adding a simple root whenever the sum is a root
        for (const auto& r : sys->positive_roots())
            for (int i = 1; i <= l; ++i) {
                auto s = r + sys->simple_root(i);
                if (sys->is_root(s)) CHECK(seen.count(s) == 1);
            }
        // theta maximal and dominant at the root level
        for (const auto& r : sys->positive_roots())
            for (int j = 0; j < l; ++j) CHECK(r.coords[static_cast<std::size_t>(j)] <= sys->highest_root().coords[static_cast<std::size_t>(j)]);
        for (int i = 1; i <= l; ++i) CHECK(sys->pairing(sys->simple_coroot(i), sys->highest_root()) >= 0);
        Root sum{std::vector<std::int64_t>(static_cast<std::size_t>(l), 0)};
        for (const auto& r : sys->positive_roots()) sum = sum + r;
        CHECK(sum == sys->two_rho());
        // theta^vee pairs to 2 with theta
        CHECK(sys->pairing(sys->highest_coroot(), sys->highest_root()) == 2);
    }
}

TEST_CASE("non-simply-laced conventions") {
    // cartan(i, j) = <alpha_j^vee, alpha_i>
    auto b2 = RootSystem::build('B', 2);  // alpha_2 short
    CHECK(b2->pairing(b2->simple_coroot(2), b2->simple_root(1)) == -2);
    CHECK(b2->pairing(b2->simple_coroot(1), b2->simple_root(2)) == -1);
    CHECK(b2->highest_root() == root({1, 2}));
    auto c2 = RootSystem::build('C', 2);  // alpha_2 long
    CHECK(c2->highest_root() == root({2, 1}));
    CHECK(c2->highest_coroot() == cw({1, 1}));
    auto g2 = RootSystem::build('G', 2);  // alpha_1 short
    CHECK(g2->highest_root() == root({3, 2}));
    CHECK(g2->pairing(g2->simple_coroot(1), g2->simple_root(2)) == -3);
    CHECK(RootSystem::build('E', 8)->highest_root() == root({2, 3, 4, 6, 5, 4, 3, 2}));
    CHECK(RootSystem::build('F', 4)->highest_root() == root({2, 3, 4, 2}));
}

TEST_CASE("pairing examples") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(a1->pairing(cw({1}), root({1})) == 2);
    auto a2 = RootSystem::build('A', 2);
    CHECK(a2->pairing(cw({1, 0}), root({0, 1})) == -1);
    CHECK(a2->pairing(cw({1, 1}), root({2, 2})) == 4);
    CHECK_THROWS_AS(a2->pairing(cw({1}), root({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(a2->pairing(cw({1, 0}), root({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("is_dominant examples") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(a1->is_dominant(cw({1})));
    auto a2 = RootSystem::build('A', 2);
    CHECK_FALSE(a2->is_dominant(cw({1, 0})));
    CHECK(a2->is_dominant(cw({1, 1})));
}

TEST_CASE("pairing is bilinear and dominance is closed under addition") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto [t, l] : kAllTypes) {
        auto sys = RootSystem::build(t, l);
        auto rc = [&] {
            Coweight c = Coweight::zero(static_cast<std::size_t>(l));
            for (auto& x : c.coords) x = d(rng);
            return c;
        };
        auto rr = [&] {
            Root r{std::vector<std::int64_t>(static_cast<std::size_t>(l))};
            for (auto& x : r.coords) x = d(rng);
            return r;
        };
        for (int k = 0; k < 20; ++k) {
            auto l1 = rc(), l2 = rc();
            auto b1 = rr(), b2 = rr();
            CHECK(sys->pairing(l1 + l2, b1) == sys->pairing(l1, b1) + sys->pairing(l2, b1));
            CHECK(sys->pairing(l1, b1 + b2) == sys->pairing(l1, b1) + sys->pairing(l1, b2));
        }
        // dominant coweights with coordinates in [0, 3]
        std::vector<Coweight> dom;
        const int n = l <= 4 ? l : 0;
        std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
        if (n > 0)
            for (;;) {
                Coweight lam{c};
                if (sys->is_dominant(lam)) dom.push_back(lam);
                std::size_t k = 0;
                while (k < c.size() && ++c[k] > 3) c[k++] = 0;
                if (k == c.size()) break;
            }
        for (const auto& a : dom)
            for (const auto& b : dom) CHECK(sys->is_dominant(a + b));
    }
}

TEST_CASE("positive root count equals the length of w0") {
    for (auto [t, l] : kAllTypes) {
        CAPTURE(t);
        auto g = AffineWeylGroup::create(t, l);
        CHECK(static_cast<std::size_t>(length(longest_finite_element(g))) == g->root_system().positive_roots().size());
    }
}
