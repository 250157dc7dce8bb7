#include "affhecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "affhecke/checked.hpp"

namespace affhecke {

bool Root::is_positive() const {
    bool nonzero = false;
    for (auto c : coords) {
        if (c < 0) return false;
        nonzero |= (c != 0);
    }
    return nonzero;
}

bool Root::is_negative() const {
    bool nonzero = false;
    for (auto c : coords) {
        if (c > 0) return false;
        nonzero |= (c != 0);
    }
    return nonzero;
}

bool Coweight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

namespace {

template <class V>
V add(const V& a, const V& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in lattice addition");
    V r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
    return r;
}

template <class V>
V scale(std::int64_t k, const V& a) {
    V r = a;
    for (auto& c : r.coords) c = checked_mul(k, c);
    return r;
}

template <class V>
std::string show(const V& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
    os << ']';
    return os.str();
}

}  // namespace

Coweight operator+(const Coweight& a, const Coweight& b) { return add(a, b); }
Coweight operator-(const Coweight& a) { return scale(-1, a); }
Coweight operator-(const Coweight& a, const Coweight& b) { return add(a, -b); }
Coweight operator*(std::int64_t k, const Coweight& a) { return scale(k, a); }
Root operator+(const Root& a, const Root& b) { return add(a, b); }
Root operator-(const Root& a) { return scale(-1, a); }
Root operator*(std::int64_t k, const Root& a) { return scale(k, a); }

std::string to_string(const Coweight& c) { return show(c); }
std::string to_string(const Root& r) { return show(r); }

std::size_t expected_positive_root_count(char t, int l) {
    const auto n = static_cast<std::size_t>(l);
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: return 0;
    }
}

namespace {

bool valid_type(char t, int l) {
    switch (t) {
        case 'A': return l >= 1;
        case 'B':
        case 'C': return l >= 2;
        case 'D': return l >= 4;
        case 'E': return l >= 6 && l <= 8;
        case 'F': return l == 4;
        case 'G': return l == 2;
        default: return false;
    }
}

// Symmetric bilinear form on the simple roots, scaled so every entry is an
// integer. Bourbaki numbering.
std::vector<std::int64_t> gram_matrix(char t, int l) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(l * l), 0);
    auto set = [&](int i, int j, std::int64_t v) {  // 1-based
        g[static_cast<std::size_t>((i - 1) * l + (j - 1))] = v;
        g[static_cast<std::size_t>((j - 1) * l + (i - 1))] = v;
    };
    switch (t) {
        case 'A':
            for (int i = 1; i <= l; ++i) set(i, i, 2);
            for (int i = 1; i < l; ++i) set(i, i + 1, -1);
            break;
        case 'B':  // alpha_l short
            for (int i = 1; i < l; ++i) set(i, i, 4);
            set(l, l, 2);
            for (int i = 1; i < l; ++i) set(i, i + 1, -2);
            break;
        case 'C':  // alpha_l long
            for (int i = 1; i < l; ++i) set(i, i, 2);
            set(l, l, 4);
            for (int i = 1; i < l; ++i) set(i, i + 1, -1);
            set(l - 1, l, -2);
            break;
        case 'D':
            for (int i = 1; i <= l; ++i) set(i, i, 2);
            for (int i = 1; i < l - 1; ++i) set(i, i + 1, -1);
            set(l - 2, l, -1);
            break;
        case 'E':
            for (int i = 1; i <= l; ++i) set(i, i, 2);
            set(1, 3, -1);
            set(2, 4, -1);
            for (int i = 3; i < l; ++i) set(i, i + 1, -1);
            break;
        case 'F':
            set(1, 1, 4);
            set(2, 2, 4);
            set(3, 3, 2);
            set(4, 4, 2);
            set(1, 2, -2);
            set(2, 3, -2);
            set(3, 4, -1);
            break;
        case 'G':  // alpha_1 short
            set(1, 1, 2);
            set(2, 2, 6);
            set(1, 2, -3);
            break;
    }
    return g;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char lie_type, int rank) {
    if (!valid_type(lie_type, rank)) {
        std::ostringstream os;
        os << "invalid root system type/rank: (" << lie_type << ", " << rank << ")";
        throw std::invalid_argument(os.str());
    }
    return std::shared_ptr<const RootSystem>(new RootSystem(lie_type, rank, gram_matrix(lie_type, rank)));
}

RootSystem::RootSystem(char type, int rank, std::vector<std::int64_t> gram_values)
    : type_(type), rank_(rank), gram_(std::move(gram_values)) {
    const int l = rank_;
    cartan_.assign(static_cast<std::size_t>(l * l), 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            // <alpha_j^vee, alpha_i> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
            const auto num = 2 * gram(i, j);
            const auto den = gram(j, j);
            if (num % den != 0) throw std::logic_error("non-integral Cartan entry");
            cartan_[static_cast<std::size_t>(i * l + j)] = num / den;
        }

    std::set<Root> seen;
    std::deque<Root> queue;
    for (int i = 1; i <= l; ++i) {
        seen.insert(simple_root(i));
        queue.push_back(simple_root(i));
    }
    while (!queue.empty()) {
        Root beta = queue.front();
        queue.pop_front();
        for (int i = 1; i <= l; ++i) {
            Root gamma = reflect(i, beta);
            if (gamma.is_positive() && seen.insert(gamma).second) queue.push_back(gamma);
        }
    }
    positive_.assign(seen.begin(), seen.end());
    auto height = [](const Root& r) { return std::accumulate(r.coords.begin(), r.coords.end(), std::int64_t{0}); };
    std::stable_sort(positive_.begin(), positive_.end(),
                     [&](const Root& a, const Root& b) { return height(a) < height(b); });

    if (positive_.size() != expected_positive_root_count(type_, rank_))
        throw std::logic_error("positive root closure produced the wrong count for " + name());

    // The highest root dominates every positive root coordinatewise.
    highest_ = positive_.back();
    for (const auto& r : positive_)
        for (int j = 0; j < l; ++j)
            if (r.coords[static_cast<std::size_t>(j)] > highest_.coords[static_cast<std::size_t>(j)])
                throw std::logic_error("no unique highest root in " + name());
    highest_coroot_ = coroot(highest_);

    two_rho_ = Root{std::vector<std::int64_t>(static_cast<std::size_t>(l), 0)};
    for (const auto& r : positive_) two_rho_ = two_rho_ + r;
}

Root RootSystem::simple_root(int i) const {
    Root r{std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)};
    r.coords.at(static_cast<std::size_t>(i - 1)) = 1;
    return r;
}

Coweight RootSystem::simple_coroot(int i) const {
    Coweight c = Coweight::zero(static_cast<std::size_t>(rank_));
    c.coords.at(static_cast<std::size_t>(i - 1)) = 1;
    return c;
}

void RootSystem::check_dim(std::size_t n, const char* what) const {
    if (n != static_cast<std::size_t>(rank_)) {
        std::ostringstream os;
        os << what << " has dimension " << n << ", expected " << rank_ << " for " << name();
        throw std::invalid_argument(os.str());
    }
}

std::int64_t RootSystem::norm(const Root& beta) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s = checked_add(s, checked_mul(checked_mul(beta.coords[static_cast<std::size_t>(i)],
                                                       beta.coords[static_cast<std::size_t>(j)]),
                                           gram(i, j)));
    return s;
}

Coweight RootSystem::coroot(const Root& beta) const {
    check_dim(beta.size(), "root");
    const auto n = norm(beta);
    if (n <= 0) throw std::invalid_argument("coroot of a zero vector");
    Coweight c = Coweight::zero(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
        const auto num = checked_mul(beta.coords[static_cast<std::size_t>(j)], gram(j, j));
        if (num % n != 0) throw std::invalid_argument("vector " + to_string(beta) + " is not a root");
        c.coords[static_cast<std::size_t>(j)] = num / n;
    }
    return c;
}

std::int64_t RootSystem::pairing(const Coweight& lambda, const Root& beta) const {
    check_dim(lambda.size(), "coweight");
    check_dim(beta.size(), "root");
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        const auto li = lambda.coords[static_cast<std::size_t>(i)];
        if (li == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s = checked_add(s, checked_mul(checked_mul(li, beta.coords[static_cast<std::size_t>(j)]), cartan(j, i)));
    }
    return s;
}

bool RootSystem::is_dominant(const Coweight& lambda) const {
    for (int i = 1; i <= rank_; ++i)
        if (pairing(lambda, simple_root(i)) < 0) return false;
    return true;
}

bool RootSystem::is_root(const Root& beta) const {
    if (beta.size() != static_cast<std::size_t>(rank_)) return false;
    const Root& pos = beta.is_negative() ? -beta : beta;
    return std::binary_search(positive_.begin(), positive_.end(), pos, [](const Root& a, const Root& b) {
        auto ha = std::accumulate(a.coords.begin(), a.coords.end(), std::int64_t{0});
        auto hb = std::accumulate(b.coords.begin(), b.coords.end(), std::int64_t{0});
        return ha != hb ? ha < hb : a < b;
    });
}

Root RootSystem::reflect(int i, const Root& beta) const {
    check_dim(beta.size(), "root");
    // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
    std::int64_t k = 0;
    for (int j = 0; j < rank_; ++j)
        k = checked_add(k, checked_mul(beta.coords[static_cast<std::size_t>(j)], cartan(j, i - 1)));
    Root r = beta;
    r.coords.at(static_cast<std::size_t>(i - 1)) = checked_sub(r.coords[static_cast<std::size_t>(i - 1)], k);
    return r;
}

Coweight RootSystem::reflect(int i, const Coweight& lambda) const {
    // s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee
    const auto k = pairing(lambda, simple_root(i));
    Coweight r = lambda;
    r.coords.at(static_cast<std::size_t>(i - 1)) = checked_sub(r.coords[static_cast<std::size_t>(i - 1)], k);
    return r;
}

}  // namespace affhecke
