#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "affhecke/rootdata.hpp"

namespace affhecke {

/// Element of the finite Weyl group W0, stored as its action on the coweight
/// lattice (simple-coroot coordinates) together with its action on roots
/// (simple-root coordinates). Both are l x l row-major integer matrices.
/// Identity of the element is determined by the coweight matrix alone.
class FinitePart {
  public:
    FinitePart() = default;
    static FinitePart identity(int rank);
    /// Reflection s_beta for a root beta.
    static FinitePart reflection(const RootSystem& sys, const Root& beta);

    int rank() const { return rank_; }
    bool is_identity() const;

    Coweight act(const Coweight& lambda) const;
    Root act(const Root& beta) const;
    /// Image of the j-th simple root (1-based), without allocating a full product.
    Root image_of_simple_root(int j) const;

    FinitePart operator*(const FinitePart& other) const;

    const std::vector<std::int64_t>& coweight_matrix() const { return coweight_; }
    const std::vector<std::int64_t>& root_matrix() const { return root_; }

    bool operator==(const FinitePart& other) const { return coweight_ == other.coweight_; }
    std::strong_ordering operator<=>(const FinitePart& other) const { return coweight_ <=> other.coweight_; }

  private:
    int rank_ = 0;
    std::vector<std::int64_t> coweight_;
    std::vector<std::int64_t> root_;
};

/// An affine root (alpha, m). Positive means m > 0, or m = 0 and alpha > 0.
struct AffineRoot {
    Root alpha;
    std::int64_t m = 0;

    bool is_positive() const { return m > 0 || (m == 0 && alpha.is_positive()); }
    bool operator==(const AffineRoot&) const = default;
};

/// A word in the generators s_0, s_1, ..., s_l (letters are the indices).
using Word = std::vector<int>;

std::string to_string(const Word& w);

class AffineWeylElement;

/// The affine Weyl group W = Lambda x| W0 of a root system: immutable shared
/// data (generator matrices, theta^vee, w0) that elements point to.
class AffineWeylGroup : public std::enable_shared_from_this<AffineWeylGroup> {
  public:
    static std::shared_ptr<const AffineWeylGroup> create(RootSystemPtr sys);
    static std::shared_ptr<const AffineWeylGroup> create(char lie_type, int rank);

    const RootSystem& root_system() const { return *sys_; }
    const RootSystemPtr& root_system_ptr() const { return sys_; }
    int rank() const { return sys_->rank(); }
    /// Generator count l + 1.
    int generator_count() const { return sys_->rank() + 1; }

    /// Finite part of s_i for i in 1..l, and of s_theta for i == 0.
    const FinitePart& reflection(int i) const { return reflections_.at(static_cast<std::size_t>(i)); }
    const FinitePart& longest_finite_part() const { return w0_; }

    AffineWeylElement identity() const;
    /// s_i for i >= 1; s_0 = e^{theta^vee} s_theta, the reflection in (-theta, 1).
    AffineWeylElement generator(int i) const;
    AffineWeylElement translation(const Coweight& lambda) const;
    AffineWeylElement element(const Coweight& lambda, const FinitePart& u) const;
    /// Product of the generators in the word, left to right.
    AffineWeylElement from_word(const Word& word) const;
    /// e^lambda times the product of a word in s_1..s_l.
    AffineWeylElement from_translation_and_finite_word(const Coweight& lambda, const Word& finite_word) const;

    bool same_as(const AffineWeylGroup& other) const { return *sys_ == *other.sys_; }

  private:
    explicit AffineWeylGroup(RootSystemPtr sys);

    RootSystemPtr sys_;
    std::vector<FinitePart> reflections_;  // index 0 holds s_theta
    FinitePart w0_;
};

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

/// An element e^lambda u of W in canonical (translation, finite part) form:
/// equality is componentwise.
class AffineWeylElement {
  public:
    AffineWeylElement(GroupPtr group, Coweight translation, FinitePart finite);

    const GroupPtr& group() const { return group_; }
    const RootSystem& root_system() const { return group_->root_system(); }
    const Coweight& translation() const { return translation_; }
    const FinitePart& finite() const { return finite_; }

    bool is_identity() const { return translation_.is_zero() && finite_.is_identity(); }
    bool is_translation() const { return finite_.is_identity(); }
    bool in_finite_group() const { return translation_.is_zero(); }

    AffineWeylElement inverse() const;
    /// x * s_i without building the generator.
    AffineWeylElement times_generator(int i) const;

    /// x . (alpha, m) = (u(alpha), m - <lambda, u(alpha)>) for x = e^lambda u.
    AffineRoot act(const AffineRoot& root) const;

    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.translation_ == b.translation_ && a.finite_ == b.finite_;
    }
    friend std::strong_ordering operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
        if (auto c = a.translation_ <=> b.translation_; c != 0) return c;
        return a.finite_ <=> b.finite_;
    }

    std::size_t hash() const;

  private:
    GroupPtr group_;
    Coweight translation_;
    FinitePart finite_;
};

struct ElementHash {
    std::size_t operator()(const AffineWeylElement& x) const { return x.hash(); }
};

/// (e^lambda u)(e^mu v) = e^{lambda + u mu} (uv). Throws std::invalid_argument
/// when the factors come from different root systems.
AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y);
inline AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y) { return multiply(x, y); }

/// Number of positive affine roots sent to negative ones.
std::int64_t length(const AffineWeylElement& x);

/// l(x s_i) < l(x), tested as "x sends the i-th simple affine root to a negative root".
bool is_right_descent(const AffineWeylElement& x, int i);
bool is_left_descent(const AffineWeylElement& x, int i);

/// Canonical reduced word: repeatedly peel the smallest right descent.
Word reduced_word(const AffineWeylElement& x);

/// Canonical reduced word of the finite part u (letters in 1..l).
Word finite_reduced_word(const AffineWeylElement& x);

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every reduced word of x, sorted lexicographically. Throws LimitExceeded
/// when l(x) exceeds max_length.
std::vector<Word> all_reduced_words(const AffineWeylElement& x, std::int64_t max_length = 12);

/// Bruhat-Chevalley order by the descent recursion (lifting property).
bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w);

/// All elements of length <= N, grouped by length; each shell is sorted by
/// canonical reduced word.
struct Ball {
    std::int64_t max_length = 0;
    std::vector<std::vector<AffineWeylElement>> shells;

    std::size_t size() const;
    std::vector<std::size_t> counts() const;
    std::vector<AffineWeylElement> flatten() const;
};

/// Thrown when a ball outgrows the element budget; reports the last complete shell.
struct ResourceBoundExceeded : std::runtime_error {
    ResourceBoundExceeded(std::int64_t depth, std::size_t bound);
    std::int64_t attained_depth;
};

Ball enumerate_ball(const GroupPtr& group, std::int64_t max_length, std::size_t max_elements = 2'000'000);

/// Sort key used for deterministic output: (length, canonical reduced word).
bool canonical_less(const AffineWeylElement& a, const AffineWeylElement& b);

AffineWeylElement longest_finite_element(const GroupPtr& group);

/// Minimal-length element of x W_J, for J a set of generator indices.
AffineWeylElement min_coset_rep(const AffineWeylElement& x, const std::vector<int>& parabolic);

/// e^lambda for antidominant lambda, checked to be minimal in e^lambda W0.
/// Throws std::invalid_argument when -lambda is not dominant.
AffineWeylElement antidominant_rep(const GroupPtr& group, const Coweight& lambda);

/// The finite parabolic {1, ..., l}.
std::vector<int> finite_generators(int rank);

/// ord(s_i s_j), or 0 when it exceeds 6 (the infinite case in affine type A1).
int braid_order(const GroupPtr& group, int i, int j);

}  // namespace affhecke
