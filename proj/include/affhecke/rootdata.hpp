#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace affhecke {

/// A root in simple-root coordinates.
struct Root {
    std::vector<std::int64_t> coords;

    std::size_t size() const { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    bool is_positive() const;  // nonzero with all coordinates >= 0
    bool is_negative() const;
    auto operator<=>(const Root&) const = default;
};

/// An element of the cocharacter lattice (the coroot lattice in the simply
/// connected case), in simple-coroot coordinates.
struct Coweight {
    std::vector<std::int64_t> coords;

    static Coweight zero(std::size_t rank) { return Coweight{std::vector<std::int64_t>(rank, 0)}; }
    std::size_t size() const { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    bool is_zero() const;
    auto operator<=>(const Coweight&) const = default;
};

Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a);
Coweight operator*(std::int64_t k, const Coweight& a);
Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a);
Root operator*(std::int64_t k, const Root& a);

std::string to_string(const Coweight& c);
std::string to_string(const Root& r);

/// Root datum of a split, simply connected, simple group.
///
/// Cartan convention: cartan(i, j) = <alpha_j^vee, alpha_i>, i.e. the column
/// index runs over coroots. Every pairing in the library goes through this
/// matrix. Positive roots are generated by closing the simple roots under
/// the simple reflections, and the resulting count is checked against the
/// classical table.
class RootSystem {
  public:
    /// Valid pairs: A_{l>=1}, B_{l>=2}, C_{l>=2}, D_{l>=4}, E_{6,7,8}, F_4, G_2.
    /// Throws std::invalid_argument naming the offending pair otherwise.
    static std::shared_ptr<const RootSystem> build(char lie_type, int rank);

    char lie_type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    std::int64_t cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& highest_root() const { return highest_; }
    const Coweight& highest_coroot() const { return highest_coroot_; }
    const Root& two_rho() const { return two_rho_; }

    Root simple_root(int i) const;
    Coweight simple_coroot(int i) const;

    /// The coroot beta^vee of a root, in simple-coroot coordinates.
    Coweight coroot(const Root& beta) const;

    /// <lambda, beta> = sum_{i,j} lambda_i beta_j <alpha_i^vee, alpha_j>.
    /// Throws std::invalid_argument on a dimension mismatch.
    std::int64_t pairing(const Coweight& lambda, const Root& beta) const;

    /// <lambda, alpha_i> >= 0 for every simple root.
    bool is_dominant(const Coweight& lambda) const;

    bool is_root(const Root& beta) const;

    /// s_i applied to a root / to a coweight (i in 1..rank).
    Root reflect(int i, const Root& beta) const;
    Coweight reflect(int i, const Coweight& lambda) const;

    bool operator==(const RootSystem& other) const { return type_ == other.type_ && rank_ == other.rank_; }

  private:
    RootSystem(char type, int rank, std::vector<std::int64_t> gram);

    std::int64_t gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * rank_ + j)]; }
    std::int64_t norm(const Root& beta) const;
    void check_dim(std::size_t n, const char* what) const;

    char type_;
    int rank_;
    std::vector<std::int64_t> gram_;  // symmetric form on simple roots, integral
    std::vector<std::int64_t> cartan_;
    std::vector<Root> positive_;
    Root highest_;
    Coweight highest_coroot_;
    Root two_rho_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Number of positive roots from the classification tables.
std::size_t expected_positive_root_count(char lie_type, int rank);

}  // namespace affhecke
