#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affhecke/kmodule.hpp"
#include "affhecke/serialize.hpp"

namespace affhecke {

struct CheckReport {
    std::string check;
    std::size_t instances = 0;
    /// Counterexamples: inputs and both sides, serialized.
    std::vector<json> failures;
    double elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

json to_json(const CheckReport& r);

struct CheckOptions {
    std::uint32_t prime = 3;
    /// Main truncation: word/element length for the suite's quantifier.
    std::int64_t max_length = 4;
    /// Length bound on the basis classes operators are tested on; negative picks a per-suite default.
    std::int64_t class_length = -1;
    /// Bound on simple-coroot coordinates for coweight families.
    std::int64_t coord_bound = 2;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    /// Recording stops after this many counterexamples; counting continues.
    std::size_t failure_cap = 10;
    DemazureRule rule = demazure_basis_rule;
};

/// Inversions counted by walking affine roots, against l(e^lambda) and <lambda, 2 rho>.
CheckReport check_length_formula(const GroupPtr& group, const CheckOptions& opt);
/// D_i^2 = D_i and the braid relations for finite m_ij, on classes of length <= N.
CheckReport check_braid(const GroupPtr& group, const CheckOptions& opt);
/// All reduced words of each w with l(w) <= N give the same operator.
CheckReport check_words(const GroupPtr& group, const CheckOptions& opt);
/// D_u D_v = D_{uv} when lengths add (l(u) + l(v) <= N), and D_s^2 = D_s.
CheckReport check_compose(const GroupPtr& group, const CheckOptions& opt);
/// Xi(a b) = Xi(a) b on basis pairs with l <= N and on random sparse pairs.
CheckReport check_xi(const GroupPtr& group, const CheckOptions& opt);
/// Y_{e^lambda} Y_{e^mu} = Y_{e^{lambda+mu}} on dominant coweights, and injectivity.
CheckReport check_theta(const GroupPtr& group, const CheckOptions& opt);
/// lambda -> w0 e^lambda is a bijection onto the spherical support, and the action composes.
CheckReport check_spherical(const GroupPtr& group, const CheckOptions& opt);
/// Evaluation at the identity of the torus intertwines D_i and the Hecke action.
CheckReport check_specialize(const GroupPtr& group, const CheckOptions& opt);
/// Descent-recursion Bruhat order against subword containment.
CheckReport check_bruhat_oracle(const GroupPtr& group, const CheckOptions& opt);

const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws std::invalid_argument on unknown names.
std::vector<CheckReport> run_suite(const std::string& name, const GroupPtr& group, const CheckOptions& opt);

/// A group ring element with up to `terms` terms and exponents in [-range, range].
GroupRingElement random_group_ring(std::mt19937_64& rng, std::uint32_t p, std::size_t dim, int terms = 3, int range = 2);

/// Dominant coweights with all simple-coroot coordinates in [0, bound].
std::vector<Coweight> dominant_box(const RootSystem& sys, std::int64_t bound);

}  // namespace affhecke
