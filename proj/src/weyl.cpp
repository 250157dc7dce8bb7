#include "affhecke/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "affhecke/checked.hpp"

namespace affhecke {

namespace {

using Matrix = std::vector<std::int64_t>;

Matrix identity_matrix(int l) {
    Matrix m(static_cast<std::size_t>(l * l), 0);
    for (int i = 0; i < l; ++i) m[static_cast<std::size_t>(i * l + i)] = 1;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, int l) {
    Matrix c(static_cast<std::size_t>(l * l), 0);
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < l; ++k) {
            const auto aik = a[static_cast<std::size_t>(i * l + k)];
            if (aik == 0) continue;
            for (int j = 0; j < l; ++j)
                c[static_cast<std::size_t>(i * l + j)] = checked_add(
                    c[static_cast<std::size_t>(i * l + j)], checked_mul(aik, b[static_cast<std::size_t>(k * l + j)]));
        }
    return c;
}

std::vector<std::int64_t> matvec(const Matrix& a, const std::vector<std::int64_t>& v, int l) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < l; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < l; ++j)
            s = checked_add(s, checked_mul(a[static_cast<std::size_t>(i * l + j)], v[static_cast<std::size_t>(j)]));
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

bool negative_affine(const Root& beta, std::int64_t m) { return m < 0 || (m == 0 && beta.is_negative()); }

// Descent test inside W0: u(alpha_i) < 0.
bool finite_descent(const FinitePart& u, int i) { return u.image_of_simple_root(i).is_negative(); }

}  // namespace

std::string to_string(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// FinitePart

FinitePart FinitePart::identity(int rank) {
    FinitePart f;
    f.rank_ = rank;
    f.coweight_ = identity_matrix(rank);
    f.root_ = identity_matrix(rank);
    return f;
}

FinitePart FinitePart::reflection(const RootSystem& sys, const Root& beta) {
    const int l = sys.rank();
    const Coweight beta_vee = sys.coroot(beta);
    FinitePart f = identity(l);
    for (int j = 1; j <= l; ++j) {
        // s_beta(alpha_j^vee) = alpha_j^vee - <alpha_j^vee, beta> beta^vee
        const auto a = sys.pairing(sys.simple_coroot(j), beta);
        // s_beta(alpha_j) = alpha_j - <beta^vee, alpha_j> beta
        const auto b = sys.pairing(beta_vee, sys.simple_root(j));
        for (int i = 0; i < l; ++i) {
            const auto idx = static_cast<std::size_t>(i * l + (j - 1));
            f.coweight_[idx] = checked_sub(f.coweight_[idx], checked_mul(a, beta_vee.coords[static_cast<std::size_t>(i)]));
            f.root_[idx] = checked_sub(f.root_[idx], checked_mul(b, beta.coords[static_cast<std::size_t>(i)]));
        }
    }
    return f;
}

bool FinitePart::is_identity() const { return coweight_ == identity_matrix(rank_); }

Coweight FinitePart::act(const Coweight& lambda) const {
    if (lambda.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("coweight dimension mismatch");
    return Coweight{matvec(coweight_, lambda.coords, rank_)};
}

Root FinitePart::act(const Root& beta) const {
    if (beta.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("root dimension mismatch");
    return Root{matvec(root_, beta.coords, rank_)};
}

Root FinitePart::image_of_simple_root(int j) const {
    Root r{std::vector<std::int64_t>(static_cast<std::size_t>(rank_))};
    for (int i = 0; i < rank_; ++i) r.coords[static_cast<std::size_t>(i)] = root_[static_cast<std::size_t>(i * rank_ + j - 1)];
    return r;
}

FinitePart FinitePart::operator*(const FinitePart& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("finite Weyl group rank mismatch");
    FinitePart f;
    f.rank_ = rank_;
    f.coweight_ = matmul(coweight_, other.coweight_, rank_);
    f.root_ = matmul(root_, other.root_, rank_);
    return f;
}

// ---------------------------------------------------------------------------
// AffineWeylGroup

GroupPtr AffineWeylGroup::create(RootSystemPtr sys) {
    return std::shared_ptr<const AffineWeylGroup>(new AffineWeylGroup(std::move(sys)));
}

GroupPtr AffineWeylGroup::create(char lie_type, int rank) { return create(RootSystem::build(lie_type, rank)); }

AffineWeylGroup::AffineWeylGroup(RootSystemPtr sys) : sys_(std::move(sys)) {
    const int l = sys_->rank();
    reflections_.push_back(FinitePart::reflection(*sys_, sys_->highest_root()));
    for (int i = 1; i <= l; ++i) reflections_.push_back(FinitePart::reflection(*sys_, sys_->simple_root(i)));

    // Greedy ascent inside W0 ends at the longest element.
    w0_ = FinitePart::identity(l);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 1; i <= l; ++i)
            if (!finite_descent(w0_, i)) {
                w0_ = w0_ * reflections_[static_cast<std::size_t>(i)];
                grew = true;
                break;
            }
    }
}

AffineWeylElement AffineWeylGroup::identity() const {
    return AffineWeylElement(shared_from_this(), Coweight::zero(static_cast<std::size_t>(rank())), FinitePart::identity(rank()));
}

AffineWeylElement AffineWeylGroup::generator(int i) const {
    if (i < 0 || i > rank()) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    if (i == 0) return AffineWeylElement(shared_from_this(), sys_->highest_coroot(), reflections_[0]);
    return AffineWeylElement(shared_from_this(), Coweight::zero(static_cast<std::size_t>(rank())),
                             reflections_[static_cast<std::size_t>(i)]);
}

AffineWeylElement AffineWeylGroup::translation(const Coweight& lambda) const {
    return AffineWeylElement(shared_from_this(), lambda, FinitePart::identity(rank()));
}

AffineWeylElement AffineWeylGroup::element(const Coweight& lambda, const FinitePart& u) const {
    return AffineWeylElement(shared_from_this(), lambda, u);
}

AffineWeylElement AffineWeylGroup::from_word(const Word& word) const {
    AffineWeylElement x = identity();
    for (int i : word) {
        if (i < 0 || i > rank()) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
        x = x.times_generator(i);
    }
    return x;
}

AffineWeylElement AffineWeylGroup::from_translation_and_finite_word(const Coweight& lambda, const Word& finite_word) const {
    FinitePart u = FinitePart::identity(rank());
    for (int i : finite_word) {
        if (i < 1 || i > rank()) throw std::invalid_argument("finite generator index " + std::to_string(i) + " out of range");
        u = u * reflections_[static_cast<std::size_t>(i)];
    }
    return AffineWeylElement(shared_from_this(), lambda, u);
}

// ---------------------------------------------------------------------------
// AffineWeylElement

AffineWeylElement::AffineWeylElement(GroupPtr group, Coweight translation, FinitePart finite)
    : group_(std::move(group)), translation_(std::move(translation)), finite_(std::move(finite)) {
    const auto l = static_cast<std::size_t>(group_->rank());
    if (translation_.size() != l || finite_.rank() != group_->rank())
        throw std::invalid_argument("element data does not match rank of " + group_->root_system().name());
}

AffineWeylElement AffineWeylElement::inverse() const {
    // (e^lambda u)^{-1} = e^{-u^{-1} lambda} u^{-1}
    const Word w = finite_reduced_word(*this);
    FinitePart inv = FinitePart::identity(group_->rank());
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = inv * group_->reflection(*it);
    return AffineWeylElement(group_, -inv.act(translation_), inv);
}

AffineWeylElement AffineWeylElement::times_generator(int i) const {
    if (i < 0 || i > group_->rank()) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    const FinitePart& s = group_->reflection(i);
    if (i == 0)
        return AffineWeylElement(group_, translation_ + finite_.act(root_system().highest_coroot()), finite_ * s);
    return AffineWeylElement(group_, translation_, finite_ * s);
}

AffineRoot AffineWeylElement::act(const AffineRoot& root) const {
    Root beta = finite_.act(root.alpha);
    const auto m = checked_sub(root.m, root_system().pairing(translation_, beta));
    return AffineRoot{std::move(beta), m};
}

std::size_t AffineWeylElement::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&](std::int64_t v) { h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto c : translation_.coords) mix(c);
    for (auto c : finite_.coweight_matrix()) mix(c);
    return h;
}

// ---------------------------------------------------------------------------
// Operations

AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) {
    if (!x.group()->same_as(*y.group()))
        throw std::invalid_argument("cannot multiply elements of " + x.root_system().name() + " and " +
                                    y.root_system().name());
    return AffineWeylElement(x.group(), x.translation() + x.finite().act(y.translation()), x.finite() * y.finite());
}

std::int64_t length(const AffineWeylElement& x) {
    const RootSystem& sys = x.root_system();
    std::int64_t count = 0;
    for (const Root& alpha : sys.positive_roots()) {
        for (int sign : {1, -1}) {
            const Root gamma = sign == 1 ? alpha : -alpha;
            const Root beta = x.finite().act(gamma);
            const auto k = sys.pairing(x.translation(), beta);
            // Positive affine roots (gamma, m) have m >= m0; the image
            // (beta, m - k) is negative iff m < k, or m == k with beta < 0.
            const std::int64_t m0 = sign == 1 ? 0 : 1;
            const std::int64_t bound = k + (beta.is_negative() ? 1 : 0);
            if (bound > m0) count = checked_add(count, bound - m0);
        }
    }
    return count;
}

bool is_right_descent(const AffineWeylElement& x, int i) {
    const RootSystem& sys = x.root_system();
    if (i < 0 || i > sys.rank()) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    if (i == 0) {
        const Root beta = -x.finite().act(sys.highest_root());
        return negative_affine(beta, checked_sub(1, sys.pairing(x.translation(), beta)));
    }
    const Root beta = x.finite().image_of_simple_root(i);
    return negative_affine(beta, -sys.pairing(x.translation(), beta));
}

bool is_left_descent(const AffineWeylElement& x, int i) { return is_right_descent(x.inverse(), i); }

Word reduced_word(const AffineWeylElement& x) {
    Word w;
    AffineWeylElement y = x;
    const int n = y.group()->generator_count();
    while (!y.is_identity()) {
        int i = 0;
        while (i < n && !is_right_descent(y, i)) ++i;
        if (i == n) throw std::logic_error("non-identity element without a right descent");
        w.push_back(i);
        y = y.times_generator(i);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Word finite_reduced_word(const AffineWeylElement& x) {
    Word w;
    FinitePart u = x.finite();
    const int l = x.group()->rank();
    while (!u.is_identity()) {
        int i = 1;
        while (i <= l && !finite_descent(u, i)) ++i;
        if (i > l) throw std::logic_error("non-identity finite element without a descent");
        w.push_back(i);
        u = u * x.group()->reflection(i);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

namespace {

void collect_words(const AffineWeylElement& x, Word& suffix, std::vector<Word>& out) {
    if (x.is_identity()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    for (int i = 0; i < x.group()->generator_count(); ++i) {
        if (!is_right_descent(x, i)) continue;
        suffix.push_back(i);
        collect_words(x.times_generator(i), suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<Word> all_reduced_words(const AffineWeylElement& x, std::int64_t max_length) {
    const auto len = length(x);
    if (len > max_length)
        throw LimitExceeded("element of length " + std::to_string(len) + " exceeds the reduced-word guard of " +
                            std::to_string(max_length) + "; raise max_length to enumerate it");
    std::vector<Word> out;
    Word suffix;
    collect_words(x, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool bruhat_leq(const AffineWeylElement& u_in, const AffineWeylElement& w_in) {
    if (!u_in.group()->same_as(*w_in.group())) throw std::invalid_argument("Bruhat comparison across root systems");
    AffineWeylElement u = u_in, w = w_in;
    const int n = w.group()->generator_count();
    while (true) {
        if (u.is_identity()) return true;
        if (length(u) > length(w)) return false;
        int i = 0;
        while (i < n && !is_right_descent(w, i)) ++i;
        if (i == n) return false;  // w is the identity and u is not
        if (is_right_descent(u, i)) u = u.times_generator(i);
        w = w.times_generator(i);
    }
}

std::size_t Ball::size() const {
    std::size_t n = 0;
    for (const auto& s : shells) n += s.size();
    return n;
}

std::vector<std::size_t> Ball::counts() const {
    std::vector<std::size_t> c;
    for (const auto& s : shells) c.push_back(s.size());
    return c;
}

std::vector<AffineWeylElement> Ball::flatten() const {
    std::vector<AffineWeylElement> all;
    for (const auto& s : shells) all.insert(all.end(), s.begin(), s.end());
    return all;
}

ResourceBoundExceeded::ResourceBoundExceeded(std::int64_t depth, std::size_t bound)
    : std::runtime_error("enumeration exceeds " + std::to_string(bound) + " elements; complete through length " +
                         std::to_string(depth)),
      attained_depth(depth) {}

namespace {

void sort_canonically(std::vector<AffineWeylElement>& shell) {
    std::vector<std::pair<Word, std::size_t>> keys;
    keys.reserve(shell.size());
    for (std::size_t k = 0; k < shell.size(); ++k) keys.emplace_back(reduced_word(shell[k]), k);
    std::sort(keys.begin(), keys.end());
    std::vector<AffineWeylElement> sorted;
    sorted.reserve(shell.size());
    for (const auto& [w, k] : keys) sorted.push_back(shell[k]);
    shell = std::move(sorted);
}

}  // namespace

Ball enumerate_ball(const GroupPtr& group, std::int64_t max_length, std::size_t max_elements) {
    if (max_length < 0) throw std::invalid_argument("maximal length must be nonnegative");
    Ball ball;
    ball.max_length = max_length;
    ball.shells.push_back({group->identity()});
    std::size_t total = 1;
    for (std::int64_t n = 0; n < max_length; ++n) {
        std::unordered_set<AffineWeylElement, ElementHash> next;
        for (const auto& x : ball.shells.back())
            for (int i = 0; i < group->generator_count(); ++i)
                if (!is_right_descent(x, i)) next.insert(x.times_generator(i));
        total += next.size();
        if (total > max_elements) throw ResourceBoundExceeded(n, max_elements);
        std::vector<AffineWeylElement> shell(next.begin(), next.end());
        sort_canonically(shell);
        ball.shells.push_back(std::move(shell));
    }
    return ball;
}

bool canonical_less(const AffineWeylElement& a, const AffineWeylElement& b) {
    const auto la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return reduced_word(a) < reduced_word(b);
}

AffineWeylElement longest_finite_element(const GroupPtr& group) {
    return group->element(Coweight::zero(static_cast<std::size_t>(group->rank())), group->longest_finite_part());
}

AffineWeylElement min_coset_rep(const AffineWeylElement& x, const std::vector<int>& parabolic) {
    AffineWeylElement y = x;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i : parabolic)
            if (is_right_descent(y, i)) {
                y = y.times_generator(i);
                moved = true;
                break;
            }
    }
    return y;
}

std::vector<int> finite_generators(int rank) {
    std::vector<int> j;
    for (int i = 1; i <= rank; ++i) j.push_back(i);
    return j;
}

AffineWeylElement antidominant_rep(const GroupPtr& group, const Coweight& lambda) {
    if (!group->root_system().is_dominant(-lambda))
        throw std::invalid_argument("coweight " + to_string(lambda) + " is not antidominant");
    AffineWeylElement x = group->translation(lambda);
    if (min_coset_rep(x, finite_generators(group->rank())) != x)
        throw std::logic_error("antidominant translation is not minimal in its W0-coset");
    return x;
}

int braid_order(const GroupPtr& group, int i, int j) {
    const AffineWeylElement st = group->generator(i) * group->generator(j);
    AffineWeylElement p = st;
    for (int k = 1; k <= 6; ++k) {
        if (p.is_identity()) return k;
        p = p * st;
    }
    return 0;
}

}  // namespace affhecke
