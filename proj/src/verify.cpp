#include "affhecke/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace affhecke {

namespace {

class Recorder {
  public:
    Recorder(std::string name, const CheckOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {
        report_.check = std::move(name);
    }

    void instance() { ++report_.instances; }

    template <class F>
    void expect(bool ok, F&& describe) {
        ++report_.instances;
        if (ok) return;
        ++failure_count_;
        if (report_.failures.size() < opt_.failure_cap) report_.failures.push_back(describe());
    }

    CheckReport finish() {
        const auto end = std::chrono::steady_clock::now();
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(end - start_).count();
        if (failure_count_ > report_.failures.size())
            report_.failures.push_back({{"truncated", failure_count_ - report_.failures.size()}});
        return std::move(report_);
    }

  private:
    const CheckOptions& opt_;
    std::chrono::steady_clock::time_point start_;
    CheckReport report_;
    std::size_t failure_count_ = 0;
};

std::size_t torus_dim(const GroupPtr& g) { return static_cast<std::size_t>(g->rank() + 1); }

GroupRingElement one(const GroupPtr& g, std::uint32_t p) { return GroupRingElement::constant(Fp(1, p), torus_dim(g)); }

EquivariantClass basis_class(const AffineWeylElement& w, std::uint32_t p) {
    return schubert_class(w, one(w.group(), p));
}

std::int64_t class_bound(const CheckOptions& opt, std::int64_t fallback) {
    return opt.class_length >= 0 ? opt.class_length : fallback;
}

std::vector<AffineWeylElement> ball_upto(const GroupPtr& g, std::int64_t n) { return enumerate_ball(g, n).flatten(); }

EquivariantClass random_vector(std::mt19937_64& rng, const std::vector<AffineWeylElement>& pool, std::uint32_t p,
                               int terms) {
    const auto& g = pool.front().group();
    EquivariantClass v(g);
    for (int t = 0; t < terms; ++t) v.add_term(pool[rng() % pool.size()], random_group_ring(rng, p, torus_dim(g)));
    return v;
}

HeckeElement<GroupRingElement> random_hecke(std::mt19937_64& rng, const std::vector<AffineWeylElement>& pool,
                                            std::uint32_t p, int terms) {
    const auto& g = pool.front().group();
    HeckeElement<GroupRingElement> h(g);
    for (int t = 0; t < terms; ++t) h.add_term(pool[rng() % pool.size()], random_group_ring(rng, p, torus_dim(g)));
    return h;
}

Word alternating(int i, int j, int m) {
    Word w;
    for (int k = 0; k < m; ++k) w.push_back(k % 2 ? j : i);
    return w;
}

/// Inversion count by walking the positive affine roots (beta, m) one level at a time.
std::int64_t count_inversions(const AffineWeylElement& x) {
    const auto& sys = x.root_system();
    std::int64_t count = 0;
    for (const auto& alpha : sys.positive_roots())
        for (const Root& beta : {alpha, -alpha}) {
            const auto image = x.act(AffineRoot{beta, 0});
            const auto shift = image.m;  // x.(beta, m) = (u beta, m + shift)
            for (std::int64_t m = beta.is_positive() ? 0 : 1; m + shift <= 0; ++m) {
                const AffineRoot r = x.act(AffineRoot{beta, m});
                if (!r.is_positive()) ++count;
            }
        }
    return count;
}

/// All products of subwords of `word`.
std::set<AffineWeylElement> subword_products(const GroupPtr& g, const Word& word) {
    std::set<AffineWeylElement> out;
    const std::size_t n = word.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AffineWeylElement x = g->identity();
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) x = x.times_generator(word[k]);
        out.insert(x);
    }
    return out;
}

}  // namespace

json to_json(const CheckReport& r) {
    return {{"check", r.check}, {"instances", r.instances}, {"failures", r.failures}, {"elapsed_ms", r.elapsed_ms}};
}

GroupRingElement random_group_ring(std::mt19937_64& rng, std::uint32_t p, std::size_t dim, int terms, int range) {
    GroupRingElement a(p, dim);
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(terms));
    for (int t = 0; t < n; ++t) {
        TorusCharacter chi = TorusCharacter::trivial(dim);
        for (auto& e : chi.exponents) e = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
        a.add_term(chi, Fp(static_cast<std::int64_t>(rng() % p), p));
    }
    return a;
}

std::vector<Coweight> dominant_box(const RootSystem& sys, std::int64_t bound) {
    std::vector<Coweight> out;
    const auto l = static_cast<std::size_t>(sys.rank());
    Coweight c = Coweight::zero(l);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == l) {
            if (sys.is_dominant(c)) out.push_back(c);
            return;
        }
        for (std::int64_t v = 0; v <= bound; ++v) {
            c.coords[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

CheckReport check_length_formula(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("length-formula", opt);
    const auto& sys = group->root_system();
    for (const auto& lambda : dominant_box(sys, opt.coord_bound)) {
        const auto x = group->translation(lambda);
        const auto walked = count_inversions(x);
        const auto closed = length(x);
        const auto formula = sys.pairing(lambda, sys.two_rho());
        rec.expect(walked == formula && closed == formula, [&] {
            return json{{"lambda", to_json(lambda)}, {"inversions", walked}, {"length", closed}, {"pairing_2rho", formula}};
        });
    }
    return rec.finish();
}

CheckReport check_braid(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("braid", opt);
    const auto classes = ball_upto(group, class_bound(opt, opt.max_length));
    const int n = group->generator_count();
    const std::uint32_t p = opt.prime;
    for (const auto& x : classes) {
        const auto v = basis_class(x, p);
        for (int i = 0; i < n; ++i) {
            const auto once = demazure_apply(v, i, opt.rule);
            const auto twice = demazure_apply(once, i, opt.rule);
            rec.expect(once == twice, [&] {
                return json{{"relation", "D_i^2 = D_i"}, {"i", i}, {"class", to_json(x)}, {"lhs", to_json(twice)}, {"rhs", to_json(once)}};
            });
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int m = braid_order(group, i, j);
                if (m == 0) continue;
                const auto lhs = demazure_word_apply(v, alternating(i, j, m), opt.rule);
                const auto rhs = demazure_word_apply(v, alternating(j, i, m), opt.rule);
                rec.expect(lhs == rhs, [&] {
                    return json{{"relation", "braid"}, {"i", i}, {"j", j}, {"m", m}, {"class", to_json(x)},
                                {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
                });
            }
    }
    return rec.finish();
}

CheckReport check_words(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("words", opt);
    const auto elements = ball_upto(group, opt.max_length);
    const auto classes = ball_upto(group, class_bound(opt, opt.max_length + 2));
    for (const auto& w : elements) {
        const auto words = all_reduced_words(w, opt.max_length);
        for (const auto& x : classes) {
            const auto v = basis_class(x, opt.prime);
            const auto reference = demazure_word_apply(v, words.front(), opt.rule);
            if (words.size() == 1) rec.instance();
            for (std::size_t k = 1; k < words.size(); ++k) {
                const auto other = demazure_word_apply(v, words[k], opt.rule);
                rec.expect(other == reference, [&] {
                    return json{{"w", to_json(w)}, {"class", to_json(x)}, {"word_a", words.front()}, {"word_b", words[k]},
                                {"lhs", to_json(reference)}, {"rhs", to_json(other)}};
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_compose(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("compose", opt);
    const auto ball = enumerate_ball(group, opt.max_length);
    const auto classes = ball_upto(group, class_bound(opt, opt.max_length + 1));
    const std::uint32_t p = opt.prime;
    std::mt19937_64 rng(opt.seed);

    std::vector<EquivariantClass> vectors;
    for (const auto& x : classes) vectors.push_back(basis_class(x, p));
    for (std::size_t k = 0; k < opt.samples; ++k) vectors.push_back(random_vector(rng, classes, p, 4));

    for (const auto& v : vectors)
        for (int i = 0; i < group->generator_count(); ++i) {
            const auto once = demazure_apply(v, i, opt.rule);
            const auto twice = demazure_apply(once, i, opt.rule);
            rec.expect(once == twice, [&] {
                return json{{"relation", "D_s^2 = D_s"}, {"i", i}, {"v", to_json(v)}, {"lhs", to_json(twice)}, {"rhs", to_json(once)}};
            });
        }

    const auto n = static_cast<std::size_t>(opt.max_length);
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; a + b <= n; ++b)
            for (const auto& u : ball.shells[a])
                for (const auto& w : ball.shells[b]) {
                    const auto uw = u * w;
                    if (length(uw) != static_cast<std::int64_t>(a + b)) continue;
                    for (const auto& v : vectors) {
                        const auto lhs = demazure_word_apply(demazure_word_apply(v, u, opt.rule), w, opt.rule);
                        const auto rhs = demazure_word_apply(v, uw, opt.rule);
                        rec.expect(lhs == rhs, [&] {
                            return json{{"relation", "D_u D_v = D_uv"}, {"u", to_json(u)}, {"v", to_json(w)}, {"class", to_json(v)},
                                        {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
                        });
                    }
                }
    return rec.finish();
}

CheckReport check_xi(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("xi", opt);
    const auto elements = ball_upto(group, opt.max_length);
    const std::uint32_t p = opt.prime;
    std::mt19937_64 rng(opt.seed);
    auto compare = [&](const HeckeElement<GroupRingElement>& a, const HeckeElement<GroupRingElement>& b) {
        const auto lhs = xi_forward(a * b);
        const auto rhs = hecke_act(xi_forward(a), b, opt.rule);
        rec.expect(lhs == rhs, [&] {
            return json{{"a", to_json(a)}, {"b", to_json(b)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
        });
    };
    for (const auto& u : elements)
        for (const auto& v : elements)
            compare(basis_Y(u, random_group_ring(rng, p, torus_dim(group))), basis_Y(v, random_group_ring(rng, p, torus_dim(group))));
    for (std::size_t k = 0; k < opt.samples; ++k) compare(random_hecke(rng, elements, p, 4), random_hecke(rng, elements, p, 3));
    return rec.finish();
}

CheckReport check_theta(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("theta", opt);
    const auto& sys = group->root_system_ptr();
    const auto dom = dominant_box(*sys, opt.coord_bound);
    const Fp unit(1, opt.prime);
    std::map<AffineWeylElement, Coweight> seen;
    for (const auto& lambda : dom) {
        const auto x = group->translation(lambda);
        auto [it, inserted] = seen.emplace(x, lambda);
        rec.expect(inserted, [&] { return json{{"injectivity", to_json(lambda)}, {"collides_with", to_json(it->second)}}; });
    }
    for (const auto& lambda : dom)
        for (const auto& mu : dom) {
            const auto a = DominantMonoidElement::monomial(sys, lambda, unit);
            const auto b = DominantMonoidElement::monomial(sys, mu, unit);
            const auto lhs = theta_embed(a, group) * theta_embed(b, group);
            const auto rhs = theta_embed(a * b, group);
            const bool ok = lhs == rhs && rhs == basis_Y(group->translation(lambda + mu), unit);
            rec.expect(ok, [&] {
                return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
            });
        }
    return rec.finish();
}

CheckReport check_spherical(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("spherical", opt);
    const auto& sys = group->root_system_ptr();
    const auto dom = dominant_box(*sys, opt.coord_bound);
    const std::uint32_t p = opt.prime;
    const auto w0 = longest_finite_element(group);
    std::mt19937_64 rng(opt.seed);

    std::map<AffineWeylElement, Coweight> image;
    for (const auto& lambda : dom) {
        const auto x = spherical_element(group, lambda);
        // x must be the pullback of the antidominant coset e^{w0 lambda} W0.
        GrassmannianVector g(group);
        const Coweight anti = w0.finite().act(lambda);
        g.add_term(anti, one(group, p));
        const auto pulled = grassmannian_pullback(g);
        const auto back = spherical_exponent(x);
        const bool ok = pulled == basis_class(x, p) && back && *back == lambda && image.emplace(x, lambda).second;
        rec.expect(ok, [&] {
            return json{{"lambda", to_json(lambda)}, {"element", to_json(x)}, {"pullback", to_json(pulled)},
                        {"exponent", back ? to_json(*back) : json(nullptr)}};
        });
    }

    auto random_spherical = [&] {
        EquivariantClass v(group);
        for (int t = 0; t < 3; ++t) v.add_term(spherical_element(group, dom[rng() % dom.size()]), random_group_ring(rng, p, torus_dim(group)));
        return v;
    };
    for (const auto& lambda : dom)
        for (const auto& mu : dom) {
            const auto v = random_spherical();
            const auto lhs = spherical_act(mu, spherical_act(lambda, v));
            const auto rhs = spherical_act(lambda + mu, v);
            rec.expect(lhs == rhs, [&] {
                return json{{"relation", "composition"}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"v", to_json(v)},
                            {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
            });
            const auto theta =
                lift_coefficients(theta_embed(DominantMonoidElement::monomial(sys, lambda, Fp(1, p)), group), torus_dim(group));
            const auto direct = spherical_act(lambda, v);
            const auto via_hecke = hecke_act(v, theta, opt.rule);
            rec.expect(direct == via_hecke, [&] {
                return json{{"relation", "theta action"}, {"lambda", to_json(lambda)}, {"v", to_json(v)},
                            {"lhs", to_json(direct)}, {"rhs", to_json(via_hecke)}};
            });
        }
    return rec.finish();
}

CheckReport check_specialize(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("specialize", opt);
    const auto elements = ball_upto(group, opt.max_length);
    const std::uint32_t p = opt.prime;
    std::mt19937_64 rng(opt.seed);
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const auto v = random_vector(rng, elements, p, 4);
        const auto h = random_hecke(rng, elements, p, 3);
        const auto lhs = specialize(hecke_act(v, h, opt.rule));
        const auto rhs = hecke_act(specialize(v), specialize(h), opt.rule);
        rec.expect(lhs == rhs, [&] {
            return json{{"v", to_json(v)}, {"h", to_json(h)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
        });
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(group->generator_count()));
        const auto dl = specialize(demazure_apply(v, i, opt.rule));
        const auto dr = demazure_apply(specialize(v), i, opt.rule);
        rec.expect(dl == dr, [&] {
            return json{{"v", to_json(v)}, {"i", i}, {"lhs", to_json(dl)}, {"rhs", to_json(dr)}};
        });
    }
    return rec.finish();
}

CheckReport check_bruhat_oracle(const GroupPtr& group, const CheckOptions& opt) {
    Recorder rec("bruhat-oracle", opt);
    const auto elements = ball_upto(group, opt.max_length);
    for (const auto& w : elements) {
        const auto below = subword_products(group, reduced_word(w));
        for (const auto& u : elements) {
            const bool fast = bruhat_leq(u, w);
            const bool slow = below.count(u) > 0;
            rec.expect(fast == slow, [&] {
                return json{{"u", to_json(u)}, {"w", to_json(w)}, {"recursion", fast}, {"subword", slow}};
            });
        }
    }
    return rec.finish();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"braid",      "words",      "compose",       "xi",
                                                   "theta",      "spherical",  "specialize",    "bruhat-oracle",
                                                   "length-formula"};
    return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const GroupPtr& group, const CheckOptions& opt) {
    using Fn = CheckReport (*)(const GroupPtr&, const CheckOptions&);
    static const std::map<std::string, Fn> table = {
        {"braid", check_braid},         {"words", check_words},
        {"compose", check_compose},     {"xi", check_xi},
        {"theta", check_theta},         {"spherical", check_spherical},
        {"specialize", check_specialize}, {"bruhat-oracle", check_bruhat_oracle},
        {"length-formula", check_length_formula},
    };
    std::vector<CheckReport> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(table.at(n)(group, opt));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown check suite '" + name + "'");
    out.push_back(it->second(group, opt));
    return out;
}

}  // namespace affhecke
