#include "affhecke/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <system_error>

#include "affhecke/expression.hpp"

namespace affhecke {

namespace {

constexpr int kCacheVersion = 1;

std::string render(const json& j) { return j.dump(2) + "\n"; }

CommandResult failure(int code, const std::string& message) { return {code, "", message}; }

template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const ResourceBoundExceeded& e) {
        return failure(kExitResourceBound, e.what());
    } catch (const LimitExceeded& e) {
        return failure(kExitResourceBound, e.what());
    } catch (const ParseError& e) {
        return failure(kExitUsage, "parse error at column " + std::to_string(e.position + 1) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        return failure(kExitUsage, e.what());
    } catch (const std::domain_error& e) {
        return failure(kExitUsage, e.what());
    } catch (const std::overflow_error& e) {
        return failure(kExitUsage, e.what());
    } catch (const SchemaError& e) {
        return failure(kExitUsage, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return failure(kExitUsage, e.what());
    } catch (const std::ios_base::failure& e) {
        return failure(kExitUsage, e.what());
    }
}

GroupPtr make_group(const Config& c) {
    c.validate();
    return AffineWeylGroup::create(c.lie_type, c.rank);
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::string word_text(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

std::string ball_table(const Ball& ball) {
    std::ostringstream os;
    os << "length\tword\tlambda\tfinite\n";
    for (std::size_t n = 0; n < ball.shells.size(); ++n)
        for (const auto& x : ball.shells[n])
            os << n << '\t' << word_text(reduced_word(x)) << '\t' << to_string(x.translation()) << '\t'
               << word_text(finite_reduced_word(x)) << '\n';
    return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown output format '" + s + "' (expected json, dot or table)");
}

void Config::validate() const {
    RootSystem::build(lie_type, rank);
    if (!is_prime(prime)) throw std::invalid_argument("--prime " + std::to_string(prime) + " is not prime");
    if (max_length < 0) throw std::invalid_argument("--max-length must be non-negative");
}

std::filesystem::path resolve_cache_dir(const Config& config) {
    if (config.cache) return *config.cache;
    if (const char* env = std::getenv("AFFHECKE_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "affhecke";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "affhecke";
    return std::filesystem::temp_directory_path() / "affhecke";
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Ball cached_ball(const Config& config, const GroupPtr& group, bool* hit) {
    namespace fs = std::filesystem;
    const auto name = group->root_system().name();
    const fs::path dir = resolve_cache_dir(config);
    const fs::path file = dir / ("ball-" + name + "-N" + std::to_string(config.max_length) + ".json");
    if (hit) *hit = false;

    if (std::ifstream in(file); in) {
        try {
            const json doc = json::parse(in);
            const auto& h = doc.at("header");
            const auto& body = doc.at("elements");
            if (h.at("version") == kCacheVersion && h.at("type") == name && h.at("rank") == group->rank() &&
                h.at("max_length") == config.max_length && h.at("hash") == hex64(fnv1a64(body.dump()))) {
                Ball ball = ball_from_json(group, body);
                if (static_cast<std::int64_t>(ball.shells.size()) == config.max_length + 1) {
                    if (hit) *hit = true;
                    return ball;
                }
            }
        } catch (const std::exception&) {
            // unreadable or stale entry: fall through and regenerate
        }
    }

    Ball ball = enumerate_ball(group, config.max_length, config.max_elements);
    const json body = to_json(ball, *group);
    const json doc = {{"header",
                       {{"version", kCacheVersion},
                        {"type", name},
                        {"rank", group->rank()},
                        {"max_length", config.max_length},
                        {"hash", hex64(fnv1a64(body.dump()))}}},
                      {"elements", body}};

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw fs::filesystem_error("cannot create cache directory", dir, ec);
    std::mt19937_64 salt(std::random_device{}());
    const fs::path tmp = file.string() + ".tmp" + hex64(salt());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
        out << doc.dump();
        if (!out.flush()) throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
    }
    fs::rename(tmp, file, ec);
    if (ec) {
        fs::remove(tmp);
        throw fs::filesystem_error("cannot install cache file", file, ec);
    }
    return ball;
}

CommandResult cmd_enumerate(const Config& config) {
    return guarded([&] {
        const auto group = make_group(config);
        const Ball ball = cached_ball(config, group);
        if (config.format == OutputFormat::Table) return CommandResult{kExitOk, ball_table(ball), ""};
        if (config.format == OutputFormat::Dot) return failure(kExitUsage, "enumerate supports --format json or table");
        return CommandResult{kExitOk, render(to_json(ball, *group)), ""};
    });
}

CommandResult cmd_compute(const Config& config, const std::string& expression) {
    return guarded([&] {
        const auto group = make_group(config);
        const json result = evaluate_expression(group, config.prime, expression);
        if (config.format == OutputFormat::Dot) return failure(kExitUsage, "compute supports --format json or table");
        return CommandResult{kExitOk, config.format == OutputFormat::Table ? result.dump() + "\n" : render(result), ""};
    });
}

CommandResult cmd_check(const Config& config, const std::string& suite, DemazureRule rule) {
    return guarded([&] {
        const auto group = make_group(config);
        CheckOptions opt;
        opt.prime = config.prime;
        opt.max_length = config.max_length;
        opt.coord_bound = config.coord_bound;
        opt.seed = config.seed;
        opt.samples = config.samples;
        opt.rule = rule;
        const auto reports = run_suite(suite, group, opt);
        bool ok = true;
        json arr = json::array();
        std::ostringstream table;
        for (const auto& r : reports) {
            ok = ok && r.passed();
            arr.push_back(to_json(r));
            table << r.check << '\t' << (r.passed() ? "PASS" : "FAIL") << '\t' << r.instances << " instances\t"
                  << r.failures.size() << " failures\t" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
        }
        if (config.format == OutputFormat::Dot) return failure(kExitUsage, "check supports --format json or table");
        std::string out = config.format == OutputFormat::Table ? table.str()
                                                               : render(reports.size() == 1 ? arr.front() : arr);
        return CommandResult{ok ? kExitOk : kExitCheckFailed, out, ""};
    });
}

std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const Ball& ball) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> offset{0};
    for (const auto& s : ball.shells) offset.push_back(offset.back() + s.size());
    for (std::size_t n = 1; n < ball.shells.size(); ++n)
        for (std::size_t a = 0; a < ball.shells[n - 1].size(); ++a)
            for (std::size_t b = 0; b < ball.shells[n].size(); ++b)
                if (bruhat_leq(ball.shells[n - 1][a], ball.shells[n][b])) edges.emplace_back(offset[n - 1] + a, offset[n] + b);
    return edges;
}

CommandResult cmd_graph(const Config& config) {
    return guarded([&] {
        const auto group = make_group(config);
        const Ball ball = cached_ball(config, group);
        const auto nodes = ball.flatten();
        const auto edges = bruhat_covers(ball);
        if (config.format == OutputFormat::Json) {
            json jn = json::array(), je = json::array();
            for (const auto& x : nodes) jn.push_back({{"length", length(x)}, {"word", reduced_word(x)}, {"elem", to_json(x)}});
            for (auto [a, b] : edges) je.push_back({a, b});
            return CommandResult{kExitOk, render({{"nodes", jn}, {"edges", je}}), ""};
        }
        std::ostringstream os;
        if (config.format == OutputFormat::Table) {
            for (auto [a, b] : edges) os << word_text(reduced_word(nodes[a])) << " < " << word_text(reduced_word(nodes[b])) << '\n';
            return CommandResult{kExitOk, os.str(), ""};
        }
        os << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n";
        for (std::size_t k = 0; k < nodes.size(); ++k)
            os << "  n" << k << " [label=\"" << word_text(reduced_word(nodes[k])) << "\", length=" << length(nodes[k]) << "];\n";
        for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
        os << "}\n";
        return CommandResult{kExitOk, os.str(), ""};
    });
}

}  // namespace affhecke
