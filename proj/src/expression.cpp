#include "affhecke/expression.hpp"

#include <cctype>
#include <functional>

namespace affhecke {

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message), position(pos) {}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                                    (s[j] == '-' && j + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[j + 1])))))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), 0, i});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            const auto digits = s.substr(i, j - i);
            if (digits.size() > 18) throw ParseError("integer literal too large", i);
            out.push_back({Tok::Int, digits, std::stoll(digits), i});
            i = j;
        } else if (std::string("[]{}(),+-*").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), 0, i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, "", 0, s.size()});
    return out;
}

class Parser {
  public:
    Parser(GroupPtr group, std::uint32_t p, const std::string& text)
        : group_(std::move(group)), p_(p), dim_(static_cast<std::size_t>(group_->rank() + 1)), toks_(lex(text)) {}

    json run() {
        const auto cmd = expect_ident("a command");
        json result;
        if (cmd.text == "mul") {
            auto x = element();
            while (!at_end()) x = x * element();
            result = to_json(x);
        } else if (cmd.text == "len") {
            result = length(element());
        } else if (cmd.text == "word") {
            result = reduced_word(element());
        } else if (cmd.text == "words") {
            result = all_reduced_words(element());
        } else if (cmd.text == "bruhat") {
            auto u = element();
            result = bruhat_leq(u, element());
        } else if (cmd.text == "hecke-mul") {
            auto h = hecke();
            while (!at_end()) h = h * hecke();
            result = hecke_json(h);
        } else if (cmd.text == "xi") {
            result = to_json(xi_forward(hecke()));
        } else if (cmd.text == "xi-inv") {
            result = hecke_json(xi_inverse(schubert()));
        } else if (cmd.text == "theta") {
            result = to_json(theta_embed(monoid(), group_));
        } else if (cmd.text == "demazure") {
            result = to_json(demazure_chain(schubert()));
        } else if (cmd.text == "pullback") {
            result = to_json(grassmannian_pullback(grassmannian()));
        } else if (cmd.text == "specialize") {
            result = to_json(specialize(schubert()));
        } else if (cmd.text == "spherical") {
            auto lambda = coweight_literal();
            result = to_json(spherical_act(lambda, schubert()));
        } else {
            throw ParseError("unknown command '" + cmd.text + "'", cmd.pos);
        }
        if (!at_end()) throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
        return result;
    }

  private:
    const Token& peek() const { return toks_[k_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool is_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
    Token next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }

    [[noreturn]] void fail(const std::string& wanted) const {
        const auto& t = peek();
        throw ParseError("expected " + wanted + (t.kind == Tok::End ? " but reached end of input" : " but found '" + t.text + "'"),
                         t.pos);
    }

    void expect_sym(const char* s) {
        if (!is_sym(s)) fail(std::string("'") + s + "'");
        next();
    }

    Token expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(what);
        return next();
    }

    std::int64_t signed_int() {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Int) fail("an integer");
        const auto v = next().value;
        return neg ? -v : v;
    }

    std::vector<std::int64_t> int_list(const char* open, const char* close) {
        expect_sym(open);
        std::vector<std::int64_t> out;
        if (is_sym(close)) {
            next();
            return out;
        }
        out.push_back(signed_int());
        while (is_sym(",")) {
            next();
            out.push_back(signed_int());
        }
        expect_sym(close);
        return out;
    }

    Coweight coweight_literal() {
        if (!is_ident("e")) fail("a coweight literal e{...}");
        next();
        const auto pos = peek().pos;
        Coweight c{int_list("{", "}")};
        if (c.size() != static_cast<std::size_t>(group_->rank()))
            throw ParseError("coweight needs " + std::to_string(group_->rank()) + " coordinates", pos);
        return c;
    }

    Word word_literal() {
        const auto pos = peek().pos;
        Word w;
        for (auto i : int_list("[", "]")) {
            if (i < 0 || i > group_->rank())
                throw ParseError("generator index " + std::to_string(i) + " out of range 0.." + std::to_string(group_->rank()), pos);
            w.push_back(static_cast<int>(i));
        }
        return w;
    }

    bool at_element() const { return is_sym("[") || is_ident("e") || is_ident("w0"); }

    AffineWeylElement element() {
        if (is_ident("w0")) {
            next();
            return longest_finite_element(group_);
        }
        if (is_ident("e")) {
            auto x = group_->translation(coweight_literal());
            if (is_sym("[")) x = x * group_->from_word(word_literal());
            return x;
        }
        if (is_sym("[")) return group_->from_word(word_literal());
        fail("an element [i,...], e{...} or w0");
    }

    // c := n | x{...} | n*x{...} | (c +- c ...)
    GroupRingElement coefficient() {
        if (is_sym("(")) {
            next();
            auto c = coefficient_sum();
            expect_sym(")");
            return c;
        }
        if (is_ident("x")) return character(Fp(1, p_));
        if (peek().kind == Tok::Int) {
            const Fp n(next().value, p_);
            if (is_sym("*") && toks_[k_ + 1].kind == Tok::Ident && toks_[k_ + 1].text == "x") {
                next();
                return character(n);
            }
            return GroupRingElement::constant(n, dim_);
        }
        fail("a coefficient");
    }

    GroupRingElement coefficient_sum() {
        GroupRingElement c = is_sym("-") ? (next(), -coefficient()) : coefficient();
        while (is_sym("+") || is_sym("-")) {
            const bool neg = next().text == "-";
            auto t = coefficient();
            c = neg ? c - t : c + t;
        }
        return c;
    }

    GroupRingElement character(Fp c) {
        next();  // x
        const auto pos = peek().pos;
        TorusCharacter chi{int_list("{", "}")};
        if (chi.size() != dim_) throw ParseError("character needs " + std::to_string(dim_) + " exponents", pos);
        uses_characters_ = true;
        return GroupRingElement::monomial(chi, c);
    }

    // [c *] followed by the basis symbol
    GroupRingElement leading_coefficient() {
        if (peek().kind == Tok::Ident && peek().text != "x") return GroupRingElement::constant(Fp(1, p_), dim_);
        auto c = coefficient();
        expect_sym("*");
        return c;
    }

    HeckeElement<GroupRingElement> hecke_term() {
        auto c = leading_coefficient();
        const auto sym = expect_ident("Y or Yt");
        if (sym.text != "Y" && sym.text != "Yt") throw ParseError("expected Y or Yt but found '" + sym.text + "'", sym.pos);
        const auto x = element();
        return sym.text == "Y" ? basis_Y(x, c) : basis_Ytilde(x, c);
    }

    HeckeElement<GroupRingElement> hecke() {
        auto h = hecke_signed();
        while (is_sym("+") || is_sym("-")) {
            const bool neg = next().text == "-";
            auto t = hecke_term();
            h = h + (neg ? GroupRingElement::constant(Fp(-1, p_), dim_) * t : t);
        }
        return h;
    }

    HeckeElement<GroupRingElement> hecke_signed() {
        if (is_sym("-")) {
            next();
            return GroupRingElement::constant(Fp(-1, p_), dim_) * hecke_term();
        }
        return hecke_term();
    }

    EquivariantClass schubert_term() {
        if (at_element()) return schubert_class(element(), GroupRingElement::constant(Fp(1, p_), dim_));
        auto c = leading_coefficient();
        const auto sym = expect_ident("O");
        if (sym.text != "O") throw ParseError("expected a class O[...] but found '" + sym.text + "'", sym.pos);
        return schubert_class(element(), c);
    }

    EquivariantClass schubert() {
        const auto minus = GroupRingElement::constant(Fp(-1, p_), dim_);
        EquivariantClass v = is_sym("-") ? (next(), minus * schubert_term()) : schubert_term();
        while (is_sym("+") || is_sym("-")) {
            const bool neg = next().text == "-";
            auto t = schubert_term();
            v = v + (neg ? minus * t : t);
        }
        return v;
    }

    EquivariantClass demazure_chain(EquivariantClass v) {
        if (at_end()) fail("an operator D<i> or D[...]");
        while (!at_end()) {
            const auto t = expect_ident("an operator D<i> or D[...]");
            if (t.text == "D") {
                v = demazure_word_apply(v, element());
                continue;
            }
            if (t.text.size() < 2 || t.text[0] != 'D' ||
                t.text.find_first_not_of("0123456789", 1) != std::string::npos)
                throw ParseError("expected an operator D<i> or D[...] but found '" + t.text + "'", t.pos);
            const int i = std::stoi(t.text.substr(1));
            if (i > group_->rank()) throw ParseError("operator index " + std::to_string(i) + " out of range", t.pos);
            v = demazure_apply(v, i);
        }
        return v;
    }

    template <class F>
    void coweight_sum(F&& add) {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        while (true) {
            GroupRingElement c = GroupRingElement::constant(Fp(1, p_), dim_);
            if (!is_ident("e")) {
                c = coefficient();
                expect_sym("*");
            }
            const auto lambda = coweight_literal();
            add(lambda, neg ? -c : c);
            if (!(is_sym("+") || is_sym("-"))) break;
            neg = next().text == "-";
        }
    }

    DominantMonoidElement monoid() {
        DominantMonoidElement m(group_->root_system_ptr(), p_);
        coweight_sum([&](const Coweight& lambda, const GroupRingElement& c) {
            if (!group_->root_system().is_dominant(lambda))
                throw std::invalid_argument("theta needs dominant coweights; " + to_string(lambda) + " is not dominant");
            for (const auto& [chi, a] : c.terms()) {
                if (chi != TorusCharacter::trivial(dim_)) throw std::invalid_argument("theta takes GF(p) coefficients only");
                m.add_term(lambda, a);
            }
        });
        return m;
    }

    GrassmannianVector grassmannian() {
        GrassmannianVector g(group_);
        coweight_sum([&](const Coweight& lambda, const GroupRingElement& c) { g.add_term(lambda, c); });
        return g;
    }

    json hecke_json(const HeckeElement<GroupRingElement>& h) const {
        return uses_characters_ ? to_json(h) : to_json(specialize(h));
    }

    GroupPtr group_;
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<Token> toks_;
    std::size_t k_ = 0;
    bool uses_characters_ = false;
};

}  // namespace

json evaluate_expression(const GroupPtr& group, std::uint32_t prime, const std::string& text) {
    if (!is_prime(prime)) throw std::invalid_argument("field characteristic " + std::to_string(prime) + " is not prime");
    return Parser(group, prime, text).run();
}

}  // namespace affhecke
