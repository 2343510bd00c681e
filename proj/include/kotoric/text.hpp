#pragma once

// Rendering and parsing of KO elements in bracket notation. The grammar
// accepts sums of terms; a term is an optional integer coefficient times
// factors drawn from gamma^j, alpha, beta^t, e^k, brackets [(..),(..)]^s and
// classes X_{i,..}^s, with optional '*' separators and parenthesized
// exponents.

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kotoric/ko.hpp"

namespace kotoric {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- rendering ----

namespace detail {

inline std::string token_body(const KoToken& tok) {
    std::string out;
    switch (tok.kind) {
        case KoKind::Unit: break;
        case KoKind::Alpha: out = "alpha"; break;
        case KoKind::E: out = "e"; break;
        case KoKind::E2: out = "e^2"; break;
    }
    if (tok.t != 0) {
        if (!out.empty()) out += "*";
        out += "beta^" + std::to_string(tok.t);
    }
    return out;  // empty means the unit token
}

inline std::string symbol_body(const G2Symbol& sym) {
    auto vec = [](const Exponents& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    return "[" + vec(sym.I) + "," + vec(sym.J) + "]^" + std::to_string(sym.s);
}

inline void append_term(std::string& out, const Int& coeff, const std::string& body) {
    const bool neg = coeff < 0;
    Int mag = neg ? Int(-coeff) : coeff;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (body.empty()) {
        out += mag.str();
        return;
    }
    if (mag != 1) out += mag.str() + "*";
    out += body;
}

}  // namespace detail

inline std::string render(const KoElement& a) {
    std::string out;
    for (const auto& [tok, c] : a.scalar.terms()) detail::append_term(out, c, detail::token_body(tok));
    for (const auto& [sym, c] : a.reduced) detail::append_term(out, c, detail::symbol_body(sym));
    return out.empty() ? "0" : out;
}

// ---- parsing ----

namespace detail {

struct Token {
    enum Kind { Number, Ident, Punct, End } kind = End;
    std::string text;
    long long value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            cur_ = Token{};
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_ = Token{Token::Number, src_.substr(start, pos_ - start), 0};
            cur_.value = std::stoll(cur_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_ = Token{Token::Ident, src_.substr(start, pos_ - start), 0};
            return;
        }
        // UTF-8 gamma
        if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
            static_cast<unsigned char>(src_[pos_ + 1]) == 0xB3) {
            pos_ += 2;
            cur_ = Token{Token::Ident, "gamma", 0};
            return;
        }
        ++pos_;
        cur_ = Token{Token::Punct, std::string(1, c), 0};
        if (std::string("[](){},^*+-_").find(c) == std::string::npos)
            fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token cur_;
};

struct ParsedFactor {
    enum Kind { Bracket, XClass } kind = Bracket;
    Exponents I, J;        // Bracket
    std::set<int> subset;  // XClass
    int s = 0;
};

struct ParsedTerm {
    Int coeff = 1;
    int gamma = 0;
    int alpha_pow = 0;
    int beta_pow = 0;
    int e_pow = 0;
    std::vector<ParsedFactor> factors;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    std::vector<ParsedTerm> parse_sum() {
        std::vector<ParsedTerm> terms;
        Int sign = 1;
        if (punct("+"))
            lex_.take();
        else if (punct("-")) {
            lex_.take();
            sign = -1;
        }
        while (true) {
            ParsedTerm t = parse_term();
            t.coeff *= sign;
            terms.push_back(std::move(t));
            if (punct("+")) {
                lex_.take();
                sign = 1;
            } else if (punct("-")) {
                lex_.take();
                sign = -1;
            } else {
                break;
            }
        }
        if (lex_.peek().kind != Token::End) lex_.fail("trailing input");
        return terms;
    }

private:
    bool punct(const std::string& p) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
    }

    long long parse_signed_number() {
        long long sign = 1;
        if (punct("-")) {
            lex_.take();
            sign = -1;
        }
        if (lex_.peek().kind != Token::Number) lex_.fail("expected integer");
        return sign * lex_.take().value;
    }

    // '^' n  or  '^' '(' n ')'
    std::optional<long long> parse_exponent() {
        if (!punct("^")) return std::nullopt;
        lex_.take();
        if (punct("(")) {
            lex_.take();
            long long v = parse_signed_number();
            if (!punct(")")) lex_.fail("expected ')' after exponent");
            lex_.take();
            return v;
        }
        return parse_signed_number();
    }

    Exponents parse_vector() {
        if (!punct("(")) lex_.fail("expected '('");
        lex_.take();
        Exponents out;
        while (true) {
            out.push_back(static_cast<int>(parse_signed_number()));
            if (punct(",")) {
                lex_.take();
                continue;
            }
            break;
        }
        if (!punct(")")) lex_.fail("expected ')'");
        lex_.take();
        return out;
    }

    ParsedTerm parse_term() {
        ParsedTerm term;
        bool saw_factor = false;
        while (true) {
            if (punct("*")) {
                lex_.take();
                continue;
            }
            if (lex_.peek().kind == Token::Number) {
                term.coeff *= Int(lex_.take().value);
                saw_factor = true;
                continue;
            }
            if (punct("[")) {
                lex_.take();
                ParsedFactor f;
                f.kind = ParsedFactor::Bracket;
                f.I = parse_vector();
                if (!punct(",")) lex_.fail("expected ',' between bracket vectors");
                lex_.take();
                f.J = parse_vector();
                if (!punct("]")) lex_.fail("expected ']'");
                lex_.take();
                f.s = static_cast<int>(parse_exponent().value_or(0));
                if (f.I.size() != f.J.size()) lex_.fail("bracket vectors differ in length");
                term.factors.push_back(std::move(f));
                saw_factor = true;
                continue;
            }
            if (lex_.peek().kind == Token::Ident) {
                const std::string name = lex_.take().text;
                if (name == "gamma") {
                    term.gamma += static_cast<int>(parse_exponent().value_or(1));
                } else if (name == "alpha") {
                    term.alpha_pow += static_cast<int>(parse_exponent().value_or(1));
                } else if (name == "beta") {
                    term.beta_pow += static_cast<int>(parse_exponent().value_or(1));
                } else if (name == "e") {
                    term.e_pow += static_cast<int>(parse_exponent().value_or(1));
                } else if (name == "X") {
                    ParsedFactor f;
                    f.kind = ParsedFactor::XClass;
                    if (!punct("_")) lex_.fail("expected '_' after X");
                    lex_.take();
                    if (punct("{")) {
                        lex_.take();
                        while (true) {
                            f.subset.insert(static_cast<int>(parse_signed_number()));
                            if (punct(",")) {
                                lex_.take();
                                continue;
                            }
                            break;
                        }
                        if (!punct("}")) lex_.fail("expected '}'");
                        lex_.take();
                    } else {
                        f.subset.insert(static_cast<int>(parse_signed_number()));
                    }
                    f.s = static_cast<int>(parse_exponent().value_or(0));
                    term.factors.push_back(std::move(f));
                } else {
                    lex_.fail("unknown name '" + name + "'");
                }
                saw_factor = true;
                continue;
            }
            break;
        }
        if (!saw_factor) lex_.fail("expected a term");
        return term;
    }

    Lexer lex_;
};

}  // namespace detail

// Parse an element. The ambient rank is taken from m_hint when nonnegative,
// otherwise inferred from bracket lengths and X subscripts.
inline KoElement parse_ko_element(const std::string& src, int m_hint = -1) {
    detail::Parser parser(src);
    std::vector<detail::ParsedTerm> terms = parser.parse_sum();

    int m = m_hint;
    for (const auto& t : terms)
        for (const auto& f : t.factors) {
            int need = (f.kind == detail::ParsedFactor::Bracket)
                           ? static_cast<int>(f.I.size())
                           : (f.subset.empty() ? 0 : *f.subset.rbegin());
            if (f.kind == detail::ParsedFactor::Bracket) {
                if (m >= 0 && need != m)
                    throw parse_error("bracket length disagrees with ambient rank");
                m = need;
            } else if (need > m) {
                if (m_hint >= 0) throw parse_error("X subscript exceeds ambient rank");
                m = need;
            }
        }
    if (m < 0) throw parse_error("ambient rank unknown; pass --m or use bracket notation");

    KoElement out = ko_zero(m, 0);
    for (const auto& t : terms) {
        if (t.e_pow >= 3 || (t.alpha_pow > 0 && t.e_pow > 0)) continue;  // e^3 = ea = 0
        KoElement body = ko_one(m);
        for (const auto& f : t.factors) {
            KoElement piece = (f.kind == detail::ParsedFactor::Bracket)
                                  ? normalize_symbol(f.I, f.J, f.s)
                                  : g1_class(f.subset, f.s, m);
            body = ko_mul(body, piece);
        }
        KoScalar mult = KoScalar::integer(t.coeff);
        for (int i = 0; i < t.alpha_pow; ++i) mult = mult * KoScalar::alpha();
        if (t.beta_pow != 0) mult = mult * KoScalar::beta(t.beta_pow);
        if (t.e_pow == 1) mult = mult * KoScalar::e();
        if (t.e_pow == 2) mult = mult * KoScalar::e2();
        KoElement value = ko_module_action(mult, body);
        if (t.gamma != 0) value = gamma_shift(value, t.gamma);
        out = ko_add(out, value);
    }
    return out;
}

}  // namespace kotoric
