#include "loopalg/parse.hpp"

#include <cctype>

namespace loopalg {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Tensor, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' && i + 2 < s.size() && s[i + 1] == 'x' && s[i + 2] == ')') {
            out.push_back({Tok::Tensor, "(x)", i});
            i += 3;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", i++}); continue;
            case '-': out.push_back({Tok::Minus, "-", i++}); continue;
            case '*': out.push_back({Tok::Star, "*", i++}); continue;
            case '^': out.push_back({Tok::Caret, "^", i++}); continue;
            case '(': out.push_back({Tok::LParen, "(", i++}); continue;
            case ')': out.push_back({Tok::RParen, ")", i++}); continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '/') {
                std::size_t save = i;
                ++i;
                if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                } else {
                    i = save;
                }
            }
            out.push_back({Tok::Number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '_') {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '[' ||
                    s[i] == ']' || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(i),
                         i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

struct UnknownGenerator : ParseError {
    using ParseError::ParseError;
};

// Flat factor list; interpretation against an algebra happens after parsing
// so that the two tensor slots can resolve names in different algebras.
struct Factor;
using Term = std::vector<Factor>;

struct Factor {
    bool is_scalar = false;
    std::string text;  // scalar literal or generator name
    long exponent = 1;
    std::size_t pos = 0;
    std::vector<std::pair<int, Term>> group;  // nonempty: parenthesized sum
};

struct TensorTerm {
    Term left;
    bool has_tensor = false;
    Term right;
};

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    // expr at the top level: signed tensor terms.
    std::vector<std::pair<int, TensorTerm>> parse_top() {
        std::vector<std::pair<int, TensorTerm>> out;
        int sign = 1;
        if (peek().kind == Tok::Minus) {
            sign = -1;
            ++i_;
        }
        out.emplace_back(sign, parse_tterm());
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Plus ? 1 : -1;
            ++i_;
            out.emplace_back(sign, parse_tterm());
        }
        expect(Tok::End, "end of input");
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError("expected " + std::string(what) + " at position " +
                                 std::to_string(peek().pos),
                             peek().pos);
        ++i_;
    }

    TensorTerm parse_tterm() {
        TensorTerm t;
        t.left = parse_term();
        if (peek().kind == Tok::Tensor) {
            ++i_;
            t.has_tensor = true;
            t.right = parse_term();
        }
        return t;
    }

    Term parse_term() {
        Term t;
        parse_factor_into(t);
        while (peek().kind == Tok::Star) {
            ++i_;
            parse_factor_into(t);
        }
        return t;
    }

    void parse_factor_into(Term& t) {
        const Token& tok = peek();
        if (tok.kind == Tok::Number) {
            ++i_;
            Factor f{true, tok.text, 1, tok.pos};
            if (peek().kind == Tok::Caret) throw ParseError(
                "scalar literals take no exponent (position " + std::to_string(peek().pos) + ")",
                peek().pos);
            t.push_back(f);
            return;
        }
        if (tok.kind == Tok::Ident) {
            ++i_;
            Factor f{false, tok.text, 1, tok.pos};
            if (peek().kind == Tok::Caret) {
                ++i_;
                long sign = 1;
                if (peek().kind == Tok::Minus) {
                    sign = -1;
                    ++i_;
                }
                const Token& e = peek();
                if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
                    throw ParseError("expected integer exponent at position " +
                                         std::to_string(e.pos),
                                     e.pos);
                ++i_;
                f.exponent = sign * std::stol(e.text);
            }
            t.push_back(f);
            return;
        }
        if (tok.kind == Tok::LParen) {
            ++i_;
            Factor f{false, "", 1, tok.pos, {}};
            int sign = 1;
            if (peek().kind == Tok::Minus) {
                sign = -1;
                ++i_;
            }
            f.group.emplace_back(sign, parse_term());
            while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = peek().kind == Tok::Plus ? 1 : -1;
                ++i_;
                f.group.emplace_back(sign, parse_term());
            }
            expect(Tok::RParen, "')'");
            if (peek().kind == Tok::Caret) {
                ++i_;
                const Token& e = peek();
                if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
                    throw ParseError("expected nonnegative integer exponent at position " +
                                         std::to_string(e.pos),
                                     e.pos);
                ++i_;
                f.exponent = std::stol(e.text);
            }
            t.push_back(f);
            return;
        }
        throw ParseError("expected scalar, generator or '(' at position " +
                             std::to_string(tok.pos),
                         tok.pos);
    }
};

Scalar scalar_from_literal(RingTag ring, const std::string& text, std::size_t pos) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar::from_int(ring, BigInt(text));
    if (ring != RingTag::Rationals)
        throw ParseError("fractional literal in a non-rational ring at position " +
                             std::to_string(pos),
                         pos);
    return Scalar::rational(BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))));
}

Element interpret_term(const PresentedAlgebra& A, const Term& t) {
    const GradedAlgebra& G = A.algebra();
    Element e = unit_element(G);
    for (const auto& f : t) {
        if (!f.group.empty()) {
            Element sum;
            for (const auto& [sign, term] : f.group) {
                Element part = interpret_term(A, term);
                if (sign < 0) part = scale(G, -Scalar::one(G.ring()), part);
                sum = add(G, sum, part);
            }
            for (long k = 0; k < f.exponent; ++k) e = mul(A, e, sum);
            continue;
        }
        if (f.is_scalar) {
            e = scale(G, scalar_from_literal(G.ring(), f.text, f.pos), e);
            continue;
        }
        std::string name = f.text;
        long exponent = f.exponent;
        if (exponent < 0) {
            name += "inv";
            exponent = -exponent;
            if (!G.index_of(name))
                throw UnknownGenerator("generator " + f.text +
                                           " has no inverse (no generator " + name +
                                           "), position " + std::to_string(f.pos),
                                       f.pos);
        }
        auto idx = G.index_of(name);
        if (!idx)
            throw UnknownGenerator("unknown generator " + name + " at position " +
                                       std::to_string(f.pos),
                                   f.pos);
        e = mul(A, e, gen_element(G, *idx, static_cast<std::uint32_t>(exponent)));
    }
    return e;
}

}  // namespace

LoopElement parse_loop_element(const LoopModel& M, const std::string& text) {
    RingTag ring = M.omega->ring();
    auto parts = Parser(text).parse_top();
    LoopElement out;
    for (const auto& [sign, tt] : parts) {
        Element left, right;
        if (tt.has_tensor) {
            left = interpret_term(*M.omega, tt.left);
            right = interpret_term(*M.base, tt.right);
        } else {
            try {
                left = interpret_term(*M.omega, tt.left);
                right = unit_element(M.base->algebra());
            } catch (const UnknownGenerator&) {
                left = unit_element(M.omega->algebra());
                right = interpret_term(*M.base, tt.left);
            }
        }
        if (sign < 0) left = scale(M.omega->algebra(), -Scalar::one(ring), left);
        out = loop_add(M, out, loop_tensor(M, left, right));
    }
    return out;
}

Element parse_element(const PresentedAlgebra& A, const std::string& text) {
    const GradedAlgebra& G = A.algebra();
    auto parts = Parser(text).parse_top();
    Element out;
    for (const auto& [sign, tt] : parts) {
        if (tt.has_tensor)
            throw ParseError("tensor separator is not allowed in a single-algebra expression", 0);
        Element e = interpret_term(A, tt.left);
        if (sign < 0) e = scale(G, -Scalar::one(G.ring()), e);
        out = add(G, out, e);
    }
    return normal_form(A, out);
}

}  // namespace loopalg
