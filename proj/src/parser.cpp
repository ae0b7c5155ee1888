#include "symch/parser.hpp"

#include <cctype>

namespace symch {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen,
                 lbracket, rbracket, comma, end };

struct Token {
    Tok kind;
    std::string text;
    size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
    Token cur_{Tok::end, "", 0};

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const size_t start = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::end, "", start};
            return;
        }
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            cur_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            cur_ = {Tok::integer, std::string(src_.substr(pos_, end - pos_)), start};
            pos_ = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
                ++end;
            }
            cur_ = {Tok::ident, std::string(src_.substr(pos_, end - pos_)), start};
            pos_ = end;
            return;
        }
        switch (c) {
            case '+': single(Tok::plus); return;
            case '-': single(Tok::minus); return;
            case '*': single(Tok::star); return;
            case '/': single(Tok::slash); return;
            case '^': single(Tok::caret); return;
            case '(': single(Tok::lparen); return;
            case ')': single(Tok::rparen); return;
            case '[': single(Tok::lbracket); return;
            case ']': single(Tok::rbracket); return;
            case ',': single(Tok::comma); return;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }
};

class Parser {
public:
    Parser(std::string_view src, const RingDescriptor& ring) : lex_(src), ring_(ring) {}

    Element parse() {
        Element e = expr(ring_);
        const Token& t = lex_.peek();
        if (t.kind != Tok::end) throw parse_error("trailing input after expression", t.offset);
        return e;
    }

private:
    Lexer lex_;
    const RingDescriptor& ring_;

    Token expect(Tok kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) throw parse_error("expected " + what, t.offset);
        return lex_.take();
    }

    Element expr(const RingDescriptor& ring) {
        Element acc = term(ring);
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::plus) {
                lex_.take();
                acc = acc + term(ring);
            } else if (t.kind == Tok::minus) {
                lex_.take();
                acc = acc - term(ring);
            } else {
                return acc;
            }
        }
    }

    Element term(const RingDescriptor& ring) {
        Element acc = factor(ring);
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            acc = acc * factor(ring);
        }
        return acc;
    }

    Element factor(const RingDescriptor& ring) {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return -factor(ring);
        }
        Element base = primary(ring);
        if (lex_.peek().kind == Tok::caret) {
            const Token caret = lex_.take();
            const Token e = expect(Tok::integer, "a non-negative integer exponent");
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw parse_error("exponent out of range", e.offset);
            }
            if (exp > 64) throw parse_error("exponent too large", caret.offset);
            return base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Element primary(const RingDescriptor& ring) {
        const Token t = lex_.take();
        switch (t.kind) {
            case Tok::integer: {
                BigInt num = BigInt::from_string(t.text);
                if (lex_.peek().kind == Tok::slash) {
                    lex_.take();
                    const Token d = expect(Tok::integer, "a denominator");
                    BigInt den = BigInt::from_string(d.text);
                    if (den.is_zero()) throw parse_error("zero denominator", d.offset);
                    return Element::scalar(ring, Rational(std::move(num), std::move(den)));
                }
                return Element::scalar(ring, Rational(std::move(num), BigInt(1)));
            }
            case Tok::ident:
                return identifier(ring, t);
            case Tok::lparen: {
                Element e = expr(ring);
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::lbracket: {
                Element a = expr(ring);
                expect(Tok::comma, "',' in commutator");
                Element b = expr(ring);
                expect(Tok::rbracket, "']'");
                return a * b - b * a;
            }
            default:
                throw parse_error("expected a value", t.offset);
        }
    }

    Element identifier(const RingDescriptor& ring, const Token& t) {
        if (t.text == "u" && lex_.peek().kind == Tok::lparen) {
            if (ring.kind != RingKind::upper_triangular2) {
                throw parse_error("u(p,q,r) requires the upper-triangular-2 ring", t.offset);
            }
            const RingDescriptor rat = RingDescriptor::rationals();
            lex_.take();
            Element p = expr(rat);
            expect(Tok::comma, "',' in u(p,q,r)");
            Element q = expr(rat);
            expect(Tok::comma, "',' in u(p,q,r)");
            Element r = expr(rat);
            expect(Tok::rparen, "')'");
            return Element::ut(ring, p.scalar_value(), q.scalar_value(), r.scalar_value());
        }
        // generator: prefix followed by a 1-based index
        size_t split = 0;
        while (split < t.text.size() && !std::isdigit(static_cast<unsigned char>(t.text[split]))) ++split;
        const std::string prefix = t.text.substr(0, split);
        const std::string digits = t.text.substr(split);
        if (ring.kind == RingKind::rational || ring.kind == RingKind::upper_triangular2) {
            throw parse_error("ring " + ring_kind_name(ring.kind) + " has no generators", t.offset);
        }
        if (prefix != ring.generator_prefix || digits.empty()) {
            throw parse_error("unknown generator '" + t.text + "' (expected prefix '" +
                              ring.generator_prefix + "')", t.offset);
        }
        unsigned long index = 0;
        try {
            index = std::stoul(digits);
        } catch (const std::exception&) {
            throw parse_error("generator index out of range", t.offset);
        }
        if (index < 1 || index > ring.generator_count) {
            throw parse_error("generator index " + digits + " out of range 1.." +
                              std::to_string(ring.generator_count), t.offset);
        }
        return Element::generator(ring, static_cast<unsigned>(index));
    }
};

} // namespace

Element parse_element(std::string_view src, const RingDescriptor& ring) {
    Parser p(src, ring);
    return p.parse();
}

} // namespace symch
