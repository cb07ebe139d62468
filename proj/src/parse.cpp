#include "tci/parse.hpp"

#include <cctype>
#include <optional>

namespace tci {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;        // 1-based character position
    std::string text;       // ident text
    mpz_class num;          // rational literal pieces
    mpz_class den;
    bool imaginary = false; // literal carried a tight 'i' suffix
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw input_error("syntax error at position " + std::to_string(pos) + ": " + msg);
    }

private:
    void advance() {
        while (k_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[k_]))) ++k_;
        tok_ = Token{Tok::end, k_ + 1, "", 0, 1, false};
        if (k_ >= s_.size()) return;
        char c = s_[k_];
        switch (c) {
        case '+': tok_.kind = Tok::plus;   ++k_; return;
        case '-': tok_.kind = Tok::minus;  ++k_; return;
        case '*': tok_.kind = Tok::star;   ++k_; return;
        case '^': tok_.kind = Tok::caret;  ++k_; return;
        case '(': tok_.kind = Tok::lparen; ++k_; return;
        case ')': tok_.kind = Tok::rparen; ++k_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::number;
            tok_.num = mpz_class(read_digits());
            if (k_ < s_.size() && s_[k_] == '/') {
                std::size_t save = k_;
                ++k_;
                if (k_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k_])))
                    tok_.den = mpz_class(read_digits());
                else
                    k_ = save; // '/' belonged to something else; not our token
            }
            // tight imaginary suffix: "3i", "1/2i"
            if (k_ < s_.size() && s_[k_] == 'i' &&
                (k_ + 1 >= s_.size() || !ident_char(s_[k_ + 1]))) {
                tok_.imaginary = true;
                ++k_;
            }
            return;
        }
        if (ident_start(c)) {
            tok_.kind = Tok::ident;
            std::size_t b = k_;
            while (k_ < s_.size() && ident_char(s_[k_])) ++k_;
            tok_.text = s_.substr(b, k_ - b);
            return;
        }
        fail(std::string("unexpected character '") + c + "'", k_ + 1);
    }

    std::string read_digits() {
        std::size_t b = k_;
        while (k_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k_]))) ++k_;
        return s_.substr(b, k_ - b);
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    const std::string& s_;
    std::size_t k_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, ContextPtr ctx)
        : lex_(text), ctx_(std::move(ctx)) {}

    Polynomial run() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            lex_.fail("expected '+', '-', '*', '^' or end of input", t.pos);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::plus) {
                lex_.take();
                acc += term();
            } else if (k == Tok::minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::number || e.den != 1 || e.imaginary)
                lex_.fail("expected a natural number exponent", e.pos);
            lex_.take();
            if (e.num > 4096)
                throw input_error("exponent too large at position " + std::to_string(e.pos));
            return b.pow(static_cast<unsigned>(e.num.get_ui()));
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::minus: {
            // a leading '-' only introduces a negative rational literal
            lex_.take();
            Token n = lex_.peek();
            if (n.kind != Tok::number)
                lex_.fail("'-' may only prefix a numeric literal here", t.pos);
            lex_.take();
            return literal(n, true);
        }
        case Tok::number:
            lex_.take();
            return literal(t, false);
        case Tok::ident: {
            lex_.take();
            if (t.text == "i")
                return Polynomial::constant(ctx_, GaussianRational::i());
            auto idx = ctx_->index_of(t.text);
            if (!idx)
                throw input_error("unknown variable '" + t.text + "' at position " +
                                  std::to_string(t.pos));
            return Polynomial::variable(ctx_, static_cast<std::size_t>(*idx));
        }
        case Tok::lparen: {
            lex_.take();
            Polynomial p = expr();
            Token r = lex_.peek();
            if (r.kind != Tok::rparen) lex_.fail("expected ')'", r.pos);
            lex_.take();
            return p;
        }
        default:
            lex_.fail("expected a number, 'i', a variable or '('", t.pos);
        }
    }

    Polynomial literal(const Token& t, bool negate) {
        GaussianRational v = GaussianRational::from_ratio(negate ? mpz_class(-t.num) : t.num,
                                                          t.den);
        if (t.imaginary) v *= GaussianRational::i();
        return Polynomial::constant(ctx_, v);
    }

    Lexer lex_;
    ContextPtr ctx_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
    return Parser(text, ctx).run();
}

GaussianRational parse_gaussian_rational(const std::string& text) {
    static const ContextPtr empty = VariableContext::make({});
    Polynomial p = parse_polynomial(text, empty);
    if (p.is_zero()) return GaussianRational(0);
    return p.terms().begin()->second;
}

} // namespace tci
