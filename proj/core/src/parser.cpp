#include "cartan/parser.hpp"

#include <cctype>

namespace cartan {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expression run() {
        Expression e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Expression expr() {
        Expression e = term();
        for (;;) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    Expression term() {
        Expression e = factor();
        for (;;) {
            if (accept('*')) {
                e *= factor();
            } else if (accept('/')) {
                Expression d = factor();
                if (d.is_zero()) fail("zero denominator");
                e /= d;
            } else {
                return e;
            }
        }
    }

    Expression factor() {
        // unary minus binds looser than '^': -x^2 means -(x^2)
        if (accept('-')) return -factor();
        Expression a = atom();
        if (accept('^')) {
            long e = integer();
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    Expression atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expression e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            return Expression(Gaussian(mpq_class(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
                id += s_[pos_];
                ++pos_;
            }
            if (id == "x") return Expression::variable(Coord::x);
            if (id == "y") return Expression::variable(Coord::y);
            if (id == "u1") return Expression::variable(Coord::u1);
            if (id == "u2") return Expression::variable(Coord::u2);
            if (id == "u3") return Expression::variable(Coord::u3);
            if (id == "i") return Expression::i();
            fail("unknown identifier '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(const std::string& text) { return Parser(text).run(); }

mpq_class parse_rational(const std::string& text) {
    Expression e = parse_expression(text);
    if (!e.is_constant()) throw ParseError("expected a rational literal", 0);
    Gaussian g = e.constant_value();
    if (g.im() != 0) throw ParseError("expected a real rational literal", 0);
    return g.re();
}

}  // namespace cartan
