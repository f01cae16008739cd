#pragma once

#include "latmut/numeric.hpp"

#include <cctype>
#include <functional>
#include <string>

namespace latmut {

// Recursive descent parser for sums of products of powers.
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' ['-'] integer]
//   primary := integer ['/' integer] | identifier | '(' expr ')'
template <class P>
class ExprParser {
public:
    struct Hooks {
        std::function<P(const std::string&)> variable;
        std::function<P(const Rat&)> constant;
        std::function<P(const P&, long)> power;
    };

    ExprParser(const std::string& text, Hooks hooks) : s_(text), h_(std::move(hooks)) {}

    P parse() {
        P v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial syntax at position " + std::to_string(i_) + ": " + what);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool starts_factor() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    std::string digits() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected a number");
        return s_.substr(b, i_ - b);
    }

    P expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        P v = term();
        if (neg) v = h_.constant(Rat(-1)) * v;
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else break;
        }
        return v;
    }

    P term() {
        P v = factor();
        while (true) {
            if (eat('*')) v = v * factor();
            else if (starts_factor()) v = v * factor();
            else break;
        }
        return v;
    }

    P factor() {
        P base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long e = to_long(Int(digits()));
            return h_.power(base, neg ? -e : e);
        }
        return base;
    }

    P primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            P v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(digits());
            Int den = 1;
            if (eat('/')) den = Int(digits());
            if (den == 0) fail("zero denominator");
            return h_.constant(make_rat(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return h_.variable(s_.substr(b, i_ - b));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    Hooks h_;
    std::size_t i_ = 0;
};

}  // namespace latmut
