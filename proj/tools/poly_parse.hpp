#pragma once

// Tiny recursive-descent parser for polynomial expressions on the
// command line: sums of '*'-separated factors, each a rational constant
// ("3", "3/2"), a variable ("x" for rank 1, "x1".."xr" otherwise), or a
// power thereof ("x1^2").  Whitespace is ignored.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gkmchar/laurent.hpp"

namespace gkmchar::cli {

class PolyParser {
public:
    PolyParser(std::string text, int rank) : s_(std::move(text)), rank_(rank) {}

    Poly parse() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
    int rank_;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial syntax error at position " +
                                    std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::int64_t parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    Poly parse_sum() {
        bool neg = eat('-');
        if (!neg) (void)eat('+');
        Poly acc = parse_product();
        if (neg) acc = acc.scaled(Rat(-1));
        for (;;) {
            if (eat('+'))
                acc = acc + parse_product();
            else if (eat('-'))
                acc = acc - parse_product();
            else
                break;
        }
        return acc;
    }

    Poly parse_product() {
        Poly acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (eat('^')) {
            const std::int64_t e = parse_integer();
            if (e < 0) fail("negative exponent");
            Poly acc = Poly::constant(rank_, Rat(1));
            for (std::int64_t i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly parse_atom() {
        const char c = peek();
        if (c == '(') {
            (void)eat('(');
            Poly inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            int idx = 0;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                idx = static_cast<int>(parse_integer()) - 1;
            } else if (rank_ != 1) {
                fail("rank > 1 needs indexed variables x1..xr");
            }
            if (idx < 0 || idx >= rank_) fail("variable index out of range");
            return Poly::variable(rank_, idx);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::int64_t num = parse_integer();
            if (eat('/')) {
                const std::int64_t den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Poly::constant(rank_, make_rat(num, den));
            }
            return Poly::constant(rank_, Rat(num));
        }
        fail("expected a constant, variable, or '('");
    }
};

inline Poly parse_poly(const std::string& text, int rank) {
    return PolyParser(text, rank).parse();
}

}  // namespace gkmchar::cli
