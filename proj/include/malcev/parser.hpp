#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "descriptor.hpp"
#include "errors.hpp"
#include "free_group.hpp"
#include "rational_function.hpp"
#include "series.hpp"
#include "twist.hpp"
#include "word_expr.hpp"

namespace malcev {

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void expect_end() {
        if (!eof()) fail("trailing input");
    }

    std::uint64_t unsigned_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        std::uint64_t value = 0;
        auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
        if (ec != std::errc() || p != s_.data() + pos_) fail("integer out of range");
        return value;
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = consume('-');
        if (!neg) consume('+');
        std::uint64_t mag = unsigned_integer();
        if (mag > static_cast<std::uint64_t>(neg ? -(INT64_MIN + 1) : INT64_MAX) + (neg ? 1 : 0))
            fail("integer out of range");
        return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        else
            fail("expected an identifier");
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

// --- words: x3^-2*x1*x2^5, 1, [a,b] sugar, parentheses ---

inline ReducedWord parse_word_expr_impl(Cursor& c);

inline ReducedWord parse_word_atom(Cursor& c) {
    if (c.consume('1')) return ReducedWord::identity();
    if (c.consume('(')) {
        ReducedWord w = parse_word_expr_impl(c);
        c.expect(')');
        return w;
    }
    if (c.consume('[')) {
        ReducedWord a = parse_word_expr_impl(c);
        c.expect(',');
        ReducedWord b = parse_word_expr_impl(c);
        c.expect(']');
        return commutator(a, b);
    }
    if (c.consume('x')) {
        std::uint64_t index = c.unsigned_integer();
        if (index == 0 || index > UINT32_MAX) c.fail("generator index must be a positive integer");
        return ReducedWord::generator(static_cast<std::uint32_t>(index));
    }
    c.fail("expected a word atom ('1', 'xN', '(', or '[')");
}

inline ReducedWord parse_word_term(Cursor& c) {
    ReducedWord base = parse_word_atom(c);
    if (c.consume('^')) return base.pow(c.integer());
    return base;
}

inline ReducedWord parse_word_expr_impl(Cursor& c) {
    ReducedWord w = parse_word_term(c);
    while (c.consume('*')) w *= parse_word_term(c);
    return w;
}

// --- field elements: (s^2+1)/(s-1), rationals as integer quotients ---

inline RationalFunction parse_field_impl(Cursor& c);

inline RationalFunction parse_field_atom(Cursor& c) {
    if (c.consume('(')) {
        RationalFunction f = parse_field_impl(c);
        c.expect(')');
        return f;
    }
    if (c.consume('s')) return RationalFunction::variable();
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
        return RationalFunction(Rational(c.digits()));
    c.fail("expected a field atom ('s', an integer, or '(')");
}

inline RationalFunction field_power(Cursor& c, const RationalFunction& base) {
    std::int64_t e = c.integer();
    RationalFunction b = e < 0 ? base.inverse() : base;
    if (e < 0) e = -e;
    RationalFunction acc(1);
    for (std::int64_t i = 0; i < e; ++i) acc *= b;
    return acc;
}

inline RationalFunction parse_field_factor(Cursor& c) {
    if (c.consume('-')) return -parse_field_factor(c);
    RationalFunction base = parse_field_atom(c);
    if (c.consume('^')) return field_power(c, base);
    return base;
}

inline RationalFunction parse_field_term(Cursor& c) {
    RationalFunction f = parse_field_factor(c);
    for (;;) {
        if (c.consume('*'))
            f *= parse_field_factor(c);
        else if (c.consume('/'))
            f = f / parse_field_factor(c);
        else
            return f;
    }
}

inline RationalFunction parse_field_impl(Cursor& c) {
    RationalFunction f = parse_field_term(c);
    for (;;) {
        if (c.consume('+'))
            f += parse_field_term(c);
        else if (c.consume('-'))
            f -= parse_field_term(c);
        else
            return f;
    }
}

// --- series: (s)*[x1] + (1/(s+1))*[x2^-1*x1] + (2)*[1] ---

inline void parse_series_term(Cursor& c, Series& acc, bool negate) {
    c.expect('(');
    RationalFunction coeff = parse_field_impl(c);
    c.expect(')');
    c.expect('*');
    c.expect('[');
    ReducedWord w = parse_word_expr_impl(c);
    c.expect(']');
    acc.add_term(w, negate ? -coeff : coeff);
}

inline Series parse_series_impl(Cursor& c) {
    Series acc;
    parse_series_term(c, acc, c.consume('-'));
    for (;;) {
        if (c.consume('+'))
            parse_series_term(c, acc, false);
        else if (c.consume('-'))
            parse_series_term(c, acc, true);
        else
            return acc;
    }
}

// --- word expressions with variables: ?x * a * [?x, a]^-1 ---

inline WordExpr parse_expr_impl(Cursor& c);

inline WordExpr parse_expr_atom(Cursor& c) {
    if (c.consume('1')) return WordExpr::one();
    if (c.consume('?')) return WordExpr::var(c.identifier());
    if (c.consume('(')) {
        WordExpr e = parse_expr_impl(c);
        c.expect(')');
        return e;
    }
    if (c.consume('[')) {
        WordExpr a = parse_expr_impl(c);
        c.expect(',');
        WordExpr b = parse_expr_impl(c);
        c.expect(']');
        return WordExpr::commutator(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')
        return WordExpr::constant(c.identifier());
    c.fail("expected an expression atom ('1', '?name', 'name', '(', or '[')");
}

inline WordExpr parse_expr_term(Cursor& c) {
    WordExpr base = parse_expr_atom(c);
    if (c.consume('^')) {
        std::int64_t e = c.integer();
        return e == -1 ? base.inverse() : base.pow(e);
    }
    return base;
}

inline WordExpr parse_expr_impl(Cursor& c) {
    WordExpr e = parse_expr_term(c);
    std::vector<WordExpr> factors{e};
    while (c.consume('*')) factors.push_back(parse_expr_term(c));
    return factors.size() == 1 ? factors.front() : WordExpr::product(factors);
}

}  // namespace detail

inline ReducedWord parse_word(std::string_view text) {
    detail::Cursor c(text);
    ReducedWord w = detail::parse_word_expr_impl(c);
    c.expect_end();
    return w;
}

inline RationalFunction parse_field_element(std::string_view text) {
    detail::Cursor c(text);
    RationalFunction f = detail::parse_field_impl(c);
    c.expect_end();
    return f;
}

inline Series parse_series(std::string_view text) {
    detail::Cursor c(text);
    Series s = detail::parse_series_impl(c);
    c.expect_end();
    return s;
}

inline WordExpr parse_word_expr(std::string_view text) {
    detail::Cursor c(text);
    WordExpr e = detail::parse_expr_impl(c);
    c.expect_end();
    return e;
}

// Descriptor grammar: comma-separated levels, N (normal) or F<l> (finite
// index l >= 2), e.g. "N,F2,N".
inline ChainDescriptor parse_descriptor(std::string_view text) {
    detail::Cursor c(text);
    std::vector<ChainLevel> levels;
    for (;;) {
        if (c.consume('N')) {
            levels.push_back(NormalLevel{});
        } else if (c.consume('F')) {
            std::uint64_t index = c.unsigned_integer();
            if (index < 2) c.fail("finite-index level requires index >= 2");
            if (index > 20) c.fail("finite-index level too large (factorial overflow)");
            levels.push_back(FiniteIndexLevel{index});
        } else {
            c.fail("expected level 'N' or 'F<l>'");
        }
        if (!c.consume(',')) break;
    }
    c.expect_end();
    if (levels.empty()) throw ParseError("descriptor must have depth >= 1", 0);
    return ChainDescriptor(std::move(levels));
}

// Weight grammar: {1: 1, 2: -2} or {}.
inline TwistMap parse_weights(std::string_view text) {
    detail::Cursor c(text);
    c.expect('{');
    std::map<std::uint32_t, std::int64_t> weights;
    if (!c.consume('}')) {
        for (;;) {
            std::uint64_t index = c.unsigned_integer();
            if (index == 0 || index > UINT32_MAX) c.fail("generator index must be positive");
            c.expect(':');
            weights[static_cast<std::uint32_t>(index)] = c.integer();
            if (!c.consume(',')) break;
        }
        c.expect('}');
    }
    c.expect_end();
    return TwistMap(std::move(weights));
}

}  // namespace malcev
