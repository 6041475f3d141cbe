#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/number_field.hpp"
#include "hodgescreen/exact/ratfunc.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

// Context for reading scalar expressions such as "(1 + 2*t1^2)/(t2 - i)".
struct ExpressionContext {
    std::vector<std::string> params;   // variable names, in index order
    std::optional<NumberField> field;  // generator available under field->name()
};

namespace detail {

class ExpressionParser {
public:
    using Value = RatFunc<NfElem>;

    ExpressionParser(const std::string& text, const ExpressionContext& ctx) : s_(text), ctx_(ctx) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError("cannot parse expression \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    Value term() {
        Value v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                Value d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Value power() {
        Value base = primary();
        if (!accept('^')) return base;
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
        if (e > 64) fail("exponent too large");
        Value r(1L);
        for (unsigned long k = 0; k < e; ++k) r = r * base;
        if (neg) {
            if (r.is_zero()) fail("zero raised to a negative power");
            r = r.inverse();
        }
        return r;
    }

    Value primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Value number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string digits = s_.substr(start, pos_ - start);
        Rational value(Integer(digits, 10));
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            const std::size_t fstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string frac = s_.substr(fstart, pos_ - fstart);
            if (!frac.empty()) {
                Integer scale = 1;
                for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
                value += Rational(Integer(frac, 10), scale);
            }
        }
        value.canonicalize();
        return Value(NfElem(value));
    }

    Value identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < ctx_.params.size(); ++i)
            if (ctx_.params[i] == name) return Value::variable(i);
        if (ctx_.field && ctx_.field->name() == name) return Value(ctx_.field->generator());
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    const std::string& s_;
    const ExpressionContext& ctx_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RatFunc<NfElem> parse_expression(const std::string& text, const ExpressionContext& ctx) {
    return detail::ExpressionParser(text, ctx).parse();
}

// Parses an expression that must evaluate to a rational number.
inline Rational parse_rational_expression(const std::string& text) {
    const ExpressionContext ctx;
    const auto v = parse_expression(text, ctx);
    if (!v.is_constant()) throw SchemaError("expression \"" + text + "\" is not a rational constant");
    const NfElem c = v.constant_value();
    if (!c.is_rational()) throw SchemaError("expression \"" + text + "\" is not rational");
    return c.rational_part();
}

// Parses an expression without parameters into an element of the field.
inline NfElem parse_field_expression(const std::string& text, const std::optional<NumberField>& field) {
    ExpressionContext ctx;
    ctx.field = field;
    const auto v = parse_expression(text, ctx);
    if (!v.is_constant()) throw SchemaError("expression \"" + text + "\" is not a constant");
    return v.constant_value();
}

} // namespace hodge
