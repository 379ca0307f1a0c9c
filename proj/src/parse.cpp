#include "graphdim/parse.hpp"

#include "graphdim/errors.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace graphdim {

namespace {

class Parser {
public:
    Parser(std::string_view text, int grid_m) : text_(text), grid_m_(grid_m) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    int grid_m_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr expression() {
        ExprPtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = make_sum(lhs, term());
            } else if (eat('-')) {
                lhs = make_sum(lhs, make_product(make_constant(-1.0), term()));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (eat('*')) {
                lhs = make_product(lhs, factor());
            } else if (eat('/')) {
                lhs = make_product(lhs, make_reciprocal(factor()));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr base = unary();
        if (eat('^')) {
            skip_ws();
            int n = 0;
            auto [ptr, ec] =
                std::from_chars(text_.data() + pos_, text_.data() + text_.size(), n);
            if (ec != std::errc{} || n < 1) fail("expected positive integer exponent");
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            return make_power(base, n);
        }
        return base;
    }

    ExprPtr unary() {
        if (eat('-')) return make_product(make_constant(-1.0), unary());
        return primary();
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        fail("expected a number, name, or '('");
    }

    ExprPtr number() {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc{}) fail("bad numeric literal");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return make_constant(v);
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    double number_arg() {
        skip_ws();
        double v = 0.0;
        bool neg = eat('-');
        skip_ws();
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc{}) fail("expected a numeric argument");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return neg ? -v : v;
    }

    ExprPtr name() {
        const std::string id = identifier();
        if (id == "x") return make_linear(1.0, 0.0);
        if (!eat('(')) fail("expected '(' after '" + id + "'");
        ExprPtr result;
        try {
            result = call(id);
        } catch (const EvalError& e) {
            fail(e.what());
        }
        if (!eat(')')) fail("expected ')'");
        return result;
    }

    ExprPtr call(const std::string& id) {
        if (id == "weier") {
            const double a = number_arg();
            if (!eat(',')) fail("weier needs (a,b[,N])");
            const int b = static_cast<int>(number_arg());
            int terms = default_weierstrass_terms(b < 2 ? 2 : b, grid_m_);
            if (eat(',')) terms = static_cast<int>(number_arg());
            return make_weierstrass(a, b, terms);
        }
        if (id == "takagi") {
            int terms = default_takagi_terms(grid_m_);
            if (peek() != ')') terms = static_cast<int>(number_arg());
            return make_takagi(terms);
        }
        if (id == "peano_x") {
            int digits = default_peano_digits(grid_m_);
            if (peek() != ')') digits = static_cast<int>(number_arg());
            return make_peano_x(digits);
        }
        if (id == "cantor_ext") {
            ExprPtr inner = expression();
            if (!eat(',')) fail("cantor_ext needs (expr,ratio[,depth])");
            const double ratio = number_arg();
            int depth = default_cantor_depth(grid_m_);
            if (eat(',')) depth = static_cast<int>(number_arg());
            return make_cantor_extension(inner, ratio, depth);
        }
        if (id == "fixture") {
            const double beta = number_arg();
            return dimension_fixture(beta, grid_m_);
        }
        fail("unknown function '" + id + "'");
    }
};

} // namespace

ExprPtr parse_expression(std::string_view text, int grid_m) {
    return Parser(text, grid_m).parse();
}

} // namespace graphdim
