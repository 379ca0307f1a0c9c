#include "graphdim/expr.hpp"

#include "graphdim/errors.hpp"
#include "graphdim/sampled.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

namespace graphdim {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw EvalError(msg);
}

template <typename Node>
ExprPtr make(Node node) {
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

} // namespace

ExprPtr make_weierstrass(double a, int b, int terms) {
    require(a > 0.0 && a < 1.0, "weierstrass: amplitude ratio a must be in (0,1)");
    require(b >= 2, "weierstrass: frequency base b must be an integer >= 2");
    require(terms >= 0 && terms <= 2000, "weierstrass: term count out of range");
    require(a * b > 1.0, "weierstrass: need a*b > 1 for nontrivial dimension");
    return make(Weierstrass{a, b, terms});
}

ExprPtr make_takagi(int terms) {
    require(terms >= 0 && terms <= 2000, "takagi: term count out of range");
    return make(Takagi{terms});
}

ExprPtr make_peano_x(int digits) {
    require(digits >= 1 && digits <= 40, "peano_x: digits must be in [1,40]");
    return make(PeanoX{digits});
}

ExprPtr make_cantor_extension(ExprPtr inner, double ratio, int depth) {
    require(ratio > 0.0 && ratio < 0.5, "cantor_ext: ratio must be in (0,1/2)");
    require(depth >= 0 && depth <= 40, "cantor_ext: depth out of range");
    require(inner != nullptr, "cantor_ext: missing inner expression");
    return make(CantorExtension{ratio, depth, std::move(inner)});
}

ExprPtr make_linear(double slope, double intercept) {
    return make(Linear{slope, intercept});
}

ExprPtr make_constant(double value) { return make(Constant{value}); }

ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs) {
    return make(Sum{std::move(lhs), std::move(rhs)});
}

ExprPtr make_product(ExprPtr lhs, ExprPtr rhs) {
    return make(Product{std::move(lhs), std::move(rhs)});
}

ExprPtr make_reciprocal(ExprPtr inner) {
    return make(Reciprocal{std::move(inner)});
}

ExprPtr make_power(ExprPtr inner, int exponent) {
    require(exponent >= 1, "power: exponent must be a positive integer");
    return make(Power{std::move(inner), exponent});
}

ExprPtr make_shift(ExprPtr inner, double offset) {
    return make(Shift{std::move(inner), offset});
}

int default_weierstrass_terms(int b, int grid_m) {
    return static_cast<int>(
        std::ceil((grid_m + 6) * std::numbers::ln2 / std::log(double(b))));
}

int default_takagi_terms(int grid_m) { return grid_m + 6; }

int default_peano_digits(int grid_m) {
    return static_cast<int>(std::ceil(grid_m * std::numbers::ln2 / std::log(3.0))) + 2;
}

int default_cantor_depth(int grid_m) {
    return static_cast<int>(std::floor(grid_m * std::numbers::ln2 / std::log(3.0)));
}

double peano_x(double t, int digits) {
    require(t >= 0.0 && t <= 1.0, "peano_x: argument outside [0,1]");
    require(digits >= 1 && digits <= 40, "peano_x: digits must be in [1,40]");
    if (t >= 1.0) return 1.0;
    // 62-bit fixed point keeps ternary digit extraction exact for dyadic
    // grid arguments and deterministic for everything else.
    constexpr int kBits = 62;
    auto num = static_cast<std::uint64_t>(std::ldexp(t, kBits));
    constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
    double out = 0.0;
    double scale = 1.0 / 3.0;
    int parity = 0; // parity of the sum of even-position digits seen so far
    for (int i = 0; i < digits; ++i) {
        num *= 3;
        int d = static_cast<int>(num >> kBits);
        num &= kMask;
        if (i % 2 == 0) {
            // odd position (1-based) feeds the x coordinate; the complement
            // operator k(d) = 2 - d applies when the parity is odd
            out += (parity % 2 == 0 ? d : 2 - d) * scale;
            scale /= 3.0;
        } else {
            parity += d;
        }
    }
    return out;
}

namespace {

double eval_cantor(const CantorExtension& node, double x) {
    // Descend the central Cantor construction; linear across gaps.
    double lo = 0.0, hi = 1.0;
    for (int level = 0; level < node.depth; ++level) {
        const double len = hi - lo;
        const double left_hi = lo + node.ratio * len;
        const double right_lo = hi - node.ratio * len;
        if (x <= left_hi) {
            hi = left_hi;
        } else if (x >= right_lo) {
            lo = right_lo;
        } else {
            const double ya = eval(*node.inner, left_hi);
            const double yb = eval(*node.inner, right_lo);
            const double u = (x - left_hi) / (right_lo - left_hi);
            return ya + u * (yb - ya);
        }
    }
    return eval(*node.inner, x);
}

struct Evaluator {
    double x;

    double operator()(const Weierstrass& w) const {
        double sum = 0.0;
        double amp = 1.0;
        double freq = 2.0 * std::numbers::pi;
        for (int n = 0; n <= w.terms; ++n) {
            sum += amp * std::cos(freq * x);
            amp *= w.a;
            freq *= w.b;
        }
        return sum;
    }
    double operator()(const Takagi& t) const {
        double sum = 0.0;
        double scale = 1.0;
        for (int n = 0; n <= t.terms; ++n) {
            double y = x / scale - std::floor(x / scale);
            sum += std::min(y, 1.0 - y) * scale;
            scale *= 0.5;
        }
        return sum;
    }
    double operator()(const PeanoX& p) const { return peano_x(x, p.digits); }
    double operator()(const CantorExtension& c) const { return eval_cantor(c, x); }
    double operator()(const Linear& l) const { return l.slope * x + l.intercept; }
    double operator()(const Constant& c) const { return c.value; }
    double operator()(const Sum& s) const { return eval(*s.lhs, x) + eval(*s.rhs, x); }
    double operator()(const Product& p) const { return eval(*p.lhs, x) * eval(*p.rhs, x); }
    double operator()(const Reciprocal& r) const {
        const double v = eval(*r.inner, x);
        if (v == 0.0) {
            std::ostringstream msg;
            msg << "division by zero in 1/(" << describe(*r.inner) << ") at x = " << x;
            throw ZeroCrossingError(msg.str());
        }
        return 1.0 / v;
    }
    double operator()(const Power& p) const {
        const double v = eval(*p.inner, x);
        double out = v;
        for (int i = 1; i < p.exponent; ++i) out *= v;
        return out;
    }
    double operator()(const Shift& s) const { return eval(*s.inner, x) + s.offset; }
};

struct Describer {
    std::string operator()(const Weierstrass& w) const {
        return "weier(" + format_double(w.a) + "," + std::to_string(w.b) + "," +
               std::to_string(w.terms) + ")";
    }
    std::string operator()(const Takagi& t) const {
        std::ostringstream s;
        s << "takagi(" << t.terms << ")";
        return s.str();
    }
    std::string operator()(const PeanoX& p) const {
        std::ostringstream s;
        s << "peano_x(" << p.digits << ")";
        return s.str();
    }
    std::string operator()(const CantorExtension& c) const {
        return "cantor_ext(" + describe(*c.inner) + "," + format_double(c.ratio) +
               "," + std::to_string(c.depth) + ")";
    }
    std::string operator()(const Linear& l) const {
        std::ostringstream s;
        if (l.slope == 1.0 && l.intercept == 0.0) return "x";
        s << "(" << format_double(l.slope) << "*x+" << format_double(l.intercept) << ")";
        return s.str();
    }
    std::string operator()(const Constant& c) const {
        return format_double(c.value);
    }
    std::string operator()(const Sum& n) const {
        return "(" + describe(*n.lhs) + "+" + describe(*n.rhs) + ")";
    }
    std::string operator()(const Product& n) const {
        return "(" + describe(*n.lhs) + "*" + describe(*n.rhs) + ")";
    }
    std::string operator()(const Reciprocal& n) const {
        return "(1/" + describe(*n.inner) + ")";
    }
    std::string operator()(const Power& n) const {
        std::ostringstream s;
        s << describe(*n.inner) << "^" << n.exponent;
        return s.str();
    }
    std::string operator()(const Shift& n) const {
        return "(" + describe(*n.inner) + "+" + format_double(n.offset) + ")";
    }
};

} // namespace

double eval(const Expr& expr, double x) {
    require(x >= 0.0 && x <= 1.0, "eval: x outside [0,1]");
    return std::visit(Evaluator{x}, expr.node);
}

std::string describe(const Expr& expr) {
    return std::visit(Describer{}, expr.node);
}

ExprPtr dimension_fixture(double beta, int grid_m) {
    require(beta >= 1.0 && beta < 2.0, "dimension_fixture: beta must be in [1,2)");
    if (beta == 1.0) return make_linear(1.0, 1.0);
    const int b = 3;
    const double a = std::pow(3.0, beta - 2.0);
    const int terms = default_weierstrass_terms(b, grid_m);
    // shift by 1 + sum a^n: min value >= 1 keeps 1/f well conditioned
    double geometric = (1.0 - std::pow(a, terms + 1)) / (1.0 - a);
    return make_shift(make_weierstrass(a, b, terms), 1.0 + geometric);
}

} // namespace graphdim
