#pragma once

#include <memory>
#include <string>
#include <variant>

namespace graphdim {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Node kinds. Leaves first, then combinators. All values are immutable
// after construction; trees are shared freely.

/// Truncated lacunary cosine series sum_{n=0}^{terms} a^n cos(2 pi b^n x).
/// For a*b > 1 the graph has box dimension 2 + log(a)/log(b).
struct Weierstrass {
    double a;  // amplitude ratio, in (0,1)
    int b;     // integer frequency base, >= 2
    int terms; // last included term index N
};

/// Truncated Takagi (blancmange) series sum_{n=0}^{terms} dist(2^n x, Z)/2^n.
struct Takagi {
    int terms;
};

/// First coordinate of the classical base-3 Peano space-filling curve,
/// computed from `digits` ternary digits of the argument.
struct PeanoX {
    int digits;
};

/// Piecewise-linear extension of `inner` from a depth-limited central
/// Cantor set (ratio in (0,1/2)) to all of [0,1]: equal to inner on the
/// Cantor intervals, affine across each gap.
struct CantorExtension {
    double ratio;
    int depth;
    ExprPtr inner;
};

struct Linear {
    double slope;
    double intercept;
};

struct Constant {
    double value;
};

struct Sum {
    ExprPtr lhs, rhs;
};

struct Product {
    ExprPtr lhs, rhs;
};

struct Reciprocal {
    ExprPtr inner;
};

struct Power {
    ExprPtr inner;
    int exponent; // >= 1
};

/// Vertical translation: inner + offset.
struct Shift {
    ExprPtr inner;
    double offset;
};

struct Expr {
    std::variant<Weierstrass, Takagi, PeanoX, CantorExtension, Linear,
                 Constant, Sum, Product, Reciprocal, Power, Shift>
        node;
};

// Factories (validate parameters, see errors.hpp).
ExprPtr make_weierstrass(double a, int b, int terms);
ExprPtr make_takagi(int terms);
ExprPtr make_peano_x(int digits);
ExprPtr make_cantor_extension(ExprPtr inner, double ratio, int depth);
ExprPtr make_linear(double slope, double intercept);
ExprPtr make_constant(double value);
ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_product(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_reciprocal(ExprPtr inner);
ExprPtr make_power(ExprPtr inner, int exponent);
ExprPtr make_shift(ExprPtr inner, double offset);

/// Exact recursive evaluation at x in [0,1]. Throws ZeroCrossingError if a
/// Reciprocal divides by zero, naming the offending subexpression and x.
double eval(const Expr& expr, double x);
inline double eval(const ExprPtr& expr, double x) { return eval(*expr, x); }

/// Compact textual form of the expression tree (used in reports and errors,
/// and as a cache/provenance key; parseable by the expression language).
std::string describe(const Expr& expr);
inline std::string describe(const ExprPtr& expr) { return describe(*expr); }

/// Smallest term count for base b such that the omitted tail of a
/// Weierstrass-type series stays below 2^-(m+6): ceil((m+6) log 2 / log b).
int default_weierstrass_terms(int b, int grid_m);

/// Term count for Takagi so the tail stays below 2^-(m+6).
int default_takagi_terms(int grid_m);

/// Default ternary depth for Peano sampling at grid exponent m.
int default_peano_digits(int grid_m);

/// Default Cantor construction depth at grid exponent m (ratio 1/3).
int default_cantor_depth(int grid_m);

/// First coordinate of the classical base-3 Peano curve. Ternary digits of
/// t are taken from a 62-bit fixed-point truncation; `digits` in [1,40].
double peano_x(double t, int digits);

/// Shifted Weierstrass-type function whose graph has box dimension `beta`:
/// Weierstrass{a = 3^(beta-2), b = 3} + (1 + sum a^n), strictly >= 1 on
/// [0,1]. For beta == 1 returns Linear{1,1}. Requires beta in [1,2).
ExprPtr dimension_fixture(double beta, int grid_m);

} // namespace graphdim
