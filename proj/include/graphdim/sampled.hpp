#pragma once

#include "graphdim/expr.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphdim {

/// A function tabulated on the uniform dyadic grid i * 2^-m, i = 0..2^m.
struct SampledFunction {
    int m = 0;                  // grid exponent, 2^m + 1 samples
    std::vector<double> values; // finite reals
    std::string provenance;     // describe() of the source expression, or a path

    std::size_t size() const { return values.size(); }
    double grid_step() const;
    double x_at(std::size_t i) const;
    double min_value() const;
    double max_value() const;
    double min_abs_value() const;
};

inline constexpr int kMinGridExponent = 4;
inline constexpr int kMaxGridExponent = 26;

/// Deterministic tabulation: values[i] = eval(expr, i * 2^-m). m in [4,26].
SampledFunction sample(const Expr& expr, int m);
SampledFunction sample(const ExprPtr& expr, int m);

/// Piecewise-linear extension of `inner` from the ratio-r central Cantor set
/// (depth floor(m log2/log3)) to [0,1], tabulated at grid exponent m.
SampledFunction cantor_extension(const ExprPtr& inner, double ratio, int m);

/// True if min |value| > 1e-9 on the grid (guard for Reciprocal/decompose).
bool zero_free(const SampledFunction& f);

/// Throws ZeroCrossingError (naming the provenance and the offending x)
/// unless zero_free(f).
void require_zero_free(const SampledFunction& f);

/// Grid-scans every Reciprocal denominator in the tree at exponent m and
/// throws ZeroCrossingError on a sign change or a value within 1e-9 of zero.
void require_reciprocal_safe(const Expr& expr, int m);
inline void require_reciprocal_safe(const ExprPtr& expr, int m) {
    require_reciprocal_safe(*expr, m);
}

// CSV: header "x,y", one row per grid point, shortest round-trip decimals.
void write_csv(std::ostream& out, const SampledFunction& f);
SampledFunction read_csv(std::istream& in, const std::string& provenance);

// Raw binary: 8-byte little-endian header holding m, then 2^m + 1
// little-endian 64-bit floats.
void write_binary(std::ostream& out, const SampledFunction& f);
SampledFunction read_binary(std::istream& in, const std::string& provenance);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

} // namespace graphdim
