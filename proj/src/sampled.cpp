#include "graphdim/sampled.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphdim {

double SampledFunction::grid_step() const { return std::ldexp(1.0, -m); }

double SampledFunction::x_at(std::size_t i) const {
    return std::ldexp(static_cast<double>(i), -m);
}

double SampledFunction::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double SampledFunction::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

double SampledFunction::min_abs_value() const {
    double best = std::abs(values.front());
    for (double v : values) best = std::min(best, std::abs(v));
    return best;
}

namespace {

void check_grid_exponent(int m) {
    if (m < kMinGridExponent || m > kMaxGridExponent) {
        std::ostringstream msg;
        msg << "grid exponent m = " << m << " outside [" << kMinGridExponent
            << "," << kMaxGridExponent << "]";
        throw EvalError(msg.str());
    }
}

} // namespace

SampledFunction sample(const Expr& expr, int m) {
    check_grid_exponent(m);
    const std::size_t n = (std::size_t{1} << m) + 1;
    SampledFunction out;
    out.m = m;
    out.provenance = describe(expr);
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out.values[i] = eval(expr, std::ldexp(static_cast<double>(i), -m));
        } catch (const EvalError& e) {
            std::ostringstream msg;
            msg << e.what() << " (grid index " << i << ")";
            throw ZeroCrossingError(msg.str());
        }
        if (!std::isfinite(out.values[i])) {
            std::ostringstream msg;
            msg << "non-finite sample at grid index " << i << " of " << out.provenance;
            throw EvalError(msg.str());
        }
    }
    return out;
}

SampledFunction sample(const ExprPtr& expr, int m) { return sample(*expr, m); }

SampledFunction cantor_extension(const ExprPtr& inner, double ratio, int m) {
    const int depth = default_cantor_depth(m);
    return sample(make_cantor_extension(inner, ratio, depth), m);
}

bool zero_free(const SampledFunction& f) { return f.min_abs_value() > 1e-9; }

void require_zero_free(const SampledFunction& f) {
    double best = std::abs(f.values.front());
    std::size_t where = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (std::abs(f.values[i]) < best) {
            best = std::abs(f.values[i]);
            where = i;
        }
    }
    if (best <= 1e-9) {
        std::ostringstream msg;
        msg << f.provenance << " is not bounded away from zero: |f(" << format_double(f.x_at(where))
            << ")| = " << format_double(best);
        throw ZeroCrossingError(msg.str());
    }
}

void require_reciprocal_safe(const Expr& expr, int m) {
    const auto recurse = [m](const ExprPtr& child) { require_reciprocal_safe(*child, m); };
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Sum> || std::is_same_v<T, Product>) {
                recurse(node.lhs);
                recurse(node.rhs);
            } else if constexpr (std::is_same_v<T, Power> || std::is_same_v<T, Shift> ||
                                 std::is_same_v<T, CantorExtension>) {
                recurse(node.inner);
            } else if constexpr (std::is_same_v<T, Reciprocal>) {
                recurse(node.inner);
                const SampledFunction inner = sample(node.inner, m);
                for (std::size_t i = 0; i < inner.values.size(); ++i) {
                    const bool sign_change =
                        i > 0 && std::signbit(inner.values[i]) != std::signbit(inner.values[i - 1]);
                    if (std::abs(inner.values[i]) <= 1e-9 || sign_change) {
                        std::ostringstream msg;
                        msg << "denominator " << inner.provenance << " crosses zero near x = "
                            << format_double(inner.x_at(i));
                        throw ZeroCrossingError(msg.str());
                    }
                }
            }
        },
        expr.node);
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const SampledFunction& f) {
    out << "x,y\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        out << format_double(f.x_at(i)) << ',' << format_double(f.values[i]) << '\n';
    }
}

SampledFunction read_csv(std::istream& in, const std::string& provenance) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y", 0) != 0) {
        throw EvalError("malformed CSV: expected header 'x,y'");
    }
    std::vector<double> xs, ys;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw EvalError("malformed CSV row: " + line);
        double x = 0.0, y = 0.0;
        auto rx = std::from_chars(line.data(), line.data() + comma, x);
        auto ry = std::from_chars(line.data() + comma + 1, line.data() + line.size(), y);
        if (rx.ec != std::errc{} || ry.ec != std::errc{}) {
            throw EvalError("malformed CSV row: " + line);
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.size() < (1u << kMinGridExponent) + 1) throw EvalError("CSV too short");
    const std::size_t n = xs.size() - 1;
    if ((n & (n - 1)) != 0) throw EvalError("CSV row count is not 2^m + 1");
    const int m = std::countr_zero(n);
    SampledFunction f;
    f.m = m;
    f.provenance = provenance;
    f.values = std::move(ys);
    for (std::size_t i = 0; i <= n; ++i) {
        if (xs[i] != f.x_at(i)) {
            throw EvalError("CSV grid is not uniform dyadic (row " + std::to_string(i) + ")");
        }
    }
    return f;
}

void write_binary(std::ostream& out, const SampledFunction& f) {
    static_assert(std::endian::native == std::endian::little,
                  "binary format assumes a little-endian host");
    const std::uint64_t header = static_cast<std::uint64_t>(f.m);
    out.write(reinterpret_cast<const char*>(&header), 8);
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
}

SampledFunction read_binary(std::istream& in, const std::string& provenance) {
    std::uint64_t header = 0;
    in.read(reinterpret_cast<char*>(&header), 8);
    if (!in || header < kMinGridExponent || header > kMaxGridExponent) {
        throw EvalError("malformed binary header");
    }
    SampledFunction f;
    f.m = static_cast<int>(header);
    f.provenance = provenance;
    f.values.resize((std::size_t{1} << f.m) + 1);
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!in) throw EvalError("binary payload truncated");
    return f;
}

} // namespace graphdim
