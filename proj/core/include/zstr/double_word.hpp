#pragma once

// Double-word ("double-double") arithmetic: an unevaluated sum hi + lo of two
// doubles with |lo| <= ulp(hi)/2, giving ~106 bits of significand. Only the
// handful of operations needed for phase reduction of t*ln(n) are provided.

#include <cmath>
#include <cstdint>

namespace zstr::dw {

struct DoubleWord {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleWord() = default;
    constexpr DoubleWord(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
    constexpr DoubleWord(double h, double l) : hi(h), lo(l) {}

    [[nodiscard]] double to_double() const { return hi + lo; }
};

// Error-free transformations.
inline DoubleWord two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleWord fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleWord two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DoubleWord operator+(const DoubleWord& a, const DoubleWord& b);
DoubleWord operator-(const DoubleWord& a, const DoubleWord& b);
DoubleWord operator-(const DoubleWord& a);
DoubleWord operator*(const DoubleWord& a, const DoubleWord& b);
DoubleWord operator*(const DoubleWord& a, double b);
DoubleWord operator/(const DoubleWord& a, const DoubleWord& b);

/// Multiply by an exact power of two.
DoubleWord ldexp(const DoubleWord& a, int e);

DoubleWord exp(const DoubleWord& a);

/// Natural logarithm of a positive integer, accurate to ~1e-31 relative.
DoubleWord log_integer(std::uint64_t n);

inline constexpr DoubleWord kLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline constexpr DoubleWord kTwoPi{6.283185307179586232e+00, 2.449293598294706414e-16};

/// (x mod 2pi) as a double in [-pi, pi]; x is reduced with the double-word 2pi.
double reduce_two_pi(const DoubleWord& x);

}  // namespace zstr::dw
