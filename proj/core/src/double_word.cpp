#include "zstr/double_word.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace zstr::dw {

DoubleWord operator+(const DoubleWord& a, const DoubleWord& b) {
    DoubleWord s = two_sum(a.hi, b.hi);
    const DoubleWord t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = fast_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return fast_two_sum(s.hi, s.lo);
}

DoubleWord operator-(const DoubleWord& a) { return {-a.hi, -a.lo}; }

DoubleWord operator-(const DoubleWord& a, const DoubleWord& b) { return a + (-b); }

DoubleWord operator*(const DoubleWord& a, const DoubleWord& b) {
    DoubleWord p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return fast_two_sum(p.hi, p.lo);
}

DoubleWord operator*(const DoubleWord& a, double b) {
    DoubleWord p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return fast_two_sum(p.hi, p.lo);
}

DoubleWord operator/(const DoubleWord& a, const DoubleWord& b) {
    const double q1 = a.hi / b.hi;
    DoubleWord r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    DoubleWord q = fast_two_sum(q1, q2);
    return q + DoubleWord(q3);
}

DoubleWord ldexp(const DoubleWord& a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

DoubleWord exp(const DoubleWord& a) {
    constexpr int kSquarings = 10;
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    if (a.hi == 0.0 && a.lo == 0.0) return {1.0, 0.0};

    // a = k ln2 + r with |r| <= ln2/2, then r / 2^10 so the series converges fast.
    const double k = std::nearbyint(a.hi / std::numbers::ln2);
    DoubleWord r = ldexp(a - kLn2 * k, -kSquarings);

    // expm1(r) by its Taylor series.
    DoubleWord term = r;
    DoubleWord sum = r;
    for (int i = 2; i <= 14; ++i) {
        term = term * r / DoubleWord(static_cast<double>(i));
        sum = sum + term;
        if (std::abs(term.hi) < 1e-36) break;
    }
    // (1 + s)^2 - 1 = 2s + s^2 keeps the small quantity small.
    for (int i = 0; i < kSquarings; ++i) sum = ldexp(sum, 1) + sum * sum;

    return ldexp(sum + DoubleWord(1.0), static_cast<int>(k));
}

DoubleWord log_integer(std::uint64_t n) {
    if (n <= 1) return {0.0, 0.0};
    const double hi = static_cast<double>(n);
    // n may exceed 2^53; keep the part the double dropped.
    const auto back = static_cast<std::uint64_t>(hi);
    const double lo = back >= n ? -static_cast<double>(back - n) : static_cast<double>(n - back);
    const DoubleWord value = fast_two_sum(hi, lo);

    // One Newton step x <- x + n e^-x - 1 squares the error of std::log.
    const DoubleWord x0(std::log(hi));
    const DoubleWord correction = value * exp(-x0) - DoubleWord(1.0);
    return x0 + correction;
}

double reduce_two_pi(const DoubleWord& x) {
    const double q = std::nearbyint(x.hi / kTwoPi.hi);
    const DoubleWord r = x - kTwoPi * q;
    double out = r.to_double();
    if (out > std::numbers::pi) out -= kTwoPi.hi;
    if (out < -std::numbers::pi) out += kTwoPi.hi;
    return out;
}

}  // namespace zstr::dw
