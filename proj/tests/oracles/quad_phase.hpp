#pragma once

// Quad-precision (__float128) reference for t * ln(n) mod 2pi.

#include <quadmath.h>

#include <cstdint>

namespace zstr::oracle {

inline double reduced_phase_quad(double t, std::int64_t n) {
    const __float128 two_pi = 2 * acosq(-1);
    __float128 x = static_cast<__float128>(t) * logq(static_cast<__float128>(n));
    x = remainderq(x, two_pi);
    return static_cast<double>(x);
}

}  // namespace zstr::oracle
