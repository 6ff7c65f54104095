#include "zstr/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "zstr/errors.hpp"

namespace zstr {
namespace {

using cplx = std::complex<double>;

// g = 7, n = 9 Lanczos coefficients.
constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log Gamma for Re z >= 1/2.
cplx lanczos_log_gamma(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
    const double y = z.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(std::numbers::pi * z));
    // sin(w) = (e^{iw} - e^{-iw}) / 2i; keep the dominant exponential.
    const cplx w = std::numbers::pi * z;
    const cplx i(0.0, 1.0);
    if (y > 0) {
        // dominant term e^{-iw}
        return -i * w + std::log((1.0 - std::exp(2.0 * i * w)) / (-2.0 * i));
    }
    return i * w + std::log((std::exp(-2.0 * i * w) - 1.0) / (-2.0 * i));
}

void check_pole(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real())) {
        throw DomainError("gamma: pole at non-positive integer " + std::to_string(z.real()));
    }
}

}  // namespace

cplx log_gamma(cplx z) {
    check_pole(z);
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

cplx gamma(cplx z) {
    check_pole(z);
    if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
    return std::numbers::pi / (std::sin(std::numbers::pi * z) * std::exp(lanczos_log_gamma(1.0 - z)));
}

}  // namespace zstr
