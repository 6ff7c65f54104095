#pragma once

#include <complex>

namespace zstr {

/// log Gamma(z) for complex z off the non-positive real axis. The imaginary
/// part is a continuous branch, not necessarily the principal one, so only
/// exp() of the result (or differences taken within one call) is meaningful.
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(z) via a g = 7, 9-term Lanczos sum (about 15 digits) and Euler's
/// reflection for Re z < 1/2. Throws DomainError at the poles 0, -1, -2, ...
std::complex<double> gamma(std::complex<double> z);

}  // namespace zstr
