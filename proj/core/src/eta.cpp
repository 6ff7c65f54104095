#include "zstr/eta.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zstr/double_word.hpp"
#include "zstr/errors.hpp"
#include "zstr/gamma.hpp"

namespace zstr {
namespace {

constexpr double kLn10 = 2.302585092994045684;

// (-1)^(n-1) n^-s given ln n; the phase is t ln n.
ComplexValue signed_term(std::int64_t n, double log_n, const EtaArgument& s, bool compensated) {
    const double modulus = std::exp(-s.sigma() * log_n);
    double phase;
    if (compensated) {
        phase = dw::reduce_two_pi(dw::log_integer(static_cast<std::uint64_t>(n)) * s.t());
    } else {
        phase = s.t() * log_n;
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return {sign * modulus * std::cos(phase), -sign * modulus * std::sin(phase)};
}

void require_finite_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string(what) + " must be finite and positive, got " + std::to_string(v));
    }
}

}  // namespace

EtaArgument::EtaArgument(double sigma, double t) : sigma_(sigma), t_(t) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) {
        throw DomainError("eta argument must be finite");
    }
    if (sigma < 0.0) {
        throw DomainError("eta argument needs sigma >= 0, got " + std::to_string(sigma));
    }
}

std::string_view to_string(Strategy s) noexcept {
    return s == Strategy::Truncated ? "truncated" : "accelerated";
}

Strategy parse_strategy(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "truncated") return Strategy::Truncated;
    if (lower == "accelerated") return Strategy::Accelerated;
    throw DomainError("unknown strategy '" + std::string(name) + "' (expected truncated or accelerated)");
}

void PrecisionSpec::validate() const { require_finite_positive(p, "precision p"); }

TruncationPlan truncation_length(double sigma, double p) {
    require_finite_positive(p, "precision p");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("truncation length diverges as sigma -> 0; need sigma > 0, got " +
                          std::to_string(sigma));
    }
    const double exponent = p / sigma;
    if (exponent > 18.0) {
        throw DomainError("truncation length 2*10^" + std::to_string(exponent) + " is not computable");
    }
    const double x = 2.0 * std::pow(10.0, exponent);
    // Values that are integers up to rounding (2 * 10^2 = 200) are not bumped.
    const double nearest = std::nearbyint(x);
    const double n = std::abs(x - nearest) <= 1e-9 * x ? nearest : std::ceil(x);
    return {std::max<std::int64_t>(2, static_cast<std::int64_t>(n))};
}

ComplexValue eta_term(std::int64_t n, const EtaArgument& s, bool compensated_phase) {
    if (n < 1) throw DomainError("eta term index must be >= 1");
    if (n == 1) return {1.0, 0.0};
    return signed_term(n, std::log(static_cast<double>(n)), s, compensated_phase);
}

ComplexValue eta_truncated(const EtaArgument& s, TruncationPlan plan, bool compensated_phase) {
    if (!(s.sigma() > 0.0)) {
        throw DomainError("truncated eta needs sigma > 0 (the raw series diverges at sigma = 0)");
    }
    if (plan.n_terms < 1) throw DomainError("truncation plan needs at least one term");
    // Sum from the small end so the leading 1 is added last.
    ComplexValue sum = 0.0;
    for (std::int64_t n = plan.n_terms; n >= 2; --n) {
        sum += signed_term(n, std::log(static_cast<double>(n)), s, compensated_phase);
    }
    return sum + 1.0;
}

std::int64_t accelerated_length(const EtaArgument& s, double p) {
    require_finite_positive(p, "precision p");
    // Borwein's bound: |error| <= 3 (1 + 2|t|) e^{pi |t| / 2} / (3 + sqrt 8)^n.
    const double t = std::abs(s.t());
    const double need = p * kLn10 + s.sigma() * std::numbers::ln2 + std::log(3.0 * (1.0 + 2.0 * t)) +
                        std::numbers::pi * t / 2.0;
    const double n = std::ceil(need / std::log(3.0 + 2.0 * std::numbers::sqrt2)) + 1.0;
    if (n > 1e12) throw DomainError("accelerated eta would need more than 1e12 terms");
    return std::max<std::int64_t>(8, static_cast<std::int64_t>(n));
}

ComplexValue eta_accelerated(const EtaArgument& s, double p, bool compensated_phase) {
    const std::int64_t n = accelerated_length(s, p);
    const auto count = static_cast<std::size_t>(n);

    // e_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), d_k = e_0 + ... + e_k. The sum is
    // sum_{k<n} (-1)^k (1 - d_k/d_n) (k+1)^-s; work with logs so d_n never
    // overflows and take the weights as tail sums for accuracy near k = n.
    std::vector<double> log_e(count + 1);
    log_e[0] = 0.0;
    const double nd = static_cast<double>(n);
    for (std::size_t i = 1; i <= count; ++i) {
        const double id = static_cast<double>(i);
        log_e[i] = log_e[i - 1] + std::log((nd + id - 1.0) * (nd - id + 1.0) * 4.0 / ((2.0 * id) * (2.0 * id - 1.0)));
    }
    const double peak = *std::max_element(log_e.begin(), log_e.end());

    std::vector<double> tail(count + 1, 0.0);  // tail[k] = sum_{i > k} e_i
    for (std::size_t k = count; k-- > 0;) tail[k] = tail[k + 1] + std::exp(log_e[k + 1] - peak);
    const double total = tail[0] + std::exp(log_e[0] - peak);

    ComplexValue sum = 0.0;
    for (std::size_t k = count; k-- > 1;) {
        const auto m = static_cast<std::int64_t>(k + 1);
        sum += (tail[k] / total) * signed_term(m, std::log(static_cast<double>(m)), s, compensated_phase);
    }
    return sum + tail[0] / total;
}

ComplexValue eta(const EtaArgument& s, const PrecisionSpec& spec) {
    spec.validate();
    switch (spec.strategy) {
        case Strategy::Truncated:
            return eta_truncated(s, truncation_length(s.sigma(), spec.p), spec.compensated_phase);
        case Strategy::Accelerated:
            return eta_accelerated(s, spec.p, spec.compensated_phase);
    }
    throw DomainError("unknown strategy");
}

ComplexValue zeta_from_eta(const EtaArgument& s, const PrecisionSpec& spec) {
    const ComplexValue one_minus_s = 1.0 - s.s();
    if (std::abs(one_minus_s) < kDenominatorTolerance) throw PoleError("zeta has a pole at s = 1");
    const ComplexValue denom = 1.0 - std::exp(one_minus_s * std::numbers::ln2);
    if (std::abs(denom) < kDenominatorTolerance) {
        throw DenominatorZeroError("1 - 2^(1-s) vanishes near s = 1 + 2 pi i k / ln 2 (t = " +
                                   std::to_string(s.t()) + ")");
    }
    return eta(s, spec) / denom;
}

double reflection_residual(const EtaArgument& s, const PrecisionSpec& spec) {
    if (!(s.sigma() > 0.0 && s.sigma() < 1.0)) {
        throw DomainError("reflection residual is defined on 0 < sigma < 1, got sigma = " +
                          std::to_string(s.sigma()));
    }
    const ComplexValue z = s.s();
    const ComplexValue two_s = std::exp(z * std::numbers::ln2);
    const ComplexValue two_1ms = std::exp((1.0 - z) * std::numbers::ln2);
    const ComplexValue denom = 1.0 - two_s;
    if (std::abs(denom) < kDenominatorTolerance) {
        throw DenominatorZeroError("1 - 2^s vanishes in the reflection factor");
    }
    const ComplexValue factor = two_s * std::exp((z - 1.0) * std::log(std::numbers::pi)) *
                                std::sin(std::numbers::pi * z / 2.0) * gamma(1.0 - z) * (1.0 - two_1ms) / denom;
    const EtaArgument reflected(1.0 - s.sigma(), -s.t());
    return std::abs(eta(s, spec) - factor * eta(reflected, spec));
}

double trivial_zero_t(std::int64_t k) {
    if (k < 1) throw DomainError("trivial zero index must be >= 1");
    return 2.0 * std::numbers::pi * static_cast<double>(k) / std::numbers::ln2;
}

}  // namespace zstr
