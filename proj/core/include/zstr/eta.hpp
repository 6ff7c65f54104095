#pragma once

// Dirichlet eta over sigma >= 0 and zeta on the strip via eta / (1 - 2^(1-s)).

#include <complex>
#include <cstdint>
#include <string_view>

namespace zstr {

using ComplexValue = std::complex<double>;

/// s = sigma + i t with sigma >= 0.
class EtaArgument {
public:
    /// Throws DomainError if sigma < 0 or either component is non-finite.
    EtaArgument(double sigma, double t);

    [[nodiscard]] double sigma() const noexcept { return sigma_; }
    [[nodiscard]] double t() const noexcept { return t_; }
    [[nodiscard]] ComplexValue s() const noexcept { return {sigma_, t_}; }

    [[nodiscard]] EtaArgument conjugate() const { return {sigma_, -t_}; }

private:
    double sigma_;
    double t_;
};

enum class Strategy {
    Truncated,    ///< plain partial sum through truncation_length(sigma, p) terms
    Accelerated,  ///< weighted alternating sum, valid for all sigma >= 0
};

std::string_view to_string(Strategy s) noexcept;
/// Accepts "truncated" / "accelerated" (case-insensitive); throws DomainError otherwise.
Strategy parse_strategy(std::string_view name);

struct PrecisionSpec {
    /// Decimal digits of precision measured against the n = 2 term, 2^-sigma.
    double p = 6.0;
    Strategy strategy = Strategy::Accelerated;
    /// Reduce t*ln(n) mod 2pi in double-word arithmetic before sin/cos.
    bool compensated_phase = false;

    /// Throws DomainError unless p is finite and positive.
    void validate() const;
};

struct TruncationPlan {
    std::int64_t n_terms = 2;
};

/// n = ceil(2 * 10^(p/sigma)), clamped below at 2. The n = 2 term is the
/// reference: term n+1 is the first whose modulus drops under 10^-p 2^-sigma.
/// Throws DomainError for sigma <= 0, p <= 0, or a count that does not fit.
TruncationPlan truncation_length(double sigma, double p);

/// (-1)^(n-1) n^-sigma exp(-i t ln n). n = 1 returns exactly 1.
ComplexValue eta_term(std::int64_t n, const EtaArgument& s, bool compensated_phase = false);

/// Sum of the first plan.n_terms terms. Requires sigma > 0.
ComplexValue eta_truncated(const EtaArgument& s, TruncationPlan plan, bool compensated_phase = false);

/// Number of weighted terms the accelerated sum uses for error 10^-p 2^-sigma.
std::int64_t accelerated_length(const EtaArgument& s, double p);

ComplexValue eta_accelerated(const EtaArgument& s, double p, bool compensated_phase = false);

/// eta(s) with the strategy and precision of spec.
ComplexValue eta(const EtaArgument& s, const PrecisionSpec& spec = {});

/// Guard width on |1 - 2^(1-s)| and |1 - 2^s|.
inline constexpr double kDenominatorTolerance = 1e-9;

/// zeta(s) = eta(s) / (1 - 2^(1-s)). PoleError at s = 1, DenominatorZeroError
/// at 1 + 2 pi i k / ln 2 (k != 0).
ComplexValue zeta_from_eta(const EtaArgument& s, const PrecisionSpec& spec = {});

/// |eta(s) - 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) (1-2^(1-s))/(1-2^s) eta(1-s)|
/// on the open strip 0 < sigma < 1.
double reflection_residual(const EtaArgument& s, const PrecisionSpec& spec = {});

/// 2 pi k / ln 2, where the sigma = 1 end of a string sits on the origin.
double trivial_zero_t(std::int64_t k);

}  // namespace zstr
