#pragma once

// Zero search along the critical line (sigma = 1/2) and the sigma = 1 line.

#include <cstdint>
#include <optional>
#include <vector>

#include "zstr/eta.hpp"

namespace zstr {

enum class ZeroKind { NonTrivial, TrivialEta };

const char* to_string(ZeroKind kind) noexcept;

struct ZeroRecord {
    double t = 0.0;
    ZeroKind kind = ZeroKind::NonTrivial;
    double sigma = 0.5;
    double residual = 0.0;  ///< |eta(sigma + i t)| at the refined t
    std::optional<std::int64_t> k;

    friend bool operator==(const ZeroRecord&, const ZeroRecord&) = default;
};

struct ScanConfig {
    double t_min = 0.0;
    double t_max = 0.0;
    double step = 0.1;
    /// Grid minima of |eta| above this are not refined.
    double detect_threshold = 0.5;
    /// Bracket width in t at which refinement stops.
    double refine_tolerance = 1e-9;
    /// Largest |eta| accepted at a refined zero.
    double residual_tolerance = 1e-6;
    PrecisionSpec spec{};

    /// Throws DomainError for an empty range, non-positive tolerances, or a
    /// step above 0.5 where t <= 100.
    void validate() const;
};

/// Tolerance in t for matching 2 pi k / ln 2.
inline constexpr double kTrivialMatchTolerance = 1e-3;
/// |eta| below which classify_zero accepts a line.
inline constexpr double kClassifyTolerance = 1e-3;

/// Minimizes |eta(sigma + i t)| over [t_lo, t_hi] by golden-section search.
/// Throws NoZeroInBracketError when the minimum sits on the bracket edge or
/// its residual exceeds config.residual_tolerance. The kind is provisional:
/// sigma = 1 gives TrivialEta (k = nearest index), anything else NonTrivial.
ZeroRecord refine_zero(double t_lo, double t_hi, double sigma, const ScanConfig& config);

/// TrivialEta with index k if t is within 1e-3 of 2 pi k / ln 2 (k >= 1) and
/// |eta(1 + i t)| < tolerance; otherwise NonTrivial if |eta(1/2 + i t)| <
/// tolerance; otherwise ClassificationError. residual is recomputed.
ZeroRecord classify_zero(const ZeroRecord& record, const PrecisionSpec& spec = {},
                         double tolerance = kClassifyTolerance);

/// Samples |eta| on both lines over the t grid, refines every grid minimum
/// below detect_threshold, classifies, and returns records sorted by t.
std::vector<ZeroRecord> scan_zeros(const ScanConfig& config);

/// |eta((1 - sigma) + i t)| at the record's point.
double verify_modified_reflection(const ZeroRecord& record, const PrecisionSpec& spec = {});

}  // namespace zstr
