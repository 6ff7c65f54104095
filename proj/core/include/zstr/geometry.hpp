#pragma once

// Shape analysis of t strings: lengths, closest approach to the origin,
// self-crossings, large-sigma directions and flare classification.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zstr/eta.hpp"
#include "zstr/strings.hpp"

namespace zstr {

double arc_length(const TString& string);

struct NearestApproach {
    double sigma;
    double distance;
};

/// Sample (not interpolated) of least modulus; ties go to the smaller sigma.
NearestApproach nearest_approach(const TString& string);

struct CrossingReport {
    ComplexValue point;
    std::pair<double, double> sigma_pair;  ///< interpolated, first < second
    double gap = 0.0;                      ///< 0 for a true intersection
};

/// Every pair of non-adjacent segments that intersect or come within
/// gap_tolerance of each other, sorted by the smaller sigma. Uses a sweep over
/// x-sorted segment boxes. Strings with fewer than 4 samples have no
/// non-adjacent segments and yield an empty list.
std::vector<CrossingReport> self_crossings(const TString& string, double gap_tolerance = 0.0);

/// Same as above on a bare polyline; sigma_pair holds fractional vertex
/// indices instead of sigma values.
std::vector<CrossingReport> polyline_self_crossings(std::span<const ComplexValue> points,
                                                    double gap_tolerance = 0.0);

/// Direction, in degrees within (-180, 180], of the signed n = 2 term
/// -2^-sigma exp(-i t ln 2) seen from (1, 0).
double large_sigma_angle(double t);

/// Closed sigma interval used to select samples from each string.
struct SigmaWindow {
    double lo;
    double hi;
};

struct FittedLine {
    ComplexValue centroid;
    ComplexValue direction;  ///< unit vector pointing toward the low-sigma end
    double length;           ///< polyline length of the windowed samples
    double straightness;     ///< minor/major principal spread, 0 for collinear
};

/// Total-least-squares line through the string's samples with sigma in window.
/// Throws DomainError with fewer than 3 samples in the window and
/// DegenerateGeometryError if they all coincide.
FittedLine fit_line(const TString& string, SigmaWindow window);

struct CenterFit {
    ComplexValue center;
    double residual;  ///< RMS perpendicular distance from center to the lines
};

inline constexpr double kMaxCenterConditionNumber = 1e8;

/// Point minimizing the summed squared perpendicular distance to the lines.
/// Throws IllConditionedError when the normal matrix is (near) singular, i.e.
/// the lines are (near) parallel.
CenterFit concurrency_point(std::span<const FittedLine> lines);

/// Fits each string's windowed samples and returns their concurrency point.
CenterFit fit_center(const StringFamily& family, SigmaWindow window);

enum class FlareKind { Parallel, Radial, Jumble };

const char* to_string(FlareKind kind) noexcept;

struct FlareThresholds {
    /// Directed-angle circular range (degrees) below which strings are parallel.
    double parallel_spread_deg = 45.0;
    /// Concurrency residual relative to the RMS distance from the center to
    /// the string centroids.
    double radial_residual = 0.5;
};

struct FlareReport {
    FlareKind kind = FlareKind::Jumble;
    std::optional<double> direction_deg;  ///< Parallel: circular mean direction
    std::optional<ComplexValue> center;   ///< Radial: concurrency point
    double spread_deg = 0.0;
    double residual = 0.0;  ///< normalized concurrency residual (NaN if not fitted)
};

/// Parallel if the fitted directions span less than parallel_spread_deg,
/// otherwise Radial if the normalized concurrency residual is below
/// radial_residual, otherwise Jumble. Needs >= 3 strings.
FlareReport classify_flare(const StringFamily& family, SigmaWindow window,
                           const FlareThresholds& thresholds = {});

/// Classification on already fitted lines; used by classify_flare.
FlareReport classify_lines(std::span<const FittedLine> lines, const FlareThresholds& thresholds = {});

}  // namespace zstr
