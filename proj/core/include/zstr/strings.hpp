#pragma once

// t strings: eta sampled along a uniform sigma grid at fixed t.

#include <cstddef>
#include <vector>

#include "zstr/eta.hpp"

namespace zstr {

/// Inclusive uniform grid start, start + step, ... up to stop. The end point is
/// included when it is within step * 1e-9 of a grid point, so {0, 1, 0.05}
/// has exactly 21 points.
class SigmaGrid {
public:
    /// Throws DomainError unless 0 <= start <= stop and step > 0 (all finite).
    SigmaGrid(double start, double stop, double step);

    [[nodiscard]] double start() const noexcept { return start_; }
    [[nodiscard]] double stop() const noexcept { return stop_; }
    [[nodiscard]] double step() const noexcept { return step_; }

    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    /// start + k * step (not accumulated).
    [[nodiscard]] double operator[](std::size_t k) const noexcept;
    [[nodiscard]] std::vector<double> points() const;

private:
    double start_;
    double stop_;
    double step_;
    std::size_t count_;
};

/// floor((stop - start)/step + 1e-9) + 1; shared by sigma grids and t ranges.
std::size_t inclusive_count(double start, double stop, double step);

struct StringSample {
    double sigma;
    ComplexValue value;
};

struct TString {
    double t = 0.0;
    std::vector<StringSample> samples;  ///< strictly increasing sigma

    [[nodiscard]] std::size_t size() const noexcept { return samples.size(); }
    [[nodiscard]] bool empty() const noexcept { return samples.empty(); }
};

struct StringFamily {
    std::vector<TString> strings;  ///< increasing t
    SigmaGrid grid;
    double t_start;
    double t_stop;
    double t_step;
};

/// Evaluates eta(sigma + i t) at every grid point. Points may be evaluated on
/// several threads; the result is assembled in grid order. Evaluator errors
/// are rethrown as the same type with the offending sigma in the message.
TString build_string(double t, const SigmaGrid& grid, const PrecisionSpec& spec = {});

/// One string per t in {t_start, t_start + t_step, ..., t_stop}.
StringFamily build_family(double t_start, double t_stop, double t_step, const SigmaGrid& grid,
                          const PrecisionSpec& spec = {});

/// Same as build_string but every point sums a fixed number of terms.
TString build_string_truncated(double t, const SigmaGrid& grid, TruncationPlan plan,
                               bool compensated_phase = false);

StringFamily build_family_truncated(double t_start, double t_stop, double t_step,
                                    const SigmaGrid& grid, TruncationPlan plan,
                                    bool compensated_phase = false);

}  // namespace zstr
