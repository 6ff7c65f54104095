#include "zstr/strings.hpp"

#include <cmath>
#include <string>
#include <typeinfo>

#include "zstr/errors.hpp"
#include "zstr/parallel.hpp"

namespace zstr {
namespace {

constexpr double kEndpointSlack = 1e-9;

std::string at_sigma(const std::string& what, double sigma, double t) {
    return what + " (at sigma = " + std::to_string(sigma) + ", t = " + std::to_string(t) + ")";
}

// Re-raise the library error with the sample location, preserving its type.
[[noreturn]] void rethrow_annotated(const Error& e, double sigma, double t) {
    const std::string msg = at_sigma(e.what(), sigma, t);
    if (dynamic_cast<const DomainError*>(&e)) throw DomainError(msg);
    if (dynamic_cast<const PoleError*>(&e)) throw PoleError(msg);
    if (dynamic_cast<const DenominatorZeroError*>(&e)) throw DenominatorZeroError(msg);
    throw Error(msg);
}

template <class Eval>
TString sample_string(double t, const SigmaGrid& grid, Eval&& eval) {
    TString out;
    out.t = t;
    out.samples.resize(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t k) {
        const double sigma = grid[k];
        try {
            out.samples[k] = {sigma, eval(EtaArgument(sigma, t))};
        } catch (const Error& e) {
            rethrow_annotated(e, sigma, t);
        }
    });
    return out;
}

std::vector<double> t_values(double t_start, double t_stop, double t_step) {
    if (!std::isfinite(t_start) || !std::isfinite(t_stop) || !std::isfinite(t_step)) {
        throw DomainError("t range must be finite");
    }
    if (!(t_step > 0.0)) throw DomainError("t step must be positive");
    if (t_stop < t_start) throw DomainError("t range needs t_stop >= t_start");
    const std::size_t n = inclusive_count(t_start, t_stop, t_step);
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = t_start + static_cast<double>(i) * t_step;
    return ts;
}

}  // namespace

std::size_t inclusive_count(double start, double stop, double step) {
    return static_cast<std::size_t>(std::floor((stop - start) / step + kEndpointSlack)) + 1;
}

SigmaGrid::SigmaGrid(double start, double stop, double step) : start_(start), stop_(stop), step_(step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw DomainError("sigma grid bounds must be finite");
    }
    if (start < 0.0) throw DomainError("sigma grid must start at sigma >= 0");
    if (stop < start) throw DomainError("sigma grid needs stop >= start");
    if (!(step > 0.0)) throw DomainError("sigma grid step must be positive");
    count_ = inclusive_count(start, stop, step);
}

double SigmaGrid::operator[](std::size_t k) const noexcept { return start_ + static_cast<double>(k) * step_; }

std::vector<double> SigmaGrid::points() const {
    std::vector<double> out(count_);
    for (std::size_t k = 0; k < count_; ++k) out[k] = (*this)[k];
    return out;
}

TString build_string(double t, const SigmaGrid& grid, const PrecisionSpec& spec) {
    spec.validate();
    return sample_string(t, grid, [&](const EtaArgument& s) { return eta(s, spec); });
}

TString build_string_truncated(double t, const SigmaGrid& grid, TruncationPlan plan, bool compensated_phase) {
    return sample_string(t, grid,
                         [&](const EtaArgument& s) { return eta_truncated(s, plan, compensated_phase); });
}

StringFamily build_family(double t_start, double t_stop, double t_step, const SigmaGrid& grid,
                          const PrecisionSpec& spec) {
    StringFamily family{{}, grid, t_start, t_stop, t_step};
    for (double t : t_values(t_start, t_stop, t_step)) family.strings.push_back(build_string(t, grid, spec));
    return family;
}

StringFamily build_family_truncated(double t_start, double t_stop, double t_step, const SigmaGrid& grid,
                                    TruncationPlan plan, bool compensated_phase) {
    StringFamily family{{}, grid, t_start, t_stop, t_step};
    for (double t : t_values(t_start, t_stop, t_step)) {
        family.strings.push_back(build_string_truncated(t, grid, plan, compensated_phase));
    }
    return family;
}

}  // namespace zstr
