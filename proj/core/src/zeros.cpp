#include "zstr/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zstr/errors.hpp"
#include "zstr/parallel.hpp"
#include "zstr/strings.hpp"

namespace zstr {
namespace {

constexpr double kCriticalLine = 0.5;
constexpr double kTrivialLine = 1.0;

double modulus(double sigma, double t, const PrecisionSpec& spec) {
    return std::abs(eta(EtaArgument(sigma, t), spec));
}

std::int64_t nearest_trivial_index(double t) {
    return static_cast<std::int64_t>(std::nearbyint(t * std::numbers::ln2 / (2.0 * std::numbers::pi)));
}

// Grid indices of local minima below the threshold. Runs of equal values
// count once, at their first index.
std::vector<std::size_t> grid_minima(const std::vector<double>& f, double threshold) {
    std::vector<std::size_t> out;
    const std::size_t n = f.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(f[k] < threshold)) continue;
        if (k > 0 && f[k - 1] <= f[k]) continue;
        std::size_t end = k;
        while (end + 1 < n && f[end + 1] == f[k]) ++end;
        if (end + 1 < n && f[end + 1] < f[k]) continue;
        out.push_back(k);
    }
    return out;
}

}  // namespace

const char* to_string(ZeroKind kind) noexcept {
    return kind == ZeroKind::TrivialEta ? "trivial" : "nontrivial";
}

void ScanConfig::validate() const {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_max > t_min)) {
        throw DomainError("zero scan needs finite t_max > t_min");
    }
    if (!(step > 0.0)) throw DomainError("zero scan step must be positive");
    if (t_min <= 100.0 && step > 0.5) {
        throw DomainError("zero scan step must be <= 0.5 for t <= 100 to bracket every zero");
    }
    if (!(detect_threshold > 0.0) || !(refine_tolerance > 0.0) || !(residual_tolerance > 0.0)) {
        throw DomainError("zero scan thresholds and tolerances must be positive");
    }
    spec.validate();
}

ZeroRecord refine_zero(double t_lo, double t_hi, double sigma, const ScanConfig& config) {
    if (!(t_hi > t_lo)) throw DomainError("refinement bracket needs t_hi > t_lo");
    if (!(config.refine_tolerance > 0.0)) throw DomainError("refine tolerance must be positive");

    auto f = [&](double t) { return modulus(sigma, t, config.spec); };

    constexpr double kInvPhi = 0.6180339887498948482;
    double a = t_lo, b = t_hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    double best_t = fc <= fd ? c : d;
    double best_f = std::min(fc, fd);
    while (b - a > config.refine_tolerance) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            if (fc < best_f) best_t = c, best_f = fc;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            if (fd < best_f) best_t = d, best_f = fd;
        }
    }

    const double edge = 2.0 * config.refine_tolerance;
    if (best_t - t_lo < edge || t_hi - best_t < edge) {
        throw NoZeroInBracketError("|eta| decreases toward the edge of [" + std::to_string(t_lo) + ", " +
                                   std::to_string(t_hi) + "] at sigma = " + std::to_string(sigma));
    }
    if (!(best_f <= config.residual_tolerance)) {
        throw NoZeroInBracketError("minimum |eta| = " + std::to_string(best_f) + " in [" + std::to_string(t_lo) +
                                   ", " + std::to_string(t_hi) + "] at sigma = " + std::to_string(sigma) +
                                   " is not a zero");
    }

    ZeroRecord rec;
    rec.t = best_t;
    rec.sigma = sigma;
    rec.residual = best_f;
    if (sigma == kTrivialLine) {
        rec.kind = ZeroKind::TrivialEta;
        if (const auto k = nearest_trivial_index(best_t); k >= 1) rec.k = k;
    } else {
        rec.kind = ZeroKind::NonTrivial;
    }
    return rec;
}

ZeroRecord classify_zero(const ZeroRecord& record, const PrecisionSpec& spec, double tolerance) {
    const double t = record.t;
    const std::int64_t k = nearest_trivial_index(t);
    if (k >= 1 && std::abs(t - trivial_zero_t(k)) < kTrivialMatchTolerance) {
        const double r1 = modulus(kTrivialLine, t, spec);
        if (r1 < tolerance) return {t, ZeroKind::TrivialEta, kTrivialLine, r1, k};
    }
    const double r05 = modulus(kCriticalLine, t, spec);
    if (r05 < tolerance) return {t, ZeroKind::NonTrivial, kCriticalLine, r05, std::nullopt};
    throw ClassificationError("t = " + std::to_string(t) + " is not a zero on sigma = 1/2 or sigma = 1");
}

std::vector<ZeroRecord> scan_zeros(const ScanConfig& config) {
    config.validate();
    const std::size_t n = inclusive_count(config.t_min, config.t_max, config.step);
    std::vector<double> ts(n);
    for (std::size_t k = 0; k < n; ++k) ts[k] = config.t_min + static_cast<double>(k) * config.step;

    std::vector<ZeroRecord> found;
    for (const double sigma : {kCriticalLine, kTrivialLine}) {
        std::vector<double> f(n);
        detail::parallel_for(n, [&](std::size_t k) { f[k] = modulus(sigma, ts[k], config.spec); });

        for (const std::size_t k : grid_minima(f, config.detect_threshold)) {
            try {
                ZeroRecord rec = refine_zero(ts[k] - config.step, ts[k] + config.step, sigma, config);
                if (rec.t < config.t_min || rec.t > config.t_max) continue;
                found.push_back(classify_zero(rec, config.spec));
            } catch (const NoZeroInBracketError&) {
                // a local minimum that is not a zero
            } catch (const ClassificationError&) {
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.t != b.t ? a.t < b.t : a.kind < b.kind;
    });
    const double same_zero = std::max(10.0 * config.refine_tolerance, 1e-7);
    found.erase(std::unique(found.begin(), found.end(),
                            [&](const ZeroRecord& a, const ZeroRecord& b) {
                                return a.kind == b.kind && std::abs(a.t - b.t) < same_zero;
                            }),
                found.end());
    return found;
}

double verify_modified_reflection(const ZeroRecord& record, const PrecisionSpec& spec) {
    return modulus(1.0 - record.sigma, record.t, spec);
}

}  // namespace zstr
