#include "zstr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zstr/errors.hpp"

namespace zstr {
namespace {

constexpr double kWindowSlack = 1e-9;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double cross(ComplexValue a, ComplexValue b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(ComplexValue a, ComplexValue b) { return a.real() * b.real() + a.imag() * b.imag(); }

struct ClosestPoints {
    double u;  // parameter on the first segment
    double v;  // parameter on the second
    double distance;
};

// Parameter of the projection of p onto segment a-b, clamped to [0, 1].
double project(ComplexValue p, ComplexValue a, ComplexValue b) {
    const ComplexValue d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
}

// Segment-segment relation: exact intersection parameters when they cross,
// otherwise the closest pair among the four endpoint projections.
ClosestPoints segment_relation(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d) {
    const ComplexValue d1 = b - a;
    const ComplexValue d2 = d - c;
    const double denom = cross(d1, d2);
    if (denom != 0.0) {
        const double u = cross(c - a, d2) / denom;
        const double v = cross(c - a, d1) / denom;
        if (u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0) return {u, v, 0.0};
    }
    ClosestPoints best{0.0, 0.0, std::numeric_limits<double>::infinity()};
    auto consider = [&](double u, double v) {
        const double dist = std::abs((a + u * d1) - (c + v * d2));
        if (dist < best.distance) best = {u, v, dist};
    };
    consider(0.0, project(a, c, d));
    consider(1.0, project(b, c, d));
    consider(project(c, a, b), 0.0);
    consider(project(d, a, b), 1.0);
    return best;
}

struct SegmentBox {
    std::size_t index;
    double xmin, xmax, ymin, ymax;
};

std::vector<CrossingReport> sweep_crossings(std::span<const ComplexValue> pts, std::span<const double> param,
                                            double gap_tolerance) {
    std::vector<CrossingReport> out;
    if (pts.size() < 4) return out;
    if (!(gap_tolerance >= 0.0)) throw DomainError("gap tolerance must be >= 0");

    const std::size_t segs = pts.size() - 1;
    const double pad = gap_tolerance / 2.0;
    std::vector<SegmentBox> boxes(segs);
    for (std::size_t i = 0; i < segs; ++i) {
        const ComplexValue a = pts[i], b = pts[i + 1];
        boxes[i] = {i,
                    std::min(a.real(), b.real()) - pad,
                    std::max(a.real(), b.real()) + pad,
                    std::min(a.imag(), b.imag()) - pad,
                    std::max(a.imag(), b.imag()) + pad};
    }
    std::sort(boxes.begin(), boxes.end(), [](const SegmentBox& l, const SegmentBox& r) {
        return l.xmin != r.xmin ? l.xmin < r.xmin : l.index < r.index;
    });

    std::vector<const SegmentBox*> active;
    for (const SegmentBox& box : boxes) {
        std::erase_if(active, [&](const SegmentBox* a) { return a->xmax < box.xmin; });
        for (const SegmentBox* other : active) {
            const std::size_t i = std::min(box.index, other->index);
            const std::size_t j = std::max(box.index, other->index);
            if (j < i + 2) continue;
            if (other->ymax < box.ymin || box.ymax < other->ymin) continue;

            const ClosestPoints rel = segment_relation(pts[i], pts[i + 1], pts[j], pts[j + 1]);
            if (rel.distance > gap_tolerance) continue;
            const ComplexValue p = pts[i] + rel.u * (pts[i + 1] - pts[i]);
            const ComplexValue q = pts[j] + rel.v * (pts[j + 1] - pts[j]);
            CrossingReport report;
            report.point = rel.distance == 0.0 ? p : 0.5 * (p + q);
            report.sigma_pair = {param[i] + rel.u * (param[i + 1] - param[i]),
                                 param[j] + rel.v * (param[j + 1] - param[j])};
            report.gap = rel.distance;
            out.push_back(report);
        }
        active.push_back(&box);
    }

    std::sort(out.begin(), out.end(), [](const CrossingReport& l, const CrossingReport& r) {
        return l.sigma_pair != r.sigma_pair ? l.sigma_pair < r.sigma_pair : l.gap < r.gap;
    });
    // A crossing through a shared vertex shows up once per adjoining segment.
    auto same = [](const CrossingReport& l, const CrossingReport& r) {
        return std::abs(l.sigma_pair.first - r.sigma_pair.first) <= 1e-12 &&
               std::abs(l.sigma_pair.second - r.sigma_pair.second) <= 1e-12;
    };
    out.erase(std::unique(out.begin(), out.end(), same), out.end());
    return out;
}

std::vector<std::size_t> window_indices(const TString& string, SigmaWindow window) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < string.samples.size(); ++k) {
        const double s = string.samples[k].sigma;
        if (s >= window.lo - kWindowSlack && s <= window.hi + kWindowSlack) idx.push_back(k);
    }
    return idx;
}

double wrap_degrees(double deg) {
    double r = std::remainder(deg, 360.0);
    if (r <= -180.0) r += 360.0;
    return r;
}

}  // namespace

double arc_length(const TString& string) {
    double total = 0.0;
    for (std::size_t k = 1; k < string.samples.size(); ++k) {
        total += std::abs(string.samples[k].value - string.samples[k - 1].value);
    }
    return total;
}

NearestApproach nearest_approach(const TString& string) {
    if (string.empty()) throw DomainError("nearest_approach needs at least one sample");
    NearestApproach best{string.samples.front().sigma, std::abs(string.samples.front().value)};
    for (const auto& s : string.samples) {
        const double d = std::abs(s.value);
        if (d < best.distance) best = {s.sigma, d};
    }
    return best;
}

std::vector<CrossingReport> self_crossings(const TString& string, double gap_tolerance) {
    std::vector<ComplexValue> pts;
    std::vector<double> sig;
    pts.reserve(string.size());
    sig.reserve(string.size());
    for (const auto& s : string.samples) {
        pts.push_back(s.value);
        sig.push_back(s.sigma);
    }
    return sweep_crossings(pts, sig, gap_tolerance);
}

std::vector<CrossingReport> polyline_self_crossings(std::span<const ComplexValue> points, double gap_tolerance) {
    std::vector<double> idx(points.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<double>(k);
    return sweep_crossings(points, idx, gap_tolerance);
}

double large_sigma_angle(double t) {
    // -2^-sigma e^{-i t ln 2} = 2^-sigma e^{i (pi - t ln 2)}
    double angle = std::remainder(std::numbers::pi - t * std::numbers::ln2, 2.0 * std::numbers::pi);
    if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
    return angle * kRadToDeg;
}

FittedLine fit_line(const TString& string, SigmaWindow window) {
    const auto idx = window_indices(string, window);
    if (idx.size() < 3) {
        throw DomainError("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                          "] selects fewer than 3 samples of the t = " + std::to_string(string.t) + " string");
    }
    ComplexValue centroid = 0.0;
    for (auto k : idx) centroid += string.samples[k].value;
    centroid /= static_cast<double>(idx.size());

    double sxx = 0.0, syy = 0.0, sxy = 0.0, length = 0.0;
    for (std::size_t m = 0; m < idx.size(); ++m) {
        const ComplexValue d = string.samples[idx[m]].value - centroid;
        sxx += d.real() * d.real();
        syy += d.imag() * d.imag();
        sxy += d.real() * d.imag();
        if (m > 0) length += std::abs(string.samples[idx[m]].value - string.samples[idx[m - 1]].value);
    }
    const double mean = 0.5 * (sxx + syy);
    const double radius = std::hypot(0.5 * (sxx - syy), sxy);
    const double major = mean + radius;
    const double minor = std::max(0.0, mean - radius);
    if (!(major > 0.0)) {
        throw DegenerateGeometryError("all windowed samples of the t = " + std::to_string(string.t) +
                                      " string coincide");
    }
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    ComplexValue dir = std::polar(1.0, theta);
    const ComplexValue toward_low = string.samples[idx.front()].value - string.samples[idx.back()].value;
    if (dot(dir, toward_low) < 0.0) dir = -dir;
    return {centroid, dir, length, std::sqrt(minor / major)};
}

CenterFit concurrency_point(std::span<const FittedLine> lines) {
    if (lines.size() < 2) throw DomainError("a concurrency point needs at least two lines");
    // Normal equations sum (I - d d^T) x = sum (I - d d^T) c.
    double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
    for (const auto& l : lines) {
        const double dx = l.direction.real(), dy = l.direction.imag();
        const double p11 = 1.0 - dx * dx, p12 = -dx * dy, p22 = 1.0 - dy * dy;
        a11 += p11;
        a12 += p12;
        a22 += p22;
        b1 += p11 * l.centroid.real() + p12 * l.centroid.imag();
        b2 += p12 * l.centroid.real() + p22 * l.centroid.imag();
    }
    const double mean = 0.5 * (a11 + a22);
    const double radius = std::hypot(0.5 * (a11 - a22), a12);
    const double lmax = mean + radius, lmin = mean - radius;
    if (!(lmin > 0.0) || lmax / lmin > kMaxCenterConditionNumber) {
        throw IllConditionedError("fitted lines are (nearly) parallel; no finite concurrency point");
    }
    const double det = a11 * a22 - a12 * a12;
    const ComplexValue center((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det);

    double sum_sq = 0.0;
    for (const auto& l : lines) {
        const double perp = cross(l.direction, center - l.centroid);
        sum_sq += perp * perp;
    }
    return {center, std::sqrt(sum_sq / static_cast<double>(lines.size()))};
}

namespace {

std::vector<FittedLine> fit_family(const StringFamily& family, SigmaWindow window, std::size_t min_strings) {
    if (family.strings.size() < min_strings) {
        throw DomainError("need at least " + std::to_string(min_strings) + " strings, family has " +
                          std::to_string(family.strings.size()));
    }
    std::vector<FittedLine> lines;
    lines.reserve(family.strings.size());
    for (const auto& s : family.strings) lines.push_back(fit_line(s, window));
    return lines;
}

}  // namespace

CenterFit fit_center(const StringFamily& family, SigmaWindow window) {
    const auto lines = fit_family(family, window, 3);
    return concurrency_point(lines);
}

const char* to_string(FlareKind kind) noexcept {
    switch (kind) {
        case FlareKind::Parallel: return "Parallel";
        case FlareKind::Radial: return "Radial";
        case FlareKind::Jumble: return "Jumble";
    }
    return "?";
}

FlareReport classify_lines(std::span<const FittedLine> lines, const FlareThresholds& thresholds) {
    if (lines.size() < 3) throw DomainError("flare classification needs at least 3 strings");

    std::vector<double> angles;
    ComplexValue mean_dir = 0.0;
    for (const auto& l : lines) {
        angles.push_back(std::arg(l.direction) * kRadToDeg);
        mean_dir += l.direction;
    }
    std::sort(angles.begin(), angles.end());
    double widest_gap = angles.front() + 360.0 - angles.back();
    for (std::size_t k = 1; k < angles.size(); ++k) widest_gap = std::max(widest_gap, angles[k] - angles[k - 1]);

    FlareReport report;
    report.spread_deg = 360.0 - widest_gap;
    report.residual = std::numeric_limits<double>::quiet_NaN();

    if (report.spread_deg < thresholds.parallel_spread_deg) {
        report.kind = FlareKind::Parallel;
        report.direction_deg = wrap_degrees(std::arg(mean_dir) * kRadToDeg);
        return report;
    }

    try {
        const CenterFit fit = concurrency_point(lines);
        double sum_sq = 0.0;
        for (const auto& l : lines) sum_sq += std::norm(l.centroid - fit.center);
        const double rms_distance = std::sqrt(sum_sq / static_cast<double>(lines.size()));
        report.residual = rms_distance > 0.0 ? fit.residual / rms_distance : 0.0;
        if (report.residual < thresholds.radial_residual) {
            report.kind = FlareKind::Radial;
            report.center = fit.center;
            return report;
        }
    } catch (const IllConditionedError&) {
        // no finite center
    }
    report.kind = FlareKind::Jumble;
    return report;
}

FlareReport classify_flare(const StringFamily& family, SigmaWindow window, const FlareThresholds& thresholds) {
    const auto lines = fit_family(family, window, 3);
    return classify_lines(lines, thresholds);
}

}  // namespace zstr
