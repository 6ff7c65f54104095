#include "zstr_cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "zstr_cli/errors.hpp"

namespace zstr::cli {

namespace {

constexpr double kMargin = 20.0;

constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                         "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string xml_escape(std::string_view text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Pixel coordinate with two decimals; never "-0.00".
std::string pixel(double v) {
    const double r = std::round(v * 100.0) / 100.0;
    return fmt::format("{:.2f}", r == 0.0 ? 0.0 : r);
}

ComplexValue shifted(ComplexValue z, bool subtract_one) { return subtract_one ? z - 1.0 : z; }

struct Viewport {
    double x0, y0, x1, y1;
    double sx, sy;
    double ox, oy;

    [[nodiscard]] double px(double x) const { return ox + (x - x0) * sx; }
    [[nodiscard]] double py(double y) const { return oy - (y - y0) * sy; }
};

Viewport fit_viewport(std::span<const TString> strings, const RenderSpec& spec) {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    for (const auto& s : strings) {
        for (const auto& sample : s.samples) {
            const ComplexValue z = shifted(sample.value, spec.subtract_one);
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    }
    if (!(x0 <= x1)) x0 = y0 = -1.0, x1 = y1 = 1.0;
    // Give a degenerate extent the size of the other one, or a unit box.
    const double extent = std::max({x1 - x0, y1 - y0, 0.0});
    const double pad = extent > 0.0 ? extent : 1.0;
    if (x1 - x0 <= 0.0) x0 -= pad / 2, x1 += pad / 2;
    if (y1 - y0 <= 0.0) y0 -= pad / 2, y1 += pad / 2;

    const double w = spec.width - 2 * kMargin;
    const double h = spec.height - 2 * kMargin;
    double sx = w / (x1 - x0);
    double sy = h / (y1 - y0);
    if (spec.equal_axes) sx = sy = std::min(sx, sy);
    const double ox = kMargin + (w - (x1 - x0) * sx) / 2;
    const double oy = spec.height - kMargin - (h - (y1 - y0) * sy) / 2;
    return {x0, y0, x1, y1, sx, sy, ox, oy};
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "svg") return Format::Svg;
    throw UsageError(fmt::format("unknown format '{}' (csv or svg)", name));
}

std::string format_number(double v) { return fmt::format("{:.12g}", v == 0.0 ? 0.0 : v); }

std::string strings_csv(std::span<const TString> strings, bool subtract_one) {
    std::string out = "t,sigma,re,im\n";
    for (const auto& s : strings) {
        for (const auto& sample : s.samples) {
            const ComplexValue z = shifted(sample.value, subtract_one);
            out += fmt::format("{},{},{},{}\n", format_number(s.t), format_number(sample.sigma),
                               format_number(z.real()), format_number(z.imag()));
        }
    }
    return out;
}

std::string zeros_csv(std::span<const ZeroRecord> zeros) {
    std::string out = "t,kind,sigma,residual,k\n";
    for (const auto& z : zeros) {
        out += fmt::format("{},{},{},{},{}\n", format_number(z.t), to_string(z.kind), format_number(z.sigma),
                           format_number(z.residual), z.k ? fmt::format("{}", *z.k) : std::string());
    }
    return out;
}

std::string crossings_csv(std::span<const CrossingReport> crossings) {
    std::string out = "sigma_a,sigma_b,re,im,gap\n";
    for (const auto& c : crossings) {
        out += fmt::format("{},{},{},{},{}\n", format_number(c.sigma_pair.first), format_number(c.sigma_pair.second),
                           format_number(c.point.real()), format_number(c.point.imag()), format_number(c.gap));
    }
    return out;
}

std::string strings_svg(std::span<const TString> strings, const RenderSpec& spec, std::string_view title) {
    if (spec.width <= 2 * kMargin || spec.height <= 2 * kMargin) {
        throw UsageError(fmt::format("SVG size must exceed {} pixels per side", 2 * kMargin));
    }
    if (!(spec.dot_radius > 0.0)) throw UsageError("dot radius must be positive");
    const Viewport v = fit_viewport(strings, spec);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n",
        spec.width, spec.height);
    out += fmt::format("<title>{}</title>\n", xml_escape(title));
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", spec.width, spec.height);

    out += "<g class=\"axes\" stroke=\"#999999\" stroke-width=\"0.5\">\n";
    if (v.x0 <= 0.0 && 0.0 <= v.x1) {
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", pixel(v.px(0.0)), pixel(v.py(v.y0)),
                           pixel(v.py(v.y1)));
    }
    if (v.y0 <= 0.0 && 0.0 <= v.y1) {
        out += fmt::format("<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>\n", pixel(v.py(0.0)), pixel(v.px(v.x0)),
                           pixel(v.px(v.x1)));
    }
    out += "</g>\n";

    for (std::size_t i = 0; i < strings.size(); ++i) {
        const auto& s = strings[i];
        const std::string_view color = kPalette[i % std::size(kPalette)];
        out += fmt::format("<g class=\"string\" data-t=\"{}\" fill=\"{}\">\n", format_number(s.t), color);
        std::string points;
        for (const auto& sample : s.samples) {
            const ComplexValue z = shifted(sample.value, spec.subtract_one);
            if (!points.empty()) points += ' ';
            points += pixel(v.px(z.real())) + "," + pixel(v.py(z.imag()));
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"0.5\" points=\"{}\"/>\n", color,
                           points);
        for (const auto& sample : s.samples) {
            const ComplexValue z = shifted(sample.value, spec.subtract_one);
            out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", pixel(v.px(z.real())),
                               pixel(v.py(z.imag())), pixel(spec.dot_radius));
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render(std::span<const TString> strings, const RenderSpec& spec, std::string_view title) {
    return spec.format == Format::Csv ? strings_csv(strings, spec.subtract_one) : strings_svg(strings, spec, title);
}

}  // namespace zstr::cli
