#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zstr/geometry.hpp"
#include "zstr/strings.hpp"
#include "zstr/zeros.hpp"

namespace zstr::cli {

enum class Format { Csv, Svg };

Format parse_format(std::string_view name);

struct RenderSpec {
    Format format = Format::Csv;
    int width = 800;
    int height = 800;
    bool equal_axes = true;
    double dot_radius = 2.0;
    /// Shift the origin to (1, 0).
    bool subtract_one = false;
};

/// 12 significant digits, negative zero printed as 0.
std::string format_number(double v);

/// Header t,sigma,re,im; rows by t then sigma; '\n' line endings.
std::string strings_csv(std::span<const TString> strings, bool subtract_one = false);

/// Header t,kind,sigma,residual,k; k is empty for nontrivial zeros.
std::string zeros_csv(std::span<const ZeroRecord> zeros);

/// Header sigma_a,sigma_b,re,im,gap.
std::string crossings_csv(std::span<const CrossingReport> crossings);

/// SVG 1.1; one <g class="string"> per string holding a polyline and a dot
/// per sample.
std::string strings_svg(std::span<const TString> strings, const RenderSpec& spec, std::string_view title);

std::string render(std::span<const TString> strings, const RenderSpec& spec, std::string_view title);

}  // namespace zstr::cli
