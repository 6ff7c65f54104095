#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "zstr_cli/ranges.hpp"

namespace zstr::cli {

/// Table parameters of a published string figure.
struct FigurePreset {
    int id;
    std::string_view caption;
    RangeSpec t;
    RangeSpec sigma;
    /// Fixed number of summed terms for the partial-sum figures.
    std::optional<std::int64_t> fixed_terms;
    /// Non-empty when no evaluator here can reproduce the figure.
    std::string_view unavailable;
};

std::span<const FigurePreset> figure_presets();

/// Throws UsageError for an unknown id.
const FigurePreset& find_preset(int id);

}  // namespace zstr::cli
