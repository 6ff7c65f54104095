#include "zstr_cli/presets.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "zstr_cli/errors.hpp"

namespace zstr::cli {

namespace {

constexpr RangeSpec kFirstPair{111.0295, 111.8746, 0.0939};
constexpr RangeSpec kSecondPair{357.151, 357.952, 0.089};
constexpr RangeSpec kLargeSigma{22, 28, 1};

// Partial-sum figures take n from the grid's smallest sigma at p = 3, except
// the 0.4 grids, which use the sigma = 0.5 count of 2e6.
constexpr std::array kPresets{
    FigurePreset{1, "eta strings, t 19..21", {19, 21, 0.2}, {0, 1, 0.05}, {}, {}},
    FigurePreset{2, "string through the zero near t = 21.022", {21.022039639, 21.022039639, 1}, {0, 1, 0.05}, {}, {}},
    FigurePreset{3, "strings t = 1..14 approaching the first zero", {1, 14, 1}, {0.02, 0.98, 0.02}, {}, {}},
    FigurePreset{4, "string through the first zero", {14.134725, 14.134725, 1}, {0.02, 0.98, 0.02}, {}, {}},
    FigurePreset{5, "string near t = 2.7e11 with a loop by the origin", {267653395649.3623669687, 267653395649.3623669687, 1},
                 {0.48, 1.4, 0.01}, {}, "needs an evaluator for t ~ 1e11 (Riemann-Siegel class); not available"},
    FigurePreset{6, "organizing center, t 21..23", {21, 23, 0.2}, {0, 1, 0.05}, {}, {}},
    FigurePreset{7, "two centers, t 24..26", {24, 26, 0.2}, {0, 1, 0.05}, {}, {}},
    FigurePreset{8, "two centers, t 55..56.4", {55, 56.4, 0.2}, {0, 1, 0.05}, {}, {}},
    FigurePreset{9, "large sigma strings pointing at (1, 0)", kLargeSigma, {9, 10, 0.1}, {}, {}},
    FigurePreset{10, "sigma 19..20 strings", kLargeSigma, {19, 20, 0.1}, {}, {}},
    FigurePreset{11, "sigma 1.5..4", kLargeSigma, {1.5, 4, 0.1}, {}, {}},
    FigurePreset{12, "sigma 0.5..1.5", kLargeSigma, {0.5, 1.5, 0.1}, {}, {}},
    FigurePreset{13, "sigma 1..2", kLargeSigma, {1, 2, 0.1}, {}, {}},
    FigurePreset{14, "sigma 0..4", kLargeSigma, {0, 4, 0.1}, {}, {}},
    FigurePreset{15, "parallel flare, sigma 4..7", kFirstPair, {4, 7, 0.02}, {}, {}},
    FigurePreset{16, "parallel flare turning, sigma 1.5..4", kFirstPair, {1.5, 4, 0.02}, {}, {}},
    FigurePreset{17, "radial flare, sigma 0.4..1.5", kFirstPair, {0.4, 1.5, 0.01}, {}, {}},
    FigurePreset{18, "partial sum n = 12, sigma 4..7", kFirstPair, {4, 7, 0.01}, 12, {}},
    FigurePreset{19, "partial sum n = 200, sigma 1.5..4", kFirstPair, {1.5, 4, 0.01}, 200, {}},
    FigurePreset{20, "partial sum n = 2e6, sigma 0.4..1.5", kFirstPair, {0.4, 1.5, 0.01}, 2000000, {}},
    FigurePreset{21, "radial flare, sigma 0..0.5", kFirstPair, {0, 0.5, 0.01}, {}, {}},
    FigurePreset{22, "radial flare, sigma 0..0.7", kFirstPair, {0, 0.7, 0.01}, {}, {}},
    FigurePreset{23, "parallel flare, sigma 4..7", kSecondPair, {4, 7, 0.02}, {}, {}},
    FigurePreset{24, "partial sum n = 12, sigma 4..7", kSecondPair, {4, 7, 0.01}, 12, {}},
    FigurePreset{25, "sigma 1.5..4", kSecondPair, {1.5, 4, 0.01}, {}, {}},
    FigurePreset{26, "partial sum n = 200, sigma 1.5..4", kSecondPair, {1.5, 4, 0.01}, 200, {}},
    FigurePreset{27, "jumble, sigma 0.4..1.5", kSecondPair, {0.4, 1.5, 0.01}, {}, {}},
    FigurePreset{28, "partial sum n = 2e6, sigma 0.4..1.5", kSecondPair, {0.4, 1.5, 0.01}, 2000000, {}},
    FigurePreset{29, "U-turn, t = 357.596", {357.596, 357.596, 1}, {0.4, 1.5, 0.01}, {}, {}},
    FigurePreset{30, "loop, t = 357.612", {357.612, 357.612, 1}, {0.4, 1.5, 0.01}, {}, {}},
    FigurePreset{31, "radial flare, sigma 0..0.7", kSecondPair, {0, 0.7, 0.01}, {}, {}},
};

}  // namespace

std::span<const FigurePreset> figure_presets() { return kPresets; }

const FigurePreset& find_preset(int id) {
    const auto it = std::find_if(kPresets.begin(), kPresets.end(), [id](const FigurePreset& p) { return p.id == id; });
    if (it == kPresets.end()) {
        throw UsageError(fmt::format("no preset for figure {} (1..{})", id, kPresets.back().id));
    }
    return *it;
}

}  // namespace zstr::cli
