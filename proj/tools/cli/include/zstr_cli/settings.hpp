#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "zstr/eta.hpp"

namespace zstr::cli {

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the real process environment.
EnvLookup process_environment();

/// One configuration layer; unset fields defer to the layer below.
struct SettingLayer {
    std::optional<double> precision;
    std::optional<Strategy> strategy;
    std::optional<bool> compensated_phase;
    std::optional<std::filesystem::path> cache_dir;
};

struct Settings {
    PrecisionSpec spec;
    std::optional<std::filesystem::path> cache_dir;
};

/// ZSTR_PRECISION, ZSTR_STRATEGY, ZSTR_COMPENSATED_PHASE, ZSTR_CACHE_DIR.
SettingLayer layer_from_environment(const EnvLookup& env);

/// key=value file with keys precision, strategy, compensated_phase, cache_dir.
/// Throws IoError if unreadable, UsageError on unknown keys or bad values.
SettingLayer layer_from_config_file(const std::filesystem::path& path);

/// flags > environment > config file > defaults.
Settings resolve_settings(const SettingLayer& flags, const SettingLayer& env, const SettingLayer& file);

bool parse_bool(std::string_view text, std::string_view what);

}  // namespace zstr::cli
