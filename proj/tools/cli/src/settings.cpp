#include "zstr_cli/settings.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "zstr/errors.hpp"
#include "zstr_cli/errors.hpp"
#include "zstr_cli/ranges.hpp"

namespace zstr::cli {

namespace {

std::string lower(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_precision(std::string_view text, std::string_view what) {
    const double p = parse_real(text, what);
    if (!(p > 0.0)) throw UsageError(fmt::format("{}: precision must be positive, got '{}'", what, text));
    return p;
}

Strategy parse_strategy_setting(std::string_view text, std::string_view what) {
    try {
        return parse_strategy(text);
    } catch (const DomainError&) {
        throw UsageError(fmt::format("{}: unknown strategy '{}' (truncated or accelerated)", what, text));
    }
}

template <typename T>
void overlay(std::optional<T>& into, const std::optional<T>& from) {
    if (from) into = from;
}

}  // namespace

EnvLookup process_environment() {
    return [](const std::string& name) -> std::optional<std::string> {
        if (const char* v = std::getenv(name.c_str())) return std::string(v);
        return std::nullopt;
    };
}

bool parse_bool(std::string_view text, std::string_view what) {
    const std::string s = lower(text);
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw UsageError(fmt::format("{}: expected a boolean, got '{}'", what, text));
}

SettingLayer layer_from_environment(const EnvLookup& env) {
    SettingLayer layer;
    if (auto v = env("ZSTR_PRECISION")) layer.precision = parse_precision(*v, "ZSTR_PRECISION");
    if (auto v = env("ZSTR_STRATEGY")) layer.strategy = parse_strategy_setting(*v, "ZSTR_STRATEGY");
    if (auto v = env("ZSTR_COMPENSATED_PHASE")) layer.compensated_phase = parse_bool(*v, "ZSTR_COMPENSATED_PHASE");
    if (auto v = env("ZSTR_CACHE_DIR"); v && !v->empty()) layer.cache_dir = *v;
    return layer;
}

SettingLayer layer_from_config_file(const std::filesystem::path& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path.string(), tree);
    } catch (const pt::ini_parser_error& e) {
        if (e.line() == 0) throw IoError(fmt::format("cannot read config file {}", path.string()));
        throw UsageError(fmt::format("config file {}: {}", path.string(), e.message()));
    }
    SettingLayer layer;
    for (const auto& [key, node] : tree) {
        if (!node.empty()) throw UsageError(fmt::format("config file {}: sections are not supported", path.string()));
        const std::string value = node.data();
        const std::string what = fmt::format("{}: {}", path.string(), key);
        if (key == "precision") layer.precision = parse_precision(value, what);
        else if (key == "strategy") layer.strategy = parse_strategy_setting(value, what);
        else if (key == "compensated_phase") layer.compensated_phase = parse_bool(value, what);
        else if (key == "cache_dir") layer.cache_dir = value;
        else throw UsageError(fmt::format("config file {}: unknown key '{}'", path.string(), key));
    }
    return layer;
}

Settings resolve_settings(const SettingLayer& flags, const SettingLayer& env, const SettingLayer& file) {
    SettingLayer merged;
    for (const SettingLayer* layer : {&file, &env, &flags}) {
        overlay(merged.precision, layer->precision);
        overlay(merged.strategy, layer->strategy);
        overlay(merged.compensated_phase, layer->compensated_phase);
        overlay(merged.cache_dir, layer->cache_dir);
    }
    Settings s;
    if (merged.precision) s.spec.p = *merged.precision;
    if (merged.strategy) s.spec.strategy = *merged.strategy;
    if (merged.compensated_phase) s.spec.compensated_phase = *merged.compensated_phase;
    s.cache_dir = merged.cache_dir;
    return s;
}

}  // namespace zstr::cli
