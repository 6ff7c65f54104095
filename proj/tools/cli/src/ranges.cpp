#include "zstr_cli/ranges.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "zstr_cli/errors.hpp"

namespace zstr::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end == std::string_view::npos ? end : end - begin));
        if (end == std::string_view::npos) return parts;
        begin = end + 1;
    }
}

}  // namespace

double parse_real(std::string_view text, std::string_view flag) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw UsageError(fmt::format("{}: '{}' is not a finite number", flag, text));
    }
    return v;
}

RangeSpec parse_range(std::string_view text, std::string_view flag) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        const double v = parse_real(parts[0], flag);
        return {v, v, 1.0};
    }
    if (parts.size() != 3) throw UsageError(fmt::format("{}: expected start:stop:step, got '{}'", flag, text));
    RangeSpec r{parse_real(parts[0], flag), parse_real(parts[1], flag), parse_real(parts[2], flag)};
    if (r.stop < r.start) throw UsageError(fmt::format("{}: stop is below start in '{}'", flag, text));
    if (!(r.step > 0.0)) throw UsageError(fmt::format("{}: step must be positive in '{}'", flag, text));
    return r;
}

Interval parse_interval(std::string_view text, std::string_view flag) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError(fmt::format("{}: expected lo:hi, got '{}'", flag, text));
    Interval i{parse_real(parts[0], flag), parse_real(parts[1], flag)};
    if (i.hi < i.lo) throw UsageError(fmt::format("{}: hi is below lo in '{}'", flag, text));
    return i;
}

std::string canonical(const RangeSpec& r) { return fmt::format("{:a}:{:a}:{:a}", r.start, r.stop, r.step); }

std::string canonical(const Interval& i) { return fmt::format("{:a}:{:a}", i.lo, i.hi); }

}  // namespace zstr::cli
