#pragma once

#include <string>
#include <string_view>

namespace zstr::cli {

/// start:stop:step, mirroring the {x, start, stop, step} table form.
struct RangeSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

/// Interval lo:hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Parses one finite decimal; throws UsageError naming the flag.
double parse_real(std::string_view text, std::string_view flag);
/// "a:b:c", or a bare "a" meaning the single point a:a:1.
RangeSpec parse_range(std::string_view text, std::string_view flag);
/// "lo:hi" with lo <= hi.
Interval parse_interval(std::string_view text, std::string_view flag);

/// Round-trippable text for cache keys.
std::string canonical(const RangeSpec& r);
std::string canonical(const Interval& i);

}  // namespace zstr::cli
