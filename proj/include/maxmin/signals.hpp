#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxmin {

enum class SignalKind { uniform, sine, ramp_up, ramp_down, constant, piecewise, alternating };

/// Deterministic test signal. Only the fields relevant to `kind` are read.
struct SignalSpec {
    SignalKind kind = SignalKind::uniform;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t period = 10'000; // sine
    std::size_t segments = 16;   // piecewise
    double level = 0.0;          // constant
};

std::string_view to_string(SignalKind kind);
SignalKind parse_signal_kind(std::string_view name);
const std::vector<SignalKind>& all_signal_kinds();

/// Depends only on the SignalSpec fields:
///   uniform      i.i.d. in [0, 1) from a seeded 64-bit Mersenne Twister (53-bit mantissa draw)
///   sine         sin(2*pi*i / period)
///   ramp_up      0, 1, 2, ...
///   ramp_down    n-1, n-2, ..., 0
///   constant     level
///   alternating  i mod 2
///   piecewise    `segments` strictly monotone runs of seeded steps in (0, 1], alternating direction
/// Throws maxmin::error for n = 0, period < 2, segments outside [1, n], or a NaN level.
std::vector<double> generate(const SignalSpec& spec);

} // namespace maxmin
