#include "maxmin/signals.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "maxmin/types.hpp"

namespace maxmin {

namespace {

// Portable [0, 1) draw; std::uniform_real_distribution differs between standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

std::string_view to_string(SignalKind kind) {
    switch (kind) {
    case SignalKind::uniform: return "uniform";
    case SignalKind::sine: return "sine";
    case SignalKind::ramp_up: return "ramp_up";
    case SignalKind::ramp_down: return "ramp_down";
    case SignalKind::constant: return "constant";
    case SignalKind::piecewise: return "piecewise";
    case SignalKind::alternating: return "alternating";
    }
    return "?";
}

const std::vector<SignalKind>& all_signal_kinds() {
    static const std::vector<SignalKind> kinds{SignalKind::uniform,  SignalKind::sine,      SignalKind::ramp_up,
                                               SignalKind::ramp_down, SignalKind::constant, SignalKind::piecewise,
                                               SignalKind::alternating};
    return kinds;
}

SignalKind parse_signal_kind(std::string_view name) {
    for (SignalKind k : all_signal_kinds()) {
        if (to_string(k) == name) { return k; }
    }
    throw error("unknown signal '" + std::string(name) + "'");
}

std::vector<double> generate(const SignalSpec& spec) {
    const std::size_t n = spec.n;
    if (n == 0) { throw error("signal length must be at least 1"); }
    std::vector<double> a(n);
    switch (spec.kind) {
    case SignalKind::uniform: {
        std::mt19937_64 rng(spec.seed);
        for (auto& x : a) { x = unit(rng); }
        break;
    }
    case SignalKind::sine: {
        if (spec.period < 2) { throw error("sine period must be at least 2"); }
        const double step = 2.0 * std::numbers::pi / static_cast<double>(spec.period);
        for (std::size_t i = 0; i < n; ++i) { a[i] = std::sin(step * static_cast<double>(i)); }
        break;
    }
    case SignalKind::ramp_up:
        for (std::size_t i = 0; i < n; ++i) { a[i] = static_cast<double>(i); }
        break;
    case SignalKind::ramp_down:
        for (std::size_t i = 0; i < n; ++i) { a[i] = static_cast<double>(n - 1 - i); }
        break;
    case SignalKind::constant:
        if (std::isnan(spec.level)) { throw error("constant level must not be NaN"); }
        for (auto& x : a) { x = spec.level; }
        break;
    case SignalKind::alternating:
        for (std::size_t i = 0; i < n; ++i) { a[i] = static_cast<double>(i % 2); }
        break;
    case SignalKind::piecewise: {
        if (spec.segments == 0 || spec.segments > n) { throw error("piecewise segments must be in [1, n]"); }
        std::mt19937_64 rng(spec.seed);
        double v = 0.0;
        std::size_t i = 0;
        for (std::size_t s = 0; s < spec.segments; ++s) {
            const std::size_t end = (n * (s + 1)) / spec.segments;
            const double dir = (s % 2 == 0) ? 1.0 : -1.0;
            for (; i < end; ++i) {
                v += dir * (1.0 - unit(rng)); // step in (0, 1]
                a[i] = v;
            }
        }
        break;
    }
    }
    return a;
}

} // namespace maxmin
