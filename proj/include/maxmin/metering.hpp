#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace maxmin {

enum class Algorithm { wedge, naive, vhgw, w3 };

std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);

struct RunMetrics {
    std::size_t n = 0;
    std::size_t w = 0;
    std::uint64_t comparisons = 0;
    /// Largest size(U) + size(L) seen at the start of an ingest step; wedge only.
    std::optional<std::size_t> peak_wedge_size;
    /// Largest number of samples read past a window's end before its result was released.
    std::uint64_t emit_lag_max = 0;
    double wall_time_s = 0.0;

    [[nodiscard]] double cmp_per_elem() const noexcept {
        return n == 0 ? 0.0 : static_cast<double>(comparisons) / static_cast<double>(n);
    }
};

struct MeteredRun {
    ExtremaSeries<double> series;
    RunMetrics metrics;
};

/// Runs `algo` with every value comparison routed through one OrderProbe.
/// Wall time covers the algorithm only. Algorithm errors propagate.
MeteredRun metered_run(Algorithm algo, std::span<const double> a, Window window);

/// Same computation with the plain operator< (no counting); returns wall seconds.
/// With `positions` off, the wedge skips its argmax/argmin columns (vhgw never has them).
double timed_run(Algorithm algo, std::span<const double> a, Window window, bool positions = true);

} // namespace maxmin
