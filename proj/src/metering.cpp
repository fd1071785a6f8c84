#include "maxmin/metering.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include "maxmin/baselines.hpp"
#include "maxmin/probe.hpp"
#include "maxmin/w3.hpp"
#include "maxmin/wedge.hpp"

namespace maxmin {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct LagTracker {
    std::size_t w;
    std::size_t emitted = 0;
    std::uint64_t* max_lag;

    void operator()(std::size_t consumed, std::size_t emitted_now) {
        if (emitted_now > emitted) {
            // The earliest newly released window ends at sample emitted + w - 1.
            const std::uint64_t lag = consumed - (emitted + w);
            *max_lag = std::max(*max_lag, lag);
            emitted = emitted_now;
        }
    }
};

void check_w3(Window window) {
    if (window.width() != 3) { throw invalid_window("w3 requires a window of 3"); }
}

} // namespace

std::string_view to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::wedge: return "wedge";
    case Algorithm::naive: return "naive";
    case Algorithm::vhgw: return "vhgw";
    case Algorithm::w3: return "w3";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::wedge, Algorithm::naive, Algorithm::vhgw, Algorithm::w3}) {
        if (to_string(a) == name) { return a; }
    }
    throw error("unknown algorithm '" + std::string(name) + "'");
}

MeteredRun metered_run(Algorithm algo, std::span<const double> a, Window window) {
    OrderProbe<> probe;
    MeteredRun run;
    RunMetrics& m = run.metrics;
    m.n = a.size();
    m.w = window.width();
    LagTracker lag{window.width(), 0, &m.emit_lag_max};

    Clock::time_point t0;
    switch (algo) {
    case Algorithm::wedge: {
        const std::size_t count = window.windows_over(a.size());
        WedgeFilter<double, CountingLess<std::less<>>> filter(window, probe.predicate());
        run.series.reserve(count);
        t0 = Clock::now();
        for (const double x : a) {
            if (auto r = filter.push(x)) {
                lag(static_cast<std::size_t>(filter.next_position()), static_cast<std::size_t>(r->window_end - m.w + 2));
                run.series.push(*r);
            }
        }
        m.wall_time_s = seconds_since(t0);
        m.peak_wedge_size = filter.peak_wedge_size();
        break;
    }
    case Algorithm::naive:
        t0 = Clock::now();
        run.series = naive_run(a, window, probe.predicate(), std::ref(lag));
        m.wall_time_s = seconds_since(t0);
        break;
    case Algorithm::vhgw:
        t0 = Clock::now();
        run.series = vhgw_run(a, window, probe.predicate(), std::ref(lag));
        m.wall_time_s = seconds_since(t0);
        break;
    case Algorithm::w3:
        check_w3(window);
        t0 = Clock::now();
        run.series = run_w3(a, probe.predicate(), std::ref(lag));
        m.wall_time_s = seconds_since(t0);
        break;
    }
    m.comparisons = probe.count();
    return run;
}

double timed_run(Algorithm algo, std::span<const double> a, Window window, bool positions) {
    const auto t0 = Clock::now();
    ExtremaSeries<double> out;
    switch (algo) {
    case Algorithm::wedge:
        out = positions ? wedge_run(a, window, std::less<double>{}) : wedge_values(a, window, std::less<double>{});
        break;
    case Algorithm::naive: out = naive_run(a, window, std::less<double>{}); break;
    case Algorithm::vhgw: out = vhgw_run(a, window, std::less<double>{}); break;
    case Algorithm::w3:
        check_w3(window);
        out = run_w3(a, std::less<double>{});
        break;
    }
    const double t = seconds_since(t0);
    if (out.size() != window.windows_over(a.size())) { throw error("internal: unexpected output length"); }
    return t;
}

} // namespace maxmin
