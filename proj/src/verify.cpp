#include "maxmin/verify.hpp"

#include <random>

#include "maxmin/oracle.hpp"

namespace maxmin {

namespace {

std::optional<std::string> exceeds(const char* what, std::uint64_t got, std::uint64_t limit) {
    if (got <= limit) { return std::nullopt; }
    return std::string(what) + ": " + std::to_string(got) + " > " + std::to_string(limit);
}

SuiteEntry metered_entry(Algorithm algo) {
    SuiteEntry e;
    e.name = std::string(to_string(algo));
    e.run = [algo](std::span<const double> a, Window w) { return metered_run(algo, a, w); };
    e.applies = [](std::size_t, std::size_t) { return true; };
    return e;
}

} // namespace

std::size_t adjacent_equal_pairs(std::span<const double> a) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < a.size(); ++i) { k += (a[i] == a[i - 1]) ? 1 : 0; }
    return k;
}

std::vector<SuiteEntry> default_suite() {
    std::vector<SuiteEntry> suite;

    SuiteEntry wedge = metered_entry(Algorithm::wedge);
    wedge.bounds = [](std::span<const double> a, const RunMetrics& m) -> std::optional<std::string> {
        const std::uint64_t n = m.n;
        const std::uint64_t ties = adjacent_equal_pairs(a);
        const std::uint64_t limit = ties == 0 ? 3 * n : 3 * n - 2 + ties;
        if (auto v = exceeds("wedge comparisons", m.comparisons, limit)) { return v; }
        if (auto v = exceeds("peak wedge size", m.peak_wedge_size.value_or(0), m.w + 1)) { return v; }
        return exceeds("wedge emit lag", m.emit_lag_max, 0);
    };
    suite.push_back(std::move(wedge));

    SuiteEntry naive = metered_entry(Algorithm::naive);
    naive.bounds = [](std::span<const double>, const RunMetrics& m) -> std::optional<std::string> {
        const std::uint64_t expected = (m.n - m.w + 1) * 2 * (m.w - 1);
        if (m.comparisons != expected) {
            return "naive comparisons: " + std::to_string(m.comparisons) + " != " + std::to_string(expected);
        }
        return std::nullopt;
    };
    suite.push_back(std::move(naive));

    SuiteEntry w3 = metered_entry(Algorithm::w3);
    w3.applies = [](std::size_t, std::size_t w) { return w == 3; };
    w3.bounds = [](std::span<const double>, const RunMetrics& m) {
        return exceeds("w3 comparisons", m.comparisons, 2 * m.n);
    };
    suite.push_back(std::move(w3));

    SuiteEntry vhgw = metered_entry(Algorithm::vhgw);
    vhgw.applies = [](std::size_t, std::size_t w) { return w >= 2; };
    vhgw.compare_args = false;
    vhgw.bounds = [](std::span<const double>, const RunMetrics& m) -> std::optional<std::string> {
        if (m.n % m.w != 0) { return std::nullopt; }
        // (6 - 8/w) n, kept in integers: n is a multiple of w.
        return exceeds("vhgw comparisons", m.comparisons, 6 * m.n - 8 * (m.n / m.w));
    };
    suite.push_back(std::move(vhgw));

    return suite;
}

PropertyCase make_case(std::uint64_t seed, std::size_t t, std::size_t max_n) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (t + 1)));
    PropertyCase c;
    c.index = t;
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_n);
    c.w = 1 + static_cast<std::size_t>(rng() % n);
    if (t % 8 == 0 && n >= 3) { c.w = 3; }
    c.small_alphabet = (t % 2) == 1;
    c.data.resize(n);
    for (double& x : c.data) {
        x = c.small_alphabet ? static_cast<double>(rng() % 8) : static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return c;
}

SuiteReport run_property_suite(const SuiteOptions& options, const std::vector<SuiteEntry>& suite) {
    SuiteReport report;
    report.trials = options.trials;
    for (std::size_t t = 0; t < options.trials; ++t) {
        const PropertyCase c = make_case(options.seed, t, options.max_n);
        const Window window(c.w);
        const auto expected = oracle_run(c.data, window);
        bool ok = true;
        auto fail = [&](const std::string& name, const std::string& why) {
            ok = false;
            report.failures.push_back("case " + std::to_string(t) + " (n=" + std::to_string(c.data.size()) +
                                      ", w=" + std::to_string(c.w) + ") " + name + ": " + why);
        };
        for (const SuiteEntry& e : suite) {
            if (e.applies && !e.applies(c.data.size(), c.w)) { continue; }
            try {
                const MeteredRun r = e.run(c.data, window);
                const Verdict v = verify_equal(r.series, expected, e.compare_args);
                if (!v) { fail(e.name, v.describe()); }
                if (e.bounds) {
                    if (auto b = e.bounds(c.data, r.metrics)) { fail(e.name, *b); }
                }
            } catch (const std::exception& ex) {
                fail(e.name, std::string("threw: ") + ex.what());
            }
        }
        if (ok) { ++report.passed; }
    }
    return report;
}

} // namespace maxmin
