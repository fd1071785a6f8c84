#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metering.hpp"
#include "types.hpp"

namespace maxmin {

/// One randomized equivalence case.
struct PropertyCase {
    std::size_t index = 0;
    std::vector<double> data;
    std::size_t w = 1;
    bool small_alphabet = false; // drawn from {0..7}
};

/// An algorithm under test. `run` produces output and metrics; `bounds` returns a
/// description of the first violated bound, if any.
struct SuiteEntry {
    std::string name;
    std::function<bool(std::size_t n, std::size_t w)> applies;
    bool compare_args = true;
    std::function<MeteredRun(std::span<const double>, Window)> run;
    std::function<std::optional<std::string>(std::span<const double>, const RunMetrics&)> bounds;
};

/// wedge, naive, w3 (w = 3 only) and vhgw (w >= 2, values only), with their count bounds.
std::vector<SuiteEntry> default_suite();

/// Number of i with a[i] == a[i-1].
std::size_t adjacent_equal_pairs(std::span<const double> a);

struct SuiteOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 256;
};

struct SuiteReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return passed == trials; }
};

/// Case `t` of the randomized suite: n in [1, max_n], w in [1, n]; odd cases use the
/// small alphabet. Every eighth case with n >= 3 pins w = 3.
PropertyCase make_case(std::uint64_t seed, std::size_t t, std::size_t max_n = 256);

/// Checks every applicable entry against oracle_run on each case.
SuiteReport run_property_suite(const SuiteOptions& options, const std::vector<SuiteEntry>& suite = default_suite());

} // namespace maxmin
