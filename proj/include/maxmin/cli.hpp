#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metering.hpp"
#include "signals.hpp"
#include "verify.hpp"

namespace maxmin::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2 };

inline constexpr const char* bench_header = "algo,signal,n,w,seed,comparisons,cmp_per_elem,peak_wedge,emit_lag,wall_time_s";

struct RunOptions {
    Algorithm algo = Algorithm::wedge;
    std::size_t w = 0;
    std::optional<std::string> input;  // one value per line
    std::optional<SignalSpec> signal;  // used when there is no input file
    std::optional<std::string> output; // stdout when absent
    bool no_args = false;
};

/// CSV "index,max,min[,argmax,argmin]"; index is the first position of the window.
/// Position columns are omitted for vhgw (values only) and with no_args.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<SignalSpec> signals;
    std::vector<std::size_t> windows;
    std::vector<std::string> algos{"wedge", "vhgw"}; // plus "gil_kimmel" for the reference row
    std::size_t repeats = 1;
    std::optional<std::string> output;
};

/// One row per (signal, w, algo), in that nesting order, under bench_header.
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
};

/// Prints "passed/trials ok" on success; failures are listed before a summary line.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err,
               const std::vector<SuiteEntry>& suite = default_suite());

struct Filter2dOptions {
    std::string input;
    std::size_t w_row = 1;
    std::size_t w_col = 1;
    /// Writes <prefix>.max.txt and <prefix>.min.txt; without it both grids go to `out`, max first.
    std::optional<std::string> output;
};

int cmd_filter2d(const Filter2dOptions& options, std::ostream& out, std::ostream& err);

} // namespace maxmin::cli
