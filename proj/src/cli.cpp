#include "maxmin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>

#include "maxmin/grid.hpp"
#include "maxmin/text_io.hpp"

namespace maxmin::cli {

namespace {

std::vector<double> load_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) { throw error("cannot read '" + path + "'"); }
    try {
        return read_values(in);
    } catch (const parse_error& e) {
        throw error(path + ": " + e.what());
    }
}

Grid<double> load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) { throw error("cannot read '" + path + "'"); }
    try {
        return read_grid(in);
    } catch (const parse_error& e) {
        throw error(path + ": " + e.what());
    }
}

// Runs `body` against the file at `path`, or against `fallback` when there is none.
void with_sink(const std::optional<std::string>& path, std::ostream& fallback,
               const std::function<void(std::ostream&)>& body) {
    if (!path) {
        body(fallback);
        return;
    }
    std::ofstream file(*path);
    if (!file) { throw error("cannot write '" + *path + "'"); }
    body(file);
    file.flush();
    if (!file) { throw error("write to '" + *path + "' failed"); }
}

ExtremaSeries<double> run_algorithm(Algorithm algo, const std::vector<double>& a, Window window) {
    return metered_run(algo, a, window).series;
}

std::string gil_kimmel_cost(std::size_t w) {
    return format_double(3.0 + 2.0 * std::log2(static_cast<double>(w)) / static_cast<double>(w));
}

} // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    try {
        std::vector<double> a;
        if (options.input) { a = load_values(*options.input); }
        else if (options.signal) { a = generate(*options.signal); }
        else { throw error("run needs --input FILE or --signal KIND"); }
        if (a.empty()) { throw input_too_short("input has no values"); }

        const Window window(options.w);
        const auto s = run_algorithm(options.algo, a, window);
        const bool args = !options.no_args && s.has_args();
        with_sink(options.output, out, [&](std::ostream& os) {
            os << (args ? "index,max,min,argmax,argmin\n" : "index,max,min\n");
            for (std::size_t j = 0; j < s.size(); ++j) {
                os << j << ',' << format_double(s.max[j]) << ',' << format_double(s.min[j]);
                if (args) { os << ',' << s.argmax[j] << ',' << s.argmin[j]; }
                os << '\n';
            }
        });
        return exit_code::ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.signals.empty()) { throw error("bench needs at least one --signal"); }
        if (options.windows.empty()) { throw error("bench needs at least one --w"); }
        if (options.repeats == 0) { throw error("--repeats must be at least 1"); }
        std::vector<std::optional<Algorithm>> algos; // nullopt: gil_kimmel reference row
        for (const auto& name : options.algos) {
            if (name == "gil_kimmel") { algos.emplace_back(std::nullopt); }
            else { algos.emplace_back(parse_algorithm(name)); }
        }
        for (const std::size_t w : options.windows) { (void)Window(w); }

        with_sink(options.output, out, [&](std::ostream& os) {
            os << bench_header << '\n';
            for (const SignalSpec& spec : options.signals) {
                const auto a = generate(spec);
                const auto kind = to_string(spec.kind);
                for (const std::size_t w : options.windows) {
                    const Window window(w);
                    (void)window.windows_over(a.size());
                    for (const auto& algo : algos) {
                        if (!algo) {
                            os << "gil_kimmel," << kind << ',' << spec.n << ',' << w << ',' << spec.seed << ",,"
                               << gil_kimmel_cost(w) << ",," << w << ",\n";
                            continue;
                        }
                        if (*algo == Algorithm::w3 && w != 3) {
                            err << "note: skipping w3 for w=" << w << '\n';
                            continue;
                        }
                        if (*algo == Algorithm::vhgw && w < 2) {
                            err << "note: skipping vhgw for w=" << w << '\n';
                            continue;
                        }
                        MeteredRun best = metered_run(*algo, a, window);
                        for (std::size_t r = 1; r < options.repeats; ++r) {
                            const MeteredRun again = metered_run(*algo, a, window);
                            best.metrics.wall_time_s = std::min(best.metrics.wall_time_s, again.metrics.wall_time_s);
                        }
                        const RunMetrics& m = best.metrics;
                        os << to_string(*algo) << ',' << kind << ',' << m.n << ',' << m.w << ',' << spec.seed << ','
                           << m.comparisons << ',' << format_double(m.cmp_per_elem()) << ',';
                        if (m.peak_wedge_size) { os << *m.peak_wedge_size; }
                        os << ',' << m.emit_lag_max << ',' << format_double(m.wall_time_s) << '\n';
                    }
                }
            }
        });
        return exit_code::ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err,
               const std::vector<SuiteEntry>& suite) {
    if (options.trials == 0) { err << "warning: --trials 0 checks nothing\n"; }
    SuiteOptions so;
    so.trials = options.trials;
    so.seed = options.seed;
    const SuiteReport report = run_property_suite(so, suite);
    for (const auto& f : report.failures) { out << "FAIL " << f << '\n'; }
    out << report.passed << '/' << report.trials << (report.ok() ? " ok" : " passed") << '\n';
    return report.ok() ? exit_code::ok : exit_code::verification_failed;
}

int cmd_filter2d(const Filter2dOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const Grid<double> g = load_grid(options.input);
        const auto r = filter2d(g, options.w_row, options.w_col);
        if (options.output) {
            with_sink(*options.output + ".max.txt", out, [&](std::ostream& os) { write_grid(os, r.max); });
            with_sink(*options.output + ".min.txt", out, [&](std::ostream& os) { write_grid(os, r.min); });
        } else {
            write_grid(out, r.max);
            write_grid(out, r.min);
        }
        return exit_code::ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

} // namespace maxmin::cli
