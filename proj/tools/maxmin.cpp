#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxmin/cli.hpp"

namespace {

struct SignalFlags {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t period = 10'000;
    std::size_t segments = 16;
    double level = 0.0;

    void attach(CLI::App& app) {
        app.add_option("--signal", kind, "uniform|sine|ramp_up|ramp_down|constant|piecewise|alternating (comma list for bench)");
        app.add_option("--n", n, "signal length");
        app.add_option("--seed", seed, "generator seed");
        app.add_option("--period", period, "sine period in samples");
        app.add_option("--segments", segments, "piecewise segment count");
        app.add_option("--level", level, "constant signal value");
    }

    [[nodiscard]] std::vector<maxmin::SignalSpec> specs() const {
        std::vector<maxmin::SignalSpec> out;
        std::size_t b = 0;
        while (b <= kind.size()) {
            const std::size_t e = std::min(kind.find(',', b), kind.size());
            maxmin::SignalSpec s;
            s.kind = maxmin::parse_signal_kind(kind.substr(b, e - b));
            s.n = n;
            s.seed = seed;
            s.period = period;
            s.segments = segments;
            s.level = level;
            out.push_back(s);
            b = e + 1;
        }
        return out;
    }
};

} // namespace

int main(int argc, char** argv) {
    namespace cli = maxmin::cli;
    CLI::App app{"Sliding-window max-min filters"};
    app.require_subcommand(1);

    SignalFlags run_signal;
    std::string run_algo = "wedge";
    std::size_t run_w = 0;
    std::string run_input, run_output;
    bool run_no_args = false;
    auto* run = app.add_subcommand("run", "filter a value file or generated signal, CSV out");
    run->add_option("--algo", run_algo, "wedge|naive|vhgw|w3");
    run->add_option("--w,--window", run_w, "window width")->required();
    run->add_option("--input", run_input, "one value per line");
    run->add_option("--output", run_output, "CSV destination (default stdout)");
    run->add_flag("--no-args", run_no_args, "omit argmax/argmin columns");
    run_signal.attach(*run);

    SignalFlags bench_signal;
    std::vector<std::size_t> bench_w;
    std::vector<std::string> bench_algos{"wedge", "vhgw"};
    std::size_t repeats = 1;
    std::string bench_output;
    auto* bench = app.add_subcommand("bench", "metered runs over generated signals, CSV out");
    bench->add_option("--algo", bench_algos, "comma list of wedge|naive|vhgw|w3|gil_kimmel")->delimiter(',');
    bench->add_option("--w,--window", bench_w, "comma list of window widths")->delimiter(',')->required();
    bench->add_option("--repeats", repeats, "runs per row; the fastest is reported");
    bench->add_option("--output", bench_output, "CSV destination (default stdout)");
    bench_signal.attach(*bench);
    bench_signal.kind = "uniform";
    bench_signal.n = 1'000'000;

    cli::VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "randomized equivalence and bound checks against the oracle");
    verify->add_option("--trials", verify_opts.trials, "number of random cases");
    verify->add_option("--seed", verify_opts.seed, "case generator seed");

    cli::Filter2dOptions f2d;
    auto* filter2d = app.add_subcommand("filter2d", "rectangular-window extrema of a grid file");
    filter2d->add_option("--input", f2d.input, "grid file: 'rows cols' then rows of values")->required();
    filter2d->add_option("--w-row", f2d.w_row, "window width along a row")->required();
    filter2d->add_option("--w-col", f2d.w_col, "window height along a column")->required();
    std::string f2d_output;
    filter2d->add_option("--output", f2d_output, "writes PREFIX.max.txt and PREFIX.min.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::exit_code::ok : cli::exit_code::usage;
    }

    try {
        if (*run) {
            cli::RunOptions o;
            o.algo = maxmin::parse_algorithm(run_algo);
            o.w = run_w;
            o.no_args = run_no_args;
            if (!run_input.empty()) { o.input = run_input; }
            else if (!run_signal.kind.empty()) { o.signal = run_signal.specs().at(0); }
            if (!run_output.empty()) { o.output = run_output; }
            return cli::cmd_run(o, std::cout, std::cerr);
        }
        if (*bench) {
            cli::BenchOptions o;
            o.signals = bench_signal.specs();
            o.windows = bench_w;
            o.algos = bench_algos;
            o.repeats = repeats;
            if (!bench_output.empty()) { o.output = bench_output; }
            return cli::cmd_bench(o, std::cout, std::cerr);
        }
        if (*verify) { return cli::cmd_verify(verify_opts, std::cout, std::cerr); }
        if (!f2d_output.empty()) { f2d.output = f2d_output; }
        return cli::cmd_filter2d(f2d, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_code::usage;
    }
}
