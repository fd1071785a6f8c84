#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "types.hpp"

namespace maxmin {

/// Malformed text input; `line` is 1-based.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

/// Whole-token decimal parse; no surrounding text allowed except whitespace.
std::optional<double> parse_double(std::string_view token);

/// One decimal value per line; blank lines are skipped. NaN is rejected with its line.
std::vector<double> read_values(std::istream& in);

/// "rows cols" header followed by `rows` lines of `cols` space-separated values.
Grid<double> read_grid(std::istream& in);
void write_grid(std::ostream& out, const Grid<double>& g);

} // namespace maxmin
