#include "maxmin/text_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace maxmin {

namespace {

std::string_view trim(std::string_view s) {
    const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && space(s.front())) { s.remove_prefix(1); }
    while (!s.empty() && space(s.back())) { s.remove_suffix(1); }
    return s;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) { ++i; }
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') { ++i; }
        if (i > b) { out.push_back(s.substr(b, i - b)); }
    }
    return out;
}

double value_or_throw(std::string_view token, std::size_t line) {
    const auto v = parse_double(token);
    if (!v) { throw parse_error(line, "not a decimal value: '" + std::string(token) + "'"); }
    if (std::isnan(*v)) { throw parse_error(line, "NaN is not an ordered value"); }
    return *v;
}

std::size_t dim_or_throw(std::string_view token, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v == 0) {
        throw parse_error(line, "bad grid dimension '" + std::string(token) + "'");
    }
    return v;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') { token.remove_prefix(1); }
    if (token.empty()) { return std::nullopt; }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) { return std::nullopt; }
    return v;
}

std::vector<double> read_values(std::istream& in) {
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty()) { continue; }
        out.push_back(value_or_throw(t, lineno));
    }
    return out;
}

Grid<double> read_grid(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_nonblank = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!trim(line).empty()) { return true; }
        }
        return false;
    };
    if (!next_nonblank()) { throw parse_error(lineno + 1, "missing 'rows cols' header"); }
    const auto head = split(trim(line));
    if (head.size() != 2) { throw parse_error(lineno, "header must be 'rows cols'"); }
    const std::size_t rows = dim_or_throw(head[0], lineno);
    const std::size_t cols = dim_or_throw(head[1], lineno);

    std::vector<double> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_nonblank()) {
            throw parse_error(lineno + 1, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
        }
        const auto tokens = split(trim(line));
        if (tokens.size() != cols) {
            throw parse_error(lineno, "expected " + std::to_string(cols) + " values, got " + std::to_string(tokens.size()));
        }
        for (auto tok : tokens) { data.push_back(value_or_throw(tok, lineno)); }
    }
    if (next_nonblank()) { throw parse_error(lineno, "more rows than the header declares"); }
    return Grid<double>(rows, cols, std::move(data));
}

void write_grid(std::ostream& out, const Grid<double>& g) {
    out << g.rows() << ' ' << g.cols() << '\n';
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c) { out << ' '; }
            out << format_double(g(r, c));
        }
        out << '\n';
    }
}

} // namespace maxmin
