#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace maxmin {

/// Ground truth: every window scanned independently with std::max_element /
/// std::min_element, which return the first extremal position.
template<typename T>
ExtremaSeries<T> oracle_run(std::span<const T> a, Window window) {
    const std::size_t w = window.width();
    const std::size_t count = window.windows_over(a.size());
    require_ordered(a);
    ExtremaSeries<T> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const auto first = a.begin() + static_cast<std::ptrdiff_t>(j);
        const auto last = first + static_cast<std::ptrdiff_t>(w);
        const auto hi = std::max_element(first, last);
        const auto lo = std::min_element(first, last);
        out.push(ExtremaResult<T>{j + w - 1, *hi, *lo, static_cast<Position>(hi - a.begin()),
                                  static_cast<Position>(lo - a.begin())});
    }
    return out;
}

template<typename T>
ExtremaSeries<T> oracle_run(const std::vector<T>& a, Window window) {
    return oracle_run(std::span<const T>(a), window);
}

struct Mismatch {
    std::size_t window = 0;
    std::string left;
    std::string right;
};

struct Verdict {
    bool equal = true;
    std::optional<Mismatch> first;

    explicit operator bool() const noexcept { return equal; }
    [[nodiscard]] std::string describe() const {
        if (equal) { return "equal"; }
        return "mismatch at window " + std::to_string(first->window) + ": " + first->left + " vs " + first->right;
    }
};

namespace detail {

template<typename T>
bool same_value(const T& x, const T& y) {
    if constexpr (std::is_same_v<T, double>) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); }
    else if constexpr (std::is_same_v<T, float>) { return std::bit_cast<std::uint32_t>(x) == std::bit_cast<std::uint32_t>(y); }
    else { return x == y; }
}

template<typename T>
std::string entry(const ExtremaSeries<T>& s, std::size_t j, bool with_args) {
    if (j >= s.size()) { return "<absent>"; }
    std::ostringstream os;
    os.precision(std::numeric_limits<T>::max_digits10);
    os << "(max=" << s.max[j] << ", min=" << s.min[j];
    if (with_args && s.has_args()) { os << ", argmax=" << s.argmax[j] << ", argmin=" << s.argmin[j]; }
    os << ")";
    return os.str();
}

} // namespace detail

/// Exact comparison of two filter outputs (bitwise for floating values). Positions are
/// compared only when `compare_args` is set; a series without positions then mismatches.
template<typename T>
Verdict verify_equal(const ExtremaSeries<T>& x, const ExtremaSeries<T>& y, bool compare_args) {
    const std::size_t n = std::min(x.size(), y.size());
    auto fail = [&](std::size_t j) {
        return Verdict{false, Mismatch{j, detail::entry(x, j, compare_args), detail::entry(y, j, compare_args)}};
    };
    if (compare_args && n > 0 && (!x.has_args() || !y.has_args())) { return fail(0); }
    for (std::size_t j = 0; j < n; ++j) {
        if (!detail::same_value(x.max[j], y.max[j]) || !detail::same_value(x.min[j], y.min[j])) { return fail(j); }
        if (compare_args && (x.argmax[j] != y.argmax[j] || x.argmin[j] != y.argmin[j])) { return fail(j); }
    }
    if (x.size() != y.size()) { return fail(n); }
    return Verdict{};
}

} // namespace maxmin
