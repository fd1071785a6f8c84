#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace maxmin {

/// Absolute position in a stream, 0-based. 64 bits so long streams never wrap.
using Position = std::uint64_t;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_window : public error {
public:
    using error::error;
};

/// A sample that is not comparable under the strict order (NaN for floating types).
class unordered_value : public error {
public:
    using error::error;
};

class input_too_short : public error {
public:
    using error::error;
};

/// Window width, in elements. Always >= 1.
class Window {
public:
    explicit Window(std::size_t width) : width_(width) {
        if (width == 0) { throw invalid_window("window width must be at least 1"); }
    }

    [[nodiscard]] std::size_t width() const noexcept { return width_; }

    /// Number of complete windows over n elements; throws when the window does not fit.
    [[nodiscard]] std::size_t windows_over(std::size_t n) const {
        if (n < width_) {
            throw input_too_short("window larger than input (w=" + std::to_string(width_) + ", n=" +
                                  std::to_string(n) + ")");
        }
        return n - width_ + 1;
    }

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::size_t width_;
};

/// Whether a value falls outside the total order. Specialize for custom element types.
template<typename T>
struct ordering_traits {
    static bool unordered(const T& x) noexcept {
        if constexpr (std::is_floating_point_v<T>) { return std::isnan(x); }
        else {
            (void)x;
            return false;
        }
    }
};

template<typename T>
void require_ordered(const T& x, Position at) {
    if (ordering_traits<T>::unordered(x)) {
        throw unordered_value("unordered value (NaN) at position " + std::to_string(at));
    }
}

template<typename T>
void require_ordered(std::span<const T> a) {
    for (std::size_t i = 0; i < a.size(); ++i) { require_ordered(a[i], i); }
}

/// Extrema of the window [window_end - w + 1, window_end].
template<typename T>
struct ExtremaResult {
    Position window_end{};
    T max{};
    T min{};
    Position argmax{};
    Position argmin{};

    friend bool operator==(const ExtremaResult&, const ExtremaResult&) = default;
};

/// Filter output: entry j covers a[j .. j+w-1]. argmax/argmin are empty when the
/// producing algorithm does not track positions.
template<typename T>
struct ExtremaSeries {
    std::vector<T> max;
    std::vector<T> min;
    std::vector<Position> argmax;
    std::vector<Position> argmin;

    [[nodiscard]] std::size_t size() const noexcept { return max.size(); }
    [[nodiscard]] bool has_args() const noexcept { return !argmax.empty() && argmax.size() == max.size(); }

    void reserve(std::size_t n, bool with_args = true) {
        max.reserve(n);
        min.reserve(n);
        if (with_args) {
            argmax.reserve(n);
            argmin.reserve(n);
        }
    }

    void push(const ExtremaResult<T>& r) {
        max.push_back(r.max);
        min.push_back(r.min);
        argmax.push_back(r.argmax);
        argmin.push_back(r.argmin);
    }

    void push_values(const T& hi, const T& lo) {
        max.push_back(hi);
        min.push_back(lo);
    }

    friend bool operator==(const ExtremaSeries&, const ExtremaSeries&) = default;
};

} // namespace maxmin
