#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "types.hpp"

namespace maxmin {

namespace detail {

/// Wedge state shared by the streaming filter and the batch run. Values are read
/// through a callable mapping a position to its sample, so the same update serves a
/// ring of recent values and a whole input array.
template<typename Compare>
class WedgeCore {
public:
    WedgeCore(std::size_t w, Compare less) : less(std::move(less)), upper(w + 1), lower(w + 1), runs_(w + 1) {}

    /// Ingests position i holding x, after which i is the back of both queues.
    template<typename T, typename Value>
    void step(Position i, const T& x, Value&& value) {
        Run& r = runs_[i];
        r.start = unresolved;
        if (i == 0) {
            r.step = Step::first;
        } else if (less(value(i - 1), x)) {
            r.step = Step::rise;
            upper.pop_back();
            while (!upper.empty() && less(value(upper.back()), x)) { upper.pop_back(); }
        } else {
            r.step = Step::fall_or_flat;
            lower.pop_back();
            while (!lower.empty() && less(x, value(lower.back()))) { lower.pop_back(); }
        }
        upper.push_back(i);
        lower.push_back(i);
    }

    /// Drops position `expired` if it is the front of either queue.
    void expire(Position expired) noexcept {
        if (upper.front() == expired) { upper.pop_front(); }
        else if (lower.front() == expired) { lower.pop_front(); }
    }

    /// The wedge drops a[i-1] from `lower` whenever a[i] <= a[i-1], so the front of `lower`
    /// is the last element of a run of equal minima. Walks back over equal neighbours
    /// (within the window) to the first one; results are cached per position.
    template<typename Value>
    Position earliest_min(Position start, Value&& value) {
        const Position k = lower.front();
        if (runs_[k].start != unresolved) { return std::max(runs_[k].start, start); }
        Position j = k;
        Position run;
        for (;;) {
            Run& s = runs_[j];
            if (s.start != unresolved) {
                run = s.start;
                break;
            }
            if (j <= start) {
                run = j;
                break;
            }
            if (s.step == Step::fall_or_flat) {
                s.step = less(value(j), value(j - 1)) ? Step::fall : Step::flat;
            }
            if (s.step != Step::flat) {
                run = j;
                break;
            }
            --j;
        }
        for (Position q = k; q > j; --q) { runs_[q].start = run; }
        runs_[j].start = run;
        return std::max(run, start);
    }

    [[nodiscard]] std::size_t size() const noexcept { return upper.size() + lower.size(); }

    Compare less;
    IndexRing upper; // maxima candidates
    IndexRing lower; // minima candidates

private:
    // Relation of a sample to its predecessor. fall_or_flat is what the wedge update
    // learns; it is refined to fall or flat only when a minimum's position needs it.
    enum class Step : std::uint8_t { first, rise, fall_or_flat, fall, flat };

    static constexpr Position unresolved = std::numeric_limits<Position>::max();

    struct Run {
        Position start = unresolved;
        Step step = Step::first;
    };

    History<Run> runs_;
};

} // namespace detail

/// Streaming max-min filter over a monotonic wedge.
///
/// The wedge is a pair of index queues over the current window: the upper queue holds
/// maxima candidates (values non-increasing front to back, equal values kept in arrival
/// order), the lower queue holds minima candidates (values non-decreasing). Each push
/// emits the extrema of the window it completes, so results are never delayed.
///
/// Costs at most 3 comparisons per element when no two consecutive samples are equal.
/// Runs of equal neighbours cost at most one extra comparison per equal pair, spent on
/// locating the earliest position of a repeated minimum.
template<typename T, typename Compare = std::less<T>>
class WedgeFilter {
public:
    explicit WedgeFilter(Window window, Compare less = {})
        : window_(window), core_(window.width(), std::move(less)), values_(window.width() + 1) {}

    /// Ingests x. Returns the extrema of the window ending at x once w samples have been
    /// seen. Throws unordered_value (and leaves the filter untouched) for NaN-like input.
    std::optional<ExtremaResult<T>> push(const T& x) {
        require_ordered(x, next_);
        const Position i = next_;
        const std::size_t w = window_.width();
        if (w == 1) {
            ++next_;
            return ExtremaResult<T>{i, x, x, i, i};
        }

        peak_ = std::max(peak_, core_.size());
        const auto value = [this](Position p) -> const T& { return values_[p]; };
        values_[i] = x;
        core_.step(i, x, value);
        if (i >= w) { core_.expire(i - w); }

        ++next_;
        if (next_ < w) { return std::nullopt; }
        const Position hi = core_.upper.front();
        const Position lo = core_.earliest_min(next_ - w, value);
        return ExtremaResult<T>{i, values_[hi], values_[lo], hi, lo};
    }

    [[nodiscard]] const Window& window() const noexcept { return window_; }

    /// Number of samples ingested so far (also the position of the next sample).
    [[nodiscard]] Position next_position() const noexcept { return next_; }

    /// Combined size of both candidate queues right now.
    [[nodiscard]] std::size_t wedge_size() const noexcept { return core_.size(); }

    /// Largest wedge size observed at the start of an ingest step.
    [[nodiscard]] std::size_t peak_wedge_size() const noexcept { return peak_; }

    [[nodiscard]] std::vector<Position> maxima_candidates() const { return core_.upper.to_vector(); }
    [[nodiscard]] std::vector<Position> minima_candidates() const { return core_.lower.to_vector(); }

    /// Value at a position still held by the filter (the last w + 1 positions).
    [[nodiscard]] const T& value_at(Position p) const noexcept { return values_[p]; }

private:
    Window window_;
    detail::WedgeCore<Compare> core_;
    detail::History<T> values_;
    Position next_ = 0;
    std::size_t peak_ = 0;
};

namespace detail {

template<bool Positions, typename T, typename Compare>
ExtremaSeries<T> wedge_batch(std::span<const T> a, Window window, Compare less) {
    const std::size_t w = window.width();
    const std::size_t count = window.windows_over(a.size());
    require_ordered(a);

    ExtremaSeries<T> out;
    out.max.resize(count);
    out.min.resize(count);
    if constexpr (Positions) {
        out.argmax.resize(count);
        out.argmin.resize(count);
    }
    if (w == 1) {
        std::copy(a.begin(), a.end(), out.max.begin());
        std::copy(a.begin(), a.end(), out.min.begin());
        if constexpr (Positions) {
            for (std::size_t j = 0; j < count; ++j) { out.argmax[j] = out.argmin[j] = j; }
        }
        return out;
    }

    WedgeCore<Compare> core(w, std::move(less));
    const auto value = [a](Position p) -> const T& { return a[p]; };
    for (Position i = 0; i + 1 < w; ++i) { core.step(i, a[i], value); }
    for (Position i = w - 1; i < a.size(); ++i) {
        core.step(i, a[i], value);
        if (i >= w) { core.expire(i - w); }
        const Position j = i + 1 - w;
        const Position hi = core.upper.front();
        const Position lo = core.earliest_min(j, value);
        out.max[j] = a[hi];
        out.min[j] = a[lo];
        if constexpr (Positions) {
            out.argmax[j] = hi;
            out.argmin[j] = lo;
        }
    }
    return out;
}

} // namespace detail

/// Batch form. Entry j of the result covers a[j .. j+w-1]. Same output and comparisons
/// as pushing every sample through a WedgeFilter, reading samples in place.
template<typename T, typename Compare = std::less<T>>
ExtremaSeries<T> wedge_run(std::span<const T> a, Window window, Compare less = {}) {
    return detail::wedge_batch<true>(a, window, std::move(less));
}

/// wedge_run without the position columns.
template<typename T, typename Compare = std::less<T>>
ExtremaSeries<T> wedge_values(std::span<const T> a, Window window, Compare less = {}) {
    return detail::wedge_batch<false>(a, window, std::move(less));
}

template<typename T, typename Compare = std::less<T>>
ExtremaSeries<T> wedge_values(const std::vector<T>& a, Window window, Compare less = {}) {
    return wedge_values(std::span<const T>(a), window, std::move(less));
}

template<typename T, typename Compare = std::less<T>>
ExtremaSeries<T> wedge_run(const std::vector<T>& a, Window window, Compare less = {}) {
    return wedge_run(std::span<const T>(a), window, std::move(less));
}

} // namespace maxmin
