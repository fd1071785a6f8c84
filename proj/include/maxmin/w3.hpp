#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "baselines.hpp"
#include "types.hpp"

namespace maxmin {

/// Max-min filter specialised to w = 3, at most 2 comparisons per element.
///
/// Carries the exact relation between the last two samples. With it, the extrema of
/// the next window (including earliest-position ties) and the relation of the next pair
/// are settled by two comparisons against the new sample. The first pair costs up to
/// 2 comparisons, so the total never exceeds 2n - 2.
template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> run_w3(std::span<const T> a, Compare less = {}, Progress progress = {}) {
    const std::size_t count = Window(3).windows_over(a.size());
    require_ordered(a);

    enum class Rel : std::uint8_t { below, equal, above }; // a[i-2] relative to a[i-1]

    ExtremaSeries<T> out;
    out.reserve(count);

    Rel rel = less(a[0], a[1]) ? Rel::below : (less(a[1], a[0]) ? Rel::above : Rel::equal);
    for (std::size_t i = 2; i < a.size(); ++i) {
        const Position p = i - 2, q = i - 1, y = i;
        Position hi = p, lo = p;
        switch (rel) {
        case Rel::below: // a[p] < a[q]
            if (less(a[y], a[q])) {
                hi = q;
                lo = less(a[y], a[p]) ? y : p;
                rel = Rel::above;
            } else if (less(a[q], a[y])) {
                hi = y;
                lo = p;
                rel = Rel::below;
            } else {
                hi = q;
                lo = p;
                rel = Rel::equal;
            }
            break;
        case Rel::equal:
            if (less(a[p], a[y])) {
                hi = y;
                lo = p;
                rel = Rel::below;
            } else if (less(a[y], a[p])) {
                hi = p;
                lo = y;
                rel = Rel::above;
            } else {
                hi = p;
                lo = p;
                rel = Rel::equal;
            }
            break;
        case Rel::above: // a[p] > a[q]
            if (less(a[q], a[y])) {
                lo = q;
                hi = less(a[p], a[y]) ? y : p;
                rel = Rel::below;
            } else if (less(a[y], a[q])) {
                hi = p;
                lo = y;
                rel = Rel::above;
            } else {
                hi = p;
                lo = q;
                rel = Rel::equal;
            }
            break;
        }
        out.push(ExtremaResult<T>{y, a[hi], a[lo], hi, lo});
        progress(i + 1, i - 1);
    }
    return out;
}

template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> run_w3(const std::vector<T>& a, Compare less = {}, Progress progress = {}) {
    return run_w3(std::span<const T>(a), std::move(less), std::move(progress));
}

} // namespace maxmin
