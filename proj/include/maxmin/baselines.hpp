#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "types.hpp"

namespace maxmin {

/// Observer told how far an algorithm has read each time it releases results.
/// `consumed` samples have been read; windows [0, emitted) are final.
struct NoProgress {
    void operator()(std::size_t /*consumed*/, std::size_t /*emitted*/) const noexcept {}
};

/// Scans every window: 2(w-1) comparisons per window, no latency.
template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> naive_run(std::span<const T> a, Window window, Compare less = {}, Progress progress = {}) {
    const std::size_t w = window.width();
    const std::size_t count = window.windows_over(a.size());
    require_ordered(a);

    ExtremaSeries<T> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        std::size_t hi = j, lo = j;
        for (std::size_t k = j + 1; k < j + w; ++k) {
            if (less(a[hi], a[k])) { hi = k; }
            if (less(a[k], a[lo])) { lo = k; }
        }
        out.push(ExtremaResult<T>{j + w - 1, a[hi], a[lo], hi, lo});
        progress(j + w, j + 1);
    }
    return out;
}

template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> naive_run(const std::vector<T>& a, Window window, Compare less = {}, Progress progress = {}) {
    return naive_run(std::span<const T>(a), window, std::move(less), std::move(progress));
}

/// Suffix extrema of one block; the matching prefix extrema are consumed as they are
/// produced, so they need no storage.
template<typename T>
struct BlockBuffers {
    explicit BlockBuffers(std::size_t w) : suffix_max(w), suffix_min(w) {}
    std::vector<T> suffix_max;
    std::vector<T> suffix_min;
};

/// van Herk / Gil-Werman block algorithm, values only.
///
/// Blocks start at multiples of w. A window starting at offset r > 0 of block b is
/// max(suffix of block b from r, prefix of block b+1 up to r-1); the aligned window
/// (r = 0) is a whole block. Per interior block and per filter that is (w-1) prefix +
/// (w-2) suffix + 1 block-total + (w-1) merge comparisons = 3w - 4, i.e. 6 - 8/w per
/// element for the pair of filters. Results for block b are released once block b+1
/// has been read, which is where its latency of up to w samples comes from.
/// Ties keep the earlier sample.
template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> vhgw_run(std::span<const T> a, Window window, Compare less = {}, Progress progress = {}) {
    const std::size_t w = window.width();
    if (w < 2) { throw invalid_window("van Herk-Gil-Werman requires w >= 2"); }
    const std::size_t n = a.size();
    const std::size_t count = window.windows_over(n);
    require_ordered(a);

    ExtremaSeries<T> out;
    out.reserve(count, false);
    out.max.resize(count);
    out.min.resize(count);

    BlockBuffers<T> buf(w);
    const std::size_t last_start = n - w;
    // Running prefix extrema of the current block over its first w-1 samples, carried over
    // from the previous iteration.
    T carry_max{}, carry_min{};

    for (std::size_t s = 0; s <= last_start; s += w) {
        const std::size_t block_last_start = std::min(s + w - 1, last_start);
        const std::size_t offsets = block_last_start - s; // non-aligned windows starting in this block
        const T* blk = a.data() + s;

        // Suffix extrema, down to offset 1 (or 0 for the first block, which has no carried prefix).
        const std::size_t suffix_floor = (s == 0) ? 0 : 1;
        if (s == 0 || offsets > 0) {
            buf.suffix_max[w - 1] = blk[w - 1];
            buf.suffix_min[w - 1] = blk[w - 1];
            for (std::size_t r = w - 1; r-- > suffix_floor;) {
                buf.suffix_max[r] = less(blk[r], buf.suffix_max[r + 1]) ? buf.suffix_max[r + 1] : blk[r];
                buf.suffix_min[r] = less(buf.suffix_min[r + 1], blk[r]) ? buf.suffix_min[r + 1] : blk[r];
            }
        }

        // Aligned window: the whole block.
        if (s == 0) {
            out.max[0] = buf.suffix_max[0];
            out.min[0] = buf.suffix_min[0];
        } else {
            const T& tail = blk[w - 1];
            out.max[s] = less(carry_max, tail) ? tail : carry_max;
            out.min[s] = less(tail, carry_min) ? tail : carry_min;
        }

        // Windows straddling into the next block, merged with its running prefix.
        if (offsets > 0) {
            const T* next = blk + w;
            T pre_max = next[0], pre_min = next[0];
            for (std::size_t r = 1;; ++r) {
                const T& sm = buf.suffix_max[r];
                const T& sn = buf.suffix_min[r];
                out.max[s + r] = less(sm, pre_max) ? pre_max : sm;
                out.min[s + r] = less(pre_min, sn) ? pre_min : sn;
                if (r == offsets) { break; }
                if (less(pre_max, next[r])) { pre_max = next[r]; }
                if (less(next[r], pre_min)) { pre_min = next[r]; }
            }
            carry_max = pre_max;
            carry_min = pre_min;
        }

        progress(std::min(s + 2 * w, n), block_last_start + 1);
    }
    return out;
}

template<typename T, typename Compare = std::less<T>, typename Progress = NoProgress>
ExtremaSeries<T> vhgw_run(const std::vector<T>& a, Window window, Compare less = {}, Progress progress = {}) {
    return vhgw_run(std::span<const T>(a), window, std::move(less), std::move(progress));
}

} // namespace maxmin
