#pragma once

#include <cstdint>
#include <functional>

namespace maxmin {

template<typename Less>
class OrderProbe;

/// Copyable handle that routes every call to its probe. This is what the filters
/// receive as their comparison predicate.
template<typename Less>
class CountingLess {
public:
    explicit CountingLess(OrderProbe<Less>& probe) noexcept : probe_(&probe) {}

    template<typename T>
    bool operator()(const T& x, const T& y) const { return (*probe_)(x, y); }

private:
    OrderProbe<Less>* probe_;
};

/// Counts invocations of a strict total-order predicate. Outcomes are exactly those of
/// the wrapped predicate.
template<typename Less = std::less<>>
class OrderProbe {
public:
    OrderProbe() = default;
    explicit OrderProbe(Less inner) : inner_(std::move(inner)) {}

    template<typename T>
    bool operator()(const T& x, const T& y) {
        ++count_;
        return inner_(x, y);
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    void reset() noexcept { count_ = 0; }

    [[nodiscard]] CountingLess<Less> predicate() noexcept { return CountingLess<Less>(*this); }

private:
    Less inner_{};
    std::uint64_t count_ = 0;
};

template<typename Less, typename T>
bool probe_less(OrderProbe<Less>& probe, const T& x, const T& y) {
    return probe(x, y);
}

} // namespace maxmin
