#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <vector>

#include "types.hpp"

namespace maxmin::detail {

inline std::size_t ring_capacity(std::size_t at_least) { return std::bit_ceil(at_least < 2 ? std::size_t{2} : at_least); }

/// Fixed-capacity double-ended queue of stream positions.
class IndexRing {
public:
    explicit IndexRing(std::size_t capacity)
        : slots_(ring_capacity(capacity)), mask_(slots_.size() - 1) {}

    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] Position front() const noexcept {
        assert(size_ > 0);
        return slots_[head_];
    }
    [[nodiscard]] Position back() const noexcept {
        assert(size_ > 0);
        return slots_[(head_ + size_ - 1) & mask_];
    }
    [[nodiscard]] Position operator[](std::size_t k) const noexcept { return slots_[(head_ + k) & mask_]; }

    void push_back(Position p) noexcept {
        assert(size_ < slots_.size());
        slots_[(head_ + size_) & mask_] = p;
        ++size_;
    }
    void pop_back() noexcept {
        assert(size_ > 0);
        --size_;
    }
    void pop_front() noexcept {
        assert(size_ > 0);
        head_ = (head_ + 1) & mask_;
        --size_;
    }

    [[nodiscard]] std::vector<Position> to_vector() const {
        std::vector<Position> out(size_);
        for (std::size_t k = 0; k < size_; ++k) { out[k] = (*this)[k]; }
        return out;
    }

private:
    std::vector<Position> slots_;
    std::size_t mask_;
    std::size_t head_ = 0;
    std::size_t size_ = 0;
};

/// Keeps the most recent values of a stream, addressable by absolute position.
/// Holds at least `span` consecutive positions.
template<typename T>
class History {
public:
    explicit History(std::size_t span) : slots_(ring_capacity(span)), mask_(slots_.size() - 1) {}

    T& operator[](Position p) noexcept { return slots_[p & mask_]; }
    const T& operator[](Position p) const noexcept { return slots_[p & mask_]; }

    [[nodiscard]] std::size_t capacity() const noexcept { return slots_.size(); }

private:
    std::vector<T> slots_;
    std::size_t mask_;
};

} // namespace maxmin::detail
