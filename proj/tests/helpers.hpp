#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace maxmin::test {

inline std::vector<double> random_values(std::size_t n, std::uint64_t seed, int alphabet = 0) {
    std::mt19937_64 rng(seed);
    std::vector<double> a(n);
    for (double& x : a) {
        x = alphabet > 0 ? static_cast<double>(rng() % static_cast<std::uint64_t>(alphabet))
                         : static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return a;
}

// Every sequence of length n over {0..k-1}, in lexicographic order.
template<typename F>
void for_each_word(std::size_t n, int k, F&& f) {
    std::vector<double> a(n, 0.0);
    for (;;) {
        f(a);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (a[i] + 1 < k) {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            if (i == 0) { return; }
        }
        if (n == 0) { return; }
    }
}

} // namespace maxmin::test
