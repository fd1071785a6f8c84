#include <doctest.h>

#include <bit>
#include <cmath>

#include "helpers.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/probe.hpp"
#include "maxmin/wedge.hpp"

using namespace maxmin;

namespace {

std::uint64_t counted_run(const std::vector<double>& a, std::size_t w, std::size_t* peak = nullptr) {
    OrderProbe<> probe;
    WedgeFilter<double, CountingLess<std::less<>>> f(Window(w), probe.predicate());
    for (double x : a) { (void)f.push(x); }
    if (peak) { *peak = f.peak_wedge_size(); }
    return probe.count();
}

} // namespace

TEST_CASE("wedge on a short sequence") {
    const std::vector<double> a{1, 3, 2, 5, 4};
    const auto s = wedge_run(a, Window(3));
    CHECK(s.max == std::vector<double>{3, 5, 5});
    CHECK(s.min == std::vector<double>{1, 2, 2});
    CHECK(s.argmax == std::vector<Position>{1, 3, 3});
    CHECK(s.argmin == std::vector<Position>{0, 2, 2});
}

TEST_CASE("wedge reports the earliest position among ties") {
    const auto s = wedge_run(std::vector<double>{2, 1, 2, 1}, Window(2));
    CHECK(s.max == std::vector<double>{2, 2, 2});
    CHECK(s.min == std::vector<double>{1, 1, 1});
    CHECK(s.argmax == std::vector<Position>{0, 2, 2});
    CHECK(s.argmin == std::vector<Position>{1, 1, 3});

    WedgeFilter<double> f(Window(3));
    CHECK_FALSE(f.push(2).has_value());
    CHECK_FALSE(f.push(2).has_value());
    const auto r = f.push(2);
    REQUIRE(r.has_value());
    CHECK(r->argmax == 0);
    CHECK(r->argmin == 0);
}

TEST_CASE("window of one echoes the input without comparing") {
    const std::vector<double> a{4, -1, 7};
    OrderProbe<> probe;
    WedgeFilter<double, CountingLess<std::less<>>> f(Window(1), probe.predicate());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto r = f.push(a[i]);
        REQUIRE(r.has_value());
        CHECK(r->max == a[i]);
        CHECK(r->min == a[i]);
        CHECK(r->argmax == i);
        CHECK(r->argmin == i);
    }
    CHECK(probe.count() == 0);
}

TEST_CASE("window equal to the input gives the global extrema") {
    const auto a = test::random_values(40, 3);
    const auto s = wedge_run(a, Window(a.size()));
    REQUIRE(s.size() == 1);
    CHECK(s.max[0] == *std::max_element(a.begin(), a.end()));
    CHECK(s.min[0] == *std::min_element(a.begin(), a.end()));
}

TEST_CASE("results are released by the push that completes the window") {
    const auto a = test::random_values(200, 11, 5);
    WedgeFilter<double> f(Window(7));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto r = f.push(a[i]);
        CHECK(r.has_value() == (i >= 6));
        if (r) { CHECK(r->window_end == i); }
    }
}

TEST_CASE("wedge invariants hold after every push") {
    for (int alphabet : {0, 3}) {
        const auto a = test::random_values(500, 5 + alphabet, alphabet);
        for (std::size_t w : {2, 3, 8, 31}) {
            WedgeFilter<double> f{Window(w)};
            for (std::size_t i = 0; i < a.size(); ++i) {
                (void)f.push(a[i]);
                const auto up = f.maxima_candidates();
                const auto lo = f.minima_candidates();
                REQUIRE_FALSE(up.empty());
                REQUIRE_FALSE(lo.empty());
                CHECK(up.back() == i);
                CHECK(lo.back() == i);
                const Position start = i + 1 >= w ? i + 1 - w : 0;
                for (std::size_t k = 0; k < up.size(); ++k) {
                    CHECK(up[k] >= start);
                    if (k > 0) {
                        CHECK(up[k - 1] < up[k]);
                        CHECK_FALSE(f.value_at(up[k - 1]) < f.value_at(up[k]));
                    }
                }
                for (std::size_t k = 0; k < lo.size(); ++k) {
                    CHECK(lo[k] >= start);
                    if (k > 0) {
                        CHECK(lo[k - 1] < lo[k]);
                        CHECK_FALSE(f.value_at(lo[k]) < f.value_at(lo[k - 1]));
                    }
                }
                CHECK(f.wedge_size() <= w + 1);
            }
            CHECK(f.peak_wedge_size() <= w + 1);
        }
    }
}

TEST_CASE("streaming pushes equal the batch run") {
    const auto a = test::random_values(300, 21, 4);
    const Window window(9);
    const auto batch = wedge_run(a, window);
    WedgeFilter<double> f(window);
    ExtremaSeries<double> streamed;
    for (double x : a) {
        if (auto r = f.push(x)) { streamed.push(*r); }
    }
    CHECK(streamed == batch);
}

TEST_CASE("NaN is rejected and leaves the filter unchanged") {
    WedgeFilter<double> f(Window(3));
    (void)f.push(1.0);
    (void)f.push(5.0);
    const auto up = f.maxima_candidates();
    const auto lo = f.minima_candidates();
    CHECK_THROWS_AS(f.push(std::nan("")), unordered_value);
    CHECK(f.next_position() == 2);
    CHECK(f.maxima_candidates() == up);
    CHECK(f.minima_candidates() == lo);
    const auto r = f.push(3.0);
    REQUIRE(r.has_value());
    CHECK(r->max == 5.0);
    CHECK(r->min == 1.0);
}

TEST_CASE("signed zeros come back as the earliest sample's bits") {
    const std::vector<double> a{-0.0, 0.0, -0.0, 0.0, 0.0};
    const auto s = wedge_run(a, Window(2));
    const auto o = oracle_run(a, Window(2));
    CHECK(verify_equal(s, o, true).equal);
    CHECK(std::signbit(s.min[0]));
    CHECK(std::signbit(s.max[0]));
    CHECK(std::signbit(s.min[2]));
    CHECK_FALSE(std::signbit(s.min[3]));
}

TEST_CASE("custom order and integer samples") {
    const std::vector<int> a{5, 1, 4, 4, 9, 0, 2};
    const auto inc = wedge_run(a, Window(3));
    const auto dec = wedge_run(a, Window(3), std::greater<int>{});
    CHECK(inc.max == dec.min);
    CHECK(inc.min == dec.max);
    CHECK(inc == oracle_run(a, Window(3)));
}

TEST_CASE("wedge matches the oracle on every word over a small alphabet") {
    for (std::size_t n = 1; n <= 7; ++n) {
        test::for_each_word(n, 3, [&](const std::vector<double>& a) {
            for (std::size_t w = 1; w <= n; ++w) {
                const auto got = wedge_run(a, Window(w));
                const auto want = oracle_run(a, Window(w));
                const auto v = verify_equal(got, want, true);
                if (!v) { FAIL_CHECK("n=" << n << " w=" << w << " " << v.describe()); }
                std::size_t peak = 0;
                (void)counted_run(a, w, &peak);
                CHECK(peak <= w + 1);
            }
        });
    }
}

TEST_CASE("at most 3n comparisons when neighbours differ") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = test::random_values(2000, seed, seed % 2 ? 4 : 0);
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i] == a[i - 1]) { a[i] += 0.5; }
        }
        for (std::size_t w : {2, 3, 5, 17, 100, 2000}) { CHECK(counted_run(a, w) <= 3 * a.size()); }
    }
}

TEST_CASE("repeated neighbours cost at most one extra comparison each") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = test::random_values(1000, seed, 2 + static_cast<int>(seed % 3));
        std::size_t ties = 0;
        for (std::size_t i = 1; i < a.size(); ++i) { ties += a[i] == a[i - 1]; }
        for (std::size_t w : {2, 3, 10, 64}) { CHECK(counted_run(a, w) <= 3 * a.size() - 2 + ties); }
    }
}

TEST_CASE("strictly monotone input costs at most 2n") {
    std::vector<double> up(3000), down(3000);
    for (std::size_t i = 0; i < up.size(); ++i) {
        up[i] = static_cast<double>(i);
        down[i] = -static_cast<double>(i);
    }
    for (std::size_t w : {1, 2, 3, 50, 3000}) {
        CHECK(counted_run(up, w) <= 2 * up.size());
        CHECK(counted_run(down, w) <= 2 * down.size());
    }
}

TEST_CASE("non-increasing input with repeats costs at most 2n") {
    std::vector<double> a;
    for (int v = 500; v > 0; --v) {
        a.push_back(v);
        a.push_back(v);
    }
    for (std::size_t w : {2, 3, 10}) { CHECK(counted_run(a, w) <= 2 * a.size()); }
}

TEST_CASE("third push of 1, 3, 2 reports both extrema") {
    WedgeFilter<double> f{Window(3)};
    CHECK_FALSE(f.push(1).has_value());
    CHECK_FALSE(f.push(3).has_value());
    const auto r = f.push(2);
    REQUIRE(r.has_value());
    CHECK(r->max == 3);
    CHECK(r->min == 1);
    CHECK(r->argmax == 1);
    CHECK(r->argmin == 0);
    CHECK(r->window_end == 2);
}

TEST_CASE("batch and streaming spend the same comparisons") {
    const auto a = test::random_values(700, 13, 3);
    for (std::size_t w : {2, 5, 40}) {
        OrderProbe<> batch, stream;
        (void)wedge_run(a, Window(w), batch.predicate());
        WedgeFilter<double, CountingLess<std::less<>>> f(Window(w), stream.predicate());
        for (double x : a) { (void)f.push(x); }
        CHECK(batch.count() == stream.count());
    }
}

TEST_CASE("values-only run matches the full run") {
    const auto a = test::random_values(300, 19, 4);
    for (std::size_t w : {1, 2, 9, 300}) {
        const auto full = wedge_run(a, Window(w));
        const auto values = wedge_values(a, Window(w));
        CHECK_FALSE(values.has_args());
        CHECK(values.max == full.max);
        CHECK(values.min == full.min);
    }
}

TEST_CASE("small examples from the contract") {
    const auto id = wedge_run(std::vector<double>{1, 2, 3, 4}, Window(1));
    CHECK(id.max == std::vector<double>{1, 2, 3, 4});
    CHECK(id.min == id.max);
    const auto one = wedge_run(std::vector<double>{4, 3, 2, 1}, Window(4));
    CHECK(one.max == std::vector<double>{4});
    CHECK(one.min == std::vector<double>{1});
    CHECK_THROWS_AS(wedge_run(std::vector<double>{1, 2}, Window(3)), input_too_short);
    CHECK_THROWS_AS(WedgeFilter<double>(Window(0)), invalid_window);
}
