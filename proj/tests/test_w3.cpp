#include <doctest.h>

#include "helpers.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/probe.hpp"
#include "maxmin/w3.hpp"

using namespace maxmin;

namespace {

std::uint64_t counted_w3(const std::vector<double>& a) {
    OrderProbe<> probe;
    (void)run_w3(a, probe.predicate());
    return probe.count();
}

} // namespace

TEST_CASE("w3 on a short sequence") {
    const auto s = run_w3(std::vector<double>{1, 3, 2, 5, 4});
    CHECK(s.max == std::vector<double>{3, 5, 5});
    CHECK(s.min == std::vector<double>{1, 2, 2});
    CHECK(s.argmax == std::vector<Position>{1, 3, 3});
    CHECK(s.argmin == std::vector<Position>{0, 2, 2});
}

TEST_CASE("w3 needs three samples") {
    CHECK_THROWS_AS(run_w3(std::vector<double>{1, 2}), input_too_short);
    CHECK(run_w3(std::vector<double>{1, 2, 0}).size() == 1);
}

TEST_CASE("w3 equals the oracle on every word over four letters") {
    for (std::size_t n = 3; n <= 8; ++n) {
        test::for_each_word(n, 4, [&](const std::vector<double>& a) {
            const auto v = verify_equal(run_w3(a), oracle_run(a, Window(3)), true);
            if (!v) { FAIL_CHECK("n=" << n << " " << v.describe()); }
            CHECK(counted_w3(a) <= 2 * n - 2);
        });
    }
}

TEST_CASE("w3 stays within 2n comparisons") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = test::random_values(5000, seed, seed % 2 ? 3 : 0);
        CHECK(counted_w3(a) <= 2 * a.size());
        CHECK(verify_equal(run_w3(a), oracle_run(a, Window(3)), true).equal);
    }
}

TEST_CASE("w3 on constant input costs 2(n-1)") {
    const std::vector<double> a(100, 7.0);
    CHECK(counted_w3(a) == 2 * (a.size() - 1));
    const auto s = run_w3(a);
    for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(s.argmax[j] == j);
        CHECK(s.argmin[j] == j);
    }
}
