#include <doctest.h>

#include <algorithm>
#include <array>

#include "ggc/bench.hpp"

using namespace ggc;
using std::chrono::nanoseconds;

namespace {

VariantTimes times(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {nanoseconds(a), nanoseconds(b), nanoseconds(c), nanoseconds(d)};
}

}  // namespace

TEST_CASE("classify_capital") {
    CHECK(classify_capital(times(10, 20, 30, 40)) == CapitalGroup::A);
    CHECK(classify_capital(times(10, 20, 40, 30)) == CapitalGroup::B);
    CHECK(classify_capital(times(20, 10, 30, 40)) == CapitalGroup::C);
    CHECK(classify_capital(times(20, 10, 40, 30)) == CapitalGroup::D);
    CHECK(classify_capital(times(77192, 104914, 290478, 182075)) == CapitalGroup::B);
    CHECK(classify_capital(times(100, 101, 300, 400)) == CapitalGroup::Unstable);
    CHECK(classify_capital(times(100, 200, 300, 301)) == CapitalGroup::Unstable);
}

TEST_CASE("only the four descending-first orderings get a label") {
    std::array<std::int64_t, 4> t{100, 200, 300, 400};
    int labelled = 0;
    do {
        const auto v = times(t[0], t[1], t[2], t[3]);
        const auto g = classify_capital(v);
        CHECK((g != CapitalGroup::Unstable) == descending_dominates(v));
        labelled += g != CapitalGroup::Unstable ? 1 : 0;
    } while (std::next_permutation(t.begin(), t.end()));
    CHECK(labelled == 4);
}

TEST_CASE("time_variants runs every variant") {
    const CoefficientPair pair(1, 2);
    const auto row = time_variants(make_raw_pair(1, 2), make_plan(pair, 10'000), 3);
    CHECK(row.m1 == 1);
    CHECK(row.m2 == 2);
    CHECK(row.times.t_1a.count() > 0);
    CHECK(row.times.t_2b.count() > 0);
    CHECK_THROWS_AS(time_variants(make_raw_pair(1, 2), make_plan(pair, 10'000), 0), ConfigError);
}
