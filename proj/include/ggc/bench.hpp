#pragma once

#include <array>
#include <chrono>
#include <cstdint>

#include "ggc/analytics.hpp"
#include "ggc/verify.hpp"

namespace ggc {

// Orderings closer than this relative margin are reported as Unstable.
inline constexpr double instability_margin = 0.02;

struct VariantTimes {
    std::chrono::nanoseconds t_1a;
    std::chrono::nanoseconds t_1b;
    std::chrono::nanoseconds t_2a;
    std::chrono::nanoseconds t_2b;
};

struct BenchRow {
    std::uint64_t m1;
    std::uint64_t m2;
    std::uint64_t N;
    VariantTimes times;
    CapitalGroup capital;
};

// A: 1a 1b 2a 2b, B: 1a 1b 2b 2a, C: 1b 1a 2a 2b, D: 1b 1a 2b 2a (fastest
// first). Any other ordering, or a pair inside either strategy closer than
// the instability margin, is Unstable.
CapitalGroup classify_capital(const VariantTimes &times);

// Median wall time of each variant over `repetitions` single-threaded runs,
// sieving included.
BenchRow time_variants(const RawPair &raw, const SegmentPlan &plan, unsigned repetitions);

// true when both descending variants beat both ascending ones.
bool descending_dominates(const VariantTimes &times);

}  // namespace ggc
