#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ggc {

inline constexpr std::uint64_t eggc_bound_guard = 100'000'000;

/// n = m1*p + m2*q with m1 > 0 and m2 < 0; `bound` caps q (p follows from
/// q). With (1, -1, 2) the solutions are twin primes, with (1, -2, 1) the
/// Sophie Germain primes q.
struct EggcQuery {
    std::int64_t m1;
    std::int64_t m2;
    std::int64_t n;
    std::uint64_t bound;
};

struct EggcResult {
    std::uint64_t count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> solutions;  // (p, q), ascending
    bool conditions_hold = false;  // gcd and 2-adic conditions on (m1, |m2|, n)
};

EggcResult count_solutions(const EggcQuery &query);

// Deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

}  // namespace ggc
