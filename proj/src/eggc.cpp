#include "ggc/eggc.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ggc/core.hpp"
#include "ggc/sieve.hpp"

namespace ggc {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (x % p == 0) {
            return x == p;
        }
    }
    std::uint64_t d = x - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These witnesses are exact below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t y = pow_mod(a, d, x);
        if (y == 1 || y == x - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            y = mul_mod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

EggcResult count_solutions(const EggcQuery &query) {
    if (query.m1 <= 0 || query.m2 >= 0) {
        throw ConfigError("extended form needs m1 > 0 and m2 < 0");
    }
    if (query.bound < 2) {
        throw ConfigError("bound must be at least 2");
    }
    if (query.bound > eggc_bound_guard) {
        throw ConfigError("bound limited to " + std::to_string(eggc_bound_guard));
    }
    EggcResult out;
    out.conditions_hold = satisfies_unreduced_conditions(query.m1, -query.m2, query.n);

    // m1*p = n + |m2|*q for each prime q <= bound.
    const auto tables = small_primes(std::max<std::uint64_t>(query.bound, 3));
    const __int128 m1 = query.m1;
    const __int128 abs_m2 = -static_cast<__int128>(query.m2);
    for (const std::uint64_t q : tables.primes) {
        if (q > query.bound) {
            break;
        }
        const __int128 rhs = static_cast<__int128>(query.n) + abs_m2 * q;
        if (rhs < 2 * m1 || rhs % m1 != 0) {
            continue;
        }
        const __int128 p = rhs / m1;
        if (p > static_cast<__int128>(UINT64_MAX)) {
            continue;
        }
        if (is_prime_u64(static_cast<std::uint64_t>(p))) {
            out.solutions.emplace_back(static_cast<std::uint64_t>(p), q);
        }
    }
    // p = (n + |m2| q)/m1 grows with q, so q order is p order.
    out.count = out.solutions.size();
    return out;
}

}  // namespace ggc
