#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggc/core.hpp"

// Brute-force reference. Primality is plain trial division; nothing here
// touches the sieve code it is used to check.
namespace ggc::oracle {

bool is_prime(std::uint64_t x);

struct OracleResult {
    std::uint64_t n = 0;
    bool has_partition = false;
    std::optional<std::uint64_t> p_star;       // smallest p
    std::optional<std::uint64_t> q_starstar;   // partner of p_star (largest q)
    std::optional<std::uint64_t> p_starstar;   // largest p
    std::optional<std::uint64_t> q_star;       // smallest q
};

// Works for any positive coefficients, coprime or not.
OracleResult oracle_partition(std::uint64_t m1, std::uint64_t m2, std::uint64_t n);
OracleResult oracle_partition(const CoefficientPair &pair, std::uint64_t n);

inline constexpr std::uint64_t residual_range_guard = 1'000'000;

// Qualifying n < N with no partition. N above the guard is refused
// (ConfigError).
std::vector<std::uint64_t> oracle_residual_range(const CoefficientPair &pair, std::uint64_t N);

}  // namespace ggc::oracle
