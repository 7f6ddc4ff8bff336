#pragma once

#include <cstdint>
#include <vector>

#include "ggc/bitvec.hpp"
#include "ggc/core.hpp"

namespace ggc {

/// Primes up to K from an odd-only sieve of Eratosthenes.
///
/// `isprime[i]` describes 2i + 3; `primes` is ascending and starts at 2.
struct SmallPrimeTables {
    std::uint64_t K = 0;
    std::vector<std::uint8_t> isprime;
    std::vector<std::uint64_t> primes;
};

SmallPrimeTables small_primes(std::uint64_t K);

/// The values m1*p <= alpha for prime p, in one or both layouts.
///
/// `flat` has alpha + 1 bits, bit i set iff i = m1*p. `buckets[r]` holds
/// the values congruent to r modulo m2, ascending. Each generator fills
/// only its own layout.
struct M1pTables {
    std::uint64_t alpha = 0;
    BitVector flat;
    std::vector<std::vector<std::uint64_t>> buckets;
};

M1pTables generate_ism1p(const CoefficientPair &pair, std::uint64_t alpha,
                         const SmallPrimeTables &tables);
M1pTables generate_m1p_buckets(const CoefficientPair &pair, std::uint64_t alpha,
                               const SmallPrimeTables &tables);

/// The values m2*q in [C, D) for prime q.
///
/// `flat[i]` is set iff C + i = m2*q. `buckets[r]` holds the values
/// congruent to r modulo m1, ascending. As with M1pTables, each generator
/// fills one layout; the verification drivers extend them across segments.
struct M2qSegment {
    std::uint64_t C = 0;
    std::uint64_t D = 0;
    BitVector flat;
    std::vector<std::vector<std::uint64_t>> buckets;
};

M2qSegment generate_m2q_buckets(const CoefficientPair &pair, std::uint64_t C, std::uint64_t D,
                                const SmallPrimeTables &tables);
M2qSegment generate_ism2q(const CoefficientPair &pair, std::uint64_t C, std::uint64_t D,
                          const SmallPrimeTables &tables);

// Segmented sieve core shared by both m2*q generators: entry i is 1 iff
// c + 2i + 1 is prime, for the (d - c)/2 odd numbers in [c, d). c must be
// even. Needs every prime below sqrt(d) in `tables`.
std::vector<std::uint8_t> sieve_odd_interval(std::uint64_t c, std::uint64_t d,
                                             const SmallPrimeTables &tables);

}  // namespace ggc
