#include "ggc/sieve.hpp"

#include <cmath>
#include <string>

namespace ggc {

namespace {

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r;
}

void require_alpha_cover(const CoefficientPair &pair, std::uint64_t alpha,
                         const SmallPrimeTables &tables) {
    if (alpha / pair.m1() > tables.K) {
        throw ConfigError("small prime tables (K=" + std::to_string(tables.K) +
                          ") do not cover alpha/m1 = " + std::to_string(alpha / pair.m1()));
    }
}

void require_segment(std::uint64_t C, std::uint64_t D, std::uint64_t step, const char *what) {
    if (C >= D) {
        throw ConfigError(std::string(what) + ": empty interval [" + std::to_string(C) + ", " +
                          std::to_string(D) + ")");
    }
    if (C % step != 0 || D % step != 0) {
        throw ConfigError(std::string(what) + ": bounds must be multiples of " +
                          std::to_string(step));
    }
}

}  // namespace

SmallPrimeTables small_primes(std::uint64_t K) {
    if (K < 3) {
        throw ConfigError("small prime bound K must be at least 3");
    }
    SmallPrimeTables t;
    t.K = K;
    const std::uint64_t len = (K - 1) / 2;
    t.isprime.assign(len, 1);
    for (std::uint64_t i = 0; i < len; ++i) {
        const std::uint64_t p = 2 * i + 3;
        if (p * p > K) {
            break;
        }
        if (t.isprime[i] == 0) {
            continue;
        }
        for (std::uint64_t j = (p * p - 3) / 2; j < len; j += p) {
            t.isprime[j] = 0;
        }
    }
    t.primes.push_back(2);
    for (std::uint64_t i = 0; i < len; ++i) {
        if (t.isprime[i] != 0) {
            t.primes.push_back(2 * i + 3);
        }
    }
    return t;
}

M1pTables generate_ism1p(const CoefficientPair &pair, std::uint64_t alpha,
                         const SmallPrimeTables &tables) {
    require_alpha_cover(pair, alpha, tables);
    const std::uint64_t m1 = pair.m1();
    M1pTables out;
    out.alpha = alpha;
    out.flat = BitVector(alpha + 1);
    if (2 * m1 <= alpha) {
        out.flat.set(2 * m1);
    }
    for (std::uint64_t j = 0; j < tables.isprime.size() && m1 * (2 * j + 3) <= alpha; ++j) {
        if (tables.isprime[j] != 0) {
            out.flat.set(m1 * (2 * j + 3));
        }
    }
    return out;
}

M1pTables generate_m1p_buckets(const CoefficientPair &pair, std::uint64_t alpha,
                               const SmallPrimeTables &tables) {
    require_alpha_cover(pair, alpha, tables);
    const std::uint64_t m1 = pair.m1();
    const std::uint64_t m2 = pair.m2();
    M1pTables out;
    out.alpha = alpha;
    out.buckets.resize(m2);
    const std::uint64_t inc = (2 * m1) % m2;
    if (2 * m1 <= alpha) {
        out.buckets[inc].push_back(2 * m1);
    }
    std::uint64_t r = (3 * m1) % m2;
    for (std::uint64_t j = 0; j < tables.isprime.size() && m1 * (2 * j + 3) <= alpha; ++j) {
        if (tables.isprime[j] != 0) {
            out.buckets[r].push_back(m1 * (2 * j + 3));
        }
        r = (r >= m2 - inc) ? r + inc - m2 : r + inc;
    }
    return out;
}

std::vector<std::uint8_t> sieve_odd_interval(std::uint64_t c, std::uint64_t d,
                                             const SmallPrimeTables &tables) {
    if (c % 2 != 0 || d % 2 != 0 || c >= d) {
        throw ConfigError("odd-interval sieve needs even bounds c < d");
    }
    if (isqrt(d - 1) > tables.K) {
        throw ConfigError("small prime tables (K=" + std::to_string(tables.K) +
                          ") do not reach sqrt(" + std::to_string(d) + ")");
    }
    const std::uint64_t count = (d - c) / 2;
    std::vector<std::uint8_t> b(count, 1);
    if (c == 0) {
        b[0] = 0;  // 1 is not prime
    }
    for (std::size_t j = 1; j < tables.primes.size(); ++j) {
        const std::uint64_t p = tables.primes[j];
        if (p * p >= d) {
            break;
        }
        std::uint64_t s = 0;
        if (p * p >= c) {
            s = p * p;
        } else {
            s = ((c + p - 1) / p) * p;
            if (s % 2 == 0) {
                s += p;
            }
        }
        for (std::uint64_t k = (s - c - 1) / 2; k < count; k += p) {
            b[k] = 0;
        }
    }
    return b;
}

M2qSegment generate_m2q_buckets(const CoefficientPair &pair, std::uint64_t C, std::uint64_t D,
                                const SmallPrimeTables &tables) {
    const std::uint64_t m1 = pair.m1();
    const std::uint64_t m2 = pair.m2();
    require_segment(C, D, 2 * m1 * m2, "generate_m2q_buckets");
    const std::uint64_t c = C / m2;
    const std::uint64_t d = D / m2;
    const auto b = sieve_odd_interval(c, d, tables);

    M2qSegment out;
    out.C = C;
    out.D = D;
    out.buckets.resize(m1);
    const std::uint64_t inc = (2 * m2) % m1;
    if (c <= 2 && d > 2) {
        out.buckets[inc].push_back(2 * m2);
    }
    std::uint64_t r = (m2 % m1) * ((c + 1) % m1) % m1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != 0) {
            out.buckets[r].push_back(m2 * (c + 2 * i + 1));
        }
        r = (r >= m1 - inc) ? r + inc - m1 : r + inc;
    }
    return out;
}

M2qSegment generate_ism2q(const CoefficientPair &pair, std::uint64_t C, std::uint64_t D,
                          const SmallPrimeTables &tables) {
    const std::uint64_t m2 = pair.m2();
    require_segment(C, D, 2 * m2, "generate_ism2q");
    const std::uint64_t c = C / m2;
    const std::uint64_t d = D / m2;
    const auto b = sieve_odd_interval(c, d, tables);

    M2qSegment out;
    out.C = C;
    out.D = D;
    out.flat = BitVector(D - C);
    if (c <= 2 && d > 2) {
        out.flat.set(2 * m2 - C);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != 0) {
            out.flat.set(2 * m2 * i + m2);
        }
    }
    return out;
}

}  // namespace ggc
