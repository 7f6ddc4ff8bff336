#include "ggc/oracle.hpp"

#include <numeric>
#include <string>

namespace ggc::oracle {

bool is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    if (x % 2 == 0) {
        return x == 2;
    }
    for (std::uint64_t f = 3; f * f <= x; f += 2) {
        if (x % f == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Smallest prime a with n = ma*a + mb*b, b prime; returns {a, b}.
std::optional<std::pair<std::uint64_t, std::uint64_t>> smallest_first(std::uint64_t ma,
                                                                      std::uint64_t mb,
                                                                      std::uint64_t n) {
    for (std::uint64_t a = 2; ma * a < n; ++a) {
        const std::uint64_t rest = n - ma * a;
        if (rest % mb != 0 || !is_prime(a)) {
            continue;
        }
        if (is_prime(rest / mb)) {
            return std::pair{a, rest / mb};
        }
    }
    return std::nullopt;
}

}  // namespace

OracleResult oracle_partition(std::uint64_t m1, std::uint64_t m2, std::uint64_t n) {
    OracleResult out;
    out.n = n;
    const auto by_p = smallest_first(m1, m2, n);
    if (!by_p) {
        return out;
    }
    const auto by_q = smallest_first(m2, m1, n);
    out.has_partition = true;
    out.p_star = by_p->first;
    out.q_starstar = by_p->second;
    out.q_star = by_q->first;
    out.p_starstar = by_q->second;
    return out;
}

OracleResult oracle_partition(const CoefficientPair &pair, std::uint64_t n) {
    return oracle_partition(pair.m1(), pair.m2(), n);
}

std::vector<std::uint64_t> oracle_residual_range(const CoefficientPair &pair, std::uint64_t N) {
    if (N > residual_range_guard) {
        throw ConfigError("oracle range limited to " + std::to_string(residual_range_guard));
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n < N; ++n) {
        if (std::gcd(n, pair.m1()) != 1 || std::gcd(n, pair.m2()) != 1 ||
            (n + pair.m1() + pair.m2()) % 2 != 0) {
            continue;
        }
        if (!smallest_first(pair.m1(), pair.m2(), n)) {
            out.push_back(n);
        }
    }
    return out;
}

}  // namespace ggc::oracle
