#include "ggc/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ggc {

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    std::uint64_t result = n;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            while (n % f == 0) {
                n /= f;
            }
            result -= result / f;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ConfigError("arithmetic overflow: " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

std::uint64_t round_up_multiple(std::uint64_t value, std::uint64_t step) {
    const std::uint64_t rem = value % step;
    if (rem == 0) {
        return value;
    }
    const std::uint64_t add = step - rem;
    if (value > std::numeric_limits<std::uint64_t>::max() - add) {
        throw ConfigError("arithmetic overflow rounding " + std::to_string(value));
    }
    return value + add;
}

CoefficientPair::CoefficientPair(std::uint64_t m1, std::uint64_t m2) : m1_(m1), m2_(m2) {
    if (m1 == 0 || m2 == 0) {
        throw ConfigError("coefficients must be positive");
    }
    if (m1 > max_coefficient || m2 > max_coefficient) {
        throw ConfigError("coefficients above 2^20 are not supported");
    }
    if (std::gcd(m1, m2) != 1) {
        throw ConfigError("coefficients " + std::to_string(m1) + ", " + std::to_string(m2) +
                          " are not coprime; reduce the pair first");
    }
    phi_m1_ = totient(m1);
    phi_m2_ = totient(m2);
    lcm_ = std::lcm(std::lcm(m1, m2), std::uint64_t{2});
}

std::string to_string(const CoefficientPair &pair) {
    return "(" + std::to_string(pair.m1()) + ", " + std::to_string(pair.m2()) + ")";
}

RawPair make_raw_pair(std::uint64_t m1, std::uint64_t m2) {
    if (m1 == 0 || m2 == 0) {
        throw ConfigError("coefficients must be positive");
    }
    return RawPair{m1, m2, std::gcd(m1, m2)};
}

std::pair<CoefficientPair, std::uint64_t> reduce_pair(std::uint64_t m1, std::uint64_t m2) {
    const RawPair raw = make_raw_pair(m1, m2);
    return {CoefficientPair{m1 / raw.d, m2 / raw.d}, raw.d};
}

bool satisfies_conditions(std::uint64_t n, const CoefficientPair &pair) {
    return n > 0 && std::gcd(n, pair.m1()) == 1 && std::gcd(n, pair.m2()) == 1 &&
           (n % 2) == ((pair.m1() + pair.m2()) % 2);
}

bool satisfies_unreduced_conditions(std::int64_t m1, std::int64_t m2, std::int64_t n) {
    const std::int64_t d = std::gcd(m1, m2);
    if (d == 0 || std::gcd(n, m1) != d || std::gcd(n, m2) != d) {
        return false;
    }
    std::int64_t pow2 = 1;
    while (d % (pow2 * 2) == 0) {
        pow2 *= 2;
    }
    const std::int64_t modulus = pow2 * 2;
    const std::int64_t diff = (n - m1 - m2) % modulus;
    return diff == 0;
}

ResidueWheel::ResidueWheel(const CoefficientPair &pair) : mask_(pair.lcm(), 0) {
    for (std::uint64_t i = 0; i < mask_.size(); ++i) {
        mask_[i] = satisfies_conditions(i + mask_.size(), pair) ? 1 : 0;
    }
}

std::uint64_t ResidueWheel::popcount() const {
    return static_cast<std::uint64_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

std::vector<std::uint64_t> ResidueWheel::residues() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i] != 0) {
            out.push_back(i);
        }
    }
    return out;
}

ScaledInstance scale_instance(const CoefficientPair &pair, std::uint64_t n, std::uint64_t d) {
    return ScaledInstance{checked_mul(d, pair.m1()), checked_mul(d, pair.m2()), checked_mul(d, n)};
}

}  // namespace ggc
