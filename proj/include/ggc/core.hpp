#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggc {

// Raised for invalid user-supplied configuration (bad pair, plan, limits).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t max_coefficient = std::uint64_t{1} << 20;

std::uint64_t totient(std::uint64_t n);

// Multiplication that throws ConfigError instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// Smallest multiple of `step` that is >= value.
std::uint64_t round_up_multiple(std::uint64_t value, std::uint64_t step);

/// A reduced coefficient pair (m1, m2) with gcd(m1, m2) = 1.
///
/// `lcm` is the least common multiple of 2, m1 and m2; qualifying n are
/// periodic modulo it.
class CoefficientPair {
public:
    CoefficientPair(std::uint64_t m1, std::uint64_t m2);

    std::uint64_t m1() const { return m1_; }
    std::uint64_t m2() const { return m2_; }
    std::uint64_t phi_m1() const { return phi_m1_; }
    std::uint64_t phi_m2() const { return phi_m2_; }
    std::uint64_t phi_m1m2() const { return phi_m1_ * phi_m2_; }
    std::uint64_t lcm() const { return lcm_; }

    CoefficientPair swapped() const { return CoefficientPair{m2_, m1_}; }

    friend bool operator==(const CoefficientPair &, const CoefficientPair &) = default;

private:
    std::uint64_t m1_;
    std::uint64_t m2_;
    std::uint64_t phi_m1_;
    std::uint64_t phi_m2_;
    std::uint64_t lcm_;
};

std::string to_string(const CoefficientPair &pair);

struct RawPair {
    std::uint64_t m1;
    std::uint64_t m2;
    std::uint64_t d;  // gcd(m1, m2)
};

RawPair make_raw_pair(std::uint64_t m1, std::uint64_t m2);

// Divides out d = gcd(m1, m2). Counterexamples of the raw pair are d times
// those of the reduced one.
std::pair<CoefficientPair, std::uint64_t> reduce_pair(std::uint64_t m1, std::uint64_t m2);

// n > 0, gcd(n, m1) = gcd(n, m2) = 1 and n = m1 + m2 (mod 2).
bool satisfies_conditions(std::uint64_t n, const CoefficientPair &pair);

// Conditions for an arbitrary (not necessarily coprime) pair:
// gcd(n, m1) = gcd(n, m2) = gcd(m1, m2) and n = m1 + m2 (mod 2^(s+1)),
// 2^s being the largest power of two dividing both coefficients.
// Signed inputs so negative coefficients (the extended conjecture) work too.
bool satisfies_unreduced_conditions(std::int64_t m1, std::int64_t m2, std::int64_t n);

class ResidueWheel {
public:
    explicit ResidueWheel(const CoefficientPair &pair);

    std::uint64_t modulus() const { return mask_.size(); }
    bool operator[](std::uint64_t residue) const { return mask_[residue] != 0; }
    bool admits(std::uint64_t n) const { return mask_[n % mask_.size()] != 0; }
    std::uint64_t popcount() const;
    std::vector<std::uint64_t> residues() const;

private:
    std::vector<std::uint8_t> mask_;
};

inline ResidueWheel residue_wheel(const CoefficientPair &pair) { return ResidueWheel{pair}; }

enum class PartitionKind { PMinimal, QMinimal };

/// One witness n = m1*p + m2*q, always stated in the caller's (m1, m2)
/// orientation. PMinimal carries (p*, q**), QMinimal carries (p**, q*).
struct PartitionRecord {
    std::uint64_t n;
    std::uint64_t p;
    std::uint64_t q;
    PartitionKind kind;

    friend bool operator==(const PartitionRecord &, const PartitionRecord &) = default;
};

struct ScaledInstance {
    std::uint64_t m1;
    std::uint64_t m2;
    std::uint64_t n;
};

ScaledInstance scale_instance(const CoefficientPair &pair, std::uint64_t n, std::uint64_t d);

}  // namespace ggc
