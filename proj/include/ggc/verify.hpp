#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggc/core.hpp"
#include "ggc/sieve.hpp"

namespace ggc {

/// Limits of one verification run.
///
/// N: n is checked for every qualifying n < N. delta: segment length.
/// alpha: only partitions with m1*p <= alpha are searched for. K: bound of
/// the small-prime sieve. 2*m1*m2 must divide N and delta, alpha <= delta,
/// N > 9, and K >= max(isqrt(N/m2), alpha/m1) in both orientations.
struct SegmentPlan {
    std::uint64_t N = 0;
    std::uint64_t delta = 0;
    std::uint64_t alpha = 0;
    std::uint64_t K = 0;

    friend bool operator==(const SegmentPlan &, const SegmentPlan &) = default;
};

// Resolves defaults: N is the smallest valid multiple >= limit; delta the
// smallest multiple of 2*m1*m2 >= 5e7 (or >= clamp(N, 1e6, 5e7) below 1e9);
// alpha = min(delta, 5e7, N).
SegmentPlan make_plan(const CoefficientPair &pair, std::uint64_t limit,
                      std::optional<std::uint64_t> delta = std::nullopt,
                      std::optional<std::uint64_t> alpha = std::nullopt);

// Throws ConfigError when any plan invariant fails for `pair`.
void validate_plan(const CoefficientPair &pair, const SegmentPlan &plan);

std::uint64_t required_small_prime_bound(const CoefficientPair &pair, std::uint64_t N,
                                         std::uint64_t alpha);

enum class Strategy { Descending, Ascending };
enum class Orientation { AsGiven, Swapped };

/// 1a/1b: descending search for q**; 2a/2b: ascending search for p*.
/// Orientation b runs the same code on (m2, m1) and so yields q-minimal
/// partitions of the original pair.
struct AlgorithmVariant {
    Strategy strategy = Strategy::Descending;
    Orientation orientation = Orientation::AsGiven;

    friend bool operator==(const AlgorithmVariant &, const AlgorithmVariant &) = default;
};

inline constexpr std::array<AlgorithmVariant, 4> all_variants{{
    {Strategy::Descending, Orientation::AsGiven},
    {Strategy::Descending, Orientation::Swapped},
    {Strategy::Ascending, Orientation::AsGiven},
    {Strategy::Ascending, Orientation::Swapped},
}};

std::string to_string(AlgorithmVariant variant);
AlgorithmVariant parse_variant(std::string_view text);

// Receives every partition found during a run. fork() makes an empty sink
// of the same kind for an independent segment; absorb() merges one back.
class PartitionSink {
public:
    virtual ~PartitionSink() = default;
    virtual void add(const PartitionRecord &record) = 0;
    virtual std::unique_ptr<PartitionSink> fork() const = 0;
    virtual void absorb(PartitionSink &other) = 0;
};

struct CheckOptions {
    // Orientation of the caller; Swapped turns the p-minimal partitions of
    // the run pair into q-minimal partitions of the original one.
    Orientation orientation = Orientation::AsGiven;
    std::uint64_t retain_cutoff = std::numeric_limits<std::uint64_t>::max();
    PartitionSink *sink = nullptr;
};

struct SegmentResult {
    std::vector<std::uint64_t> residual;          // ascending
    std::vector<PartitionRecord> partitions;      // ascending, n <= retain_cutoff
};

// Descending search: for each qualifying n in [A, B), walks the bucket of
// m2*q values congruent to n mod m1 downward from a moving cursor until
// n - m2*q is a flagged m1*p. `segment` must hold buckets covering
// [max(0, A - alpha), B); `ism1p` the flat view.
SegmentResult check1_segment(const CoefficientPair &pair, std::uint64_t A, std::uint64_t B,
                             const M2qSegment &segment, const M1pTables &ism1p,
                             const ResidueWheel &wheel, const CheckOptions &options = {});

// Ascending search: for each qualifying n in [A, B), walks the bucket of
// m1*p values congruent to n mod m2 upward until n - m1*p is a flagged m2*q.
// `segment` must hold the flat view from C <= max(0, A - alpha) to >= B.
SegmentResult check2_segment(const CoefficientPair &pair, std::uint64_t A, std::uint64_t B,
                             const M2qSegment &segment, const M1pTables &m1p,
                             const ResidueWheel &wheel, const CheckOptions &options = {});

struct RunOptions {
    unsigned threads = 1;
    std::uint64_t retain_cutoff = 1'000'000;
    PartitionSink *sink = nullptr;
};

struct RunReport {
    CoefficientPair pair;  // reduced, in the caller's orientation
    std::uint64_t d = 1;   // gcd of the raw coefficients
    AlgorithmVariant variant;
    SegmentPlan plan;
    std::vector<std::uint64_t> residual;
    std::optional<std::uint64_t> k_hat;
    std::vector<PartitionRecord> partitions;
    std::chrono::nanoseconds wall_time{0};
};

RunReport run_verification(const RawPair &raw, AlgorithmVariant variant, const SegmentPlan &plan,
                           const RunOptions &options = {});
RunReport run_verification(const CoefficientPair &pair, AlgorithmVariant variant,
                           const SegmentPlan &plan, const RunOptions &options = {});

enum class ResidualVerdict { NoPartitionAtAll, PartitionFoundBeyondAlpha };

struct ResidualConfirmation {
    std::uint64_t n;
    ResidualVerdict verdict;
    std::optional<PartitionRecord> partition;  // p-minimal, when one exists
};

// Exhaustive re-check of residual numbers by the trial-division oracle.
std::vector<ResidualConfirmation> confirm_residual(const CoefficientPair &pair,
                                                   const std::vector<std::uint64_t> &residual);

}  // namespace ggc
