#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggc/core.hpp"
#include "ggc/verify.hpp"

namespace ggc {

inline constexpr std::uint64_t default_window = 1'000'000;

// Raised when statistics are requested over an empty or invalid range.
class AnalyticsError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Integer count/sum/max of one minimal prime (p* or q*). Division happens
// only when a mean is requested.
struct PrimeTally {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    std::uint64_t max = 0;

    void add(std::uint64_t v) {
        ++count;
        sum += v;
        max = v > max ? v : max;
    }
    void merge(const PrimeTally &o) {
        count += o.count;
        sum += o.sum;
        max = o.max > max ? o.max : max;
    }
    double mean() const;  // NaN when empty
};

struct WindowTally {
    PrimeTally pstar;  // from p-minimal records
    PrimeTally qstar;  // from q-minimal records
};

/// Statistics of the window [k*W, (k+1)*W), reported at its centre.
/// `count` is the number of partitioned n in the window; an average is NaN
/// when the stream held no records of that kind.
struct WindowStat {
    std::uint64_t center;
    std::uint64_t count;
    double avg_pstar;
    double avg_qstar;
    std::uint64_t max_pstar;
};

std::vector<WindowStat> window_stats(std::span<const PartitionRecord> stream,
                                     std::uint64_t window_length = default_window);

/// Average and maximum of p* and q* over qualifying k_hat < n <= L. Without
/// k_hat every partitioned n <= L counts.
struct SummaryStat {
    std::uint64_t m1;
    std::uint64_t m2;
    std::uint64_t L;
    double avg_pstar;
    double avg_qstar;
    std::uint64_t max_pstar;
    std::uint64_t max_qstar;
};

SummaryStat summary_stats(const CoefficientPair &pair, std::uint64_t L,
                          std::span<const PartitionRecord> stream,
                          std::optional<std::uint64_t> k_hat);

struct RatioPoint {
    std::uint64_t center;
    double ratio;  // avg p* / avg q*
};

std::vector<RatioPoint> ratio_series(std::span<const WindowStat> windows);
std::vector<RatioPoint> ratio_series(std::span<const PartitionRecord> stream,
                                     std::uint64_t window_length = default_window);

/// f = m1 * avg / (phi(m1) * m2), g = avg / (phi(m2) * ln avg), for the
/// orientation (m1, m2) and the average p* of that orientation.
struct PredictorValues {
    std::uint64_t m1;
    std::uint64_t m2;
    std::uint64_t L;
    double f;
    double g;
};

PredictorValues predictors(const CoefficientPair &orientation, double avg_pstar, std::uint64_t L);

// Both orientations from one summary: avg p* of (m2, m1) is avg q* of (m1, m2).
std::pair<PredictorValues, PredictorValues> predictors(const CoefficientPair &pair,
                                                       const SummaryStat &summary);

enum class LowercaseGroup { a, b, c, d, Tie };
enum class CapitalGroup { A, B, C, D, Unstable };

std::string to_string(LowercaseGroup g);
std::string to_string(CapitalGroup g);

// a: f< g<, b: f< g>, c: f> g<, d: f> g>, comparing (m1, m2) to (m2, m1).
LowercaseGroup classify_lowercase(const PredictorValues &ab, const PredictorValues &ba);

struct HypothesisOutcome {
    bool h1;  // f ordering predicts 1a vs 1b
    bool h2;  // g ordering predicts 2a vs 2b
};

// Tie and Unstable labels carry no ordering; they raise AnalyticsError.
HypothesisOutcome evaluate_hypotheses(LowercaseGroup lowercase, CapitalGroup capital);

/// Streaming accumulator for full runs.
///
/// Records beyond summary_limit are dropped. Records with n <= retain_below
/// are kept individually so the summary can drop n <= k_hat afterwards;
/// records in (retain_below, summary_limit] go into a tail tally.
class PstarAccumulator : public PartitionSink {
public:
    PstarAccumulator(std::uint64_t window_length, std::uint64_t summary_limit,
                     std::uint64_t retain_below = 1'000'000);

    void add(const PartitionRecord &record) override;
    std::unique_ptr<PartitionSink> fork() const override;
    void absorb(PartitionSink &other) override;

    std::vector<WindowStat> windows() const;
    SummaryStat summary(const CoefficientPair &pair, std::optional<std::uint64_t> k_hat) const;

    std::uint64_t window_length() const { return window_length_; }

private:
    std::uint64_t window_length_;
    std::uint64_t summary_limit_;
    std::uint64_t retain_below_;
    std::vector<WindowTally> windows_;
    std::vector<PartitionRecord> head_;
    WindowTally tail_;
};

}  // namespace ggc
