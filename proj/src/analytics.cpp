#include "ggc/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ggc {

namespace {

void tally(WindowTally &t, const PartitionRecord &rec) {
    if (rec.kind == PartitionKind::PMinimal) {
        t.pstar.add(rec.p);
    } else {
        t.qstar.add(rec.q);
    }
}

std::vector<WindowStat> to_stats(const std::vector<WindowTally> &tallies,
                                 std::uint64_t window_length) {
    std::vector<WindowStat> out;
    for (std::size_t k = 0; k < tallies.size(); ++k) {
        const auto &t = tallies[k];
        const std::uint64_t count = std::max(t.pstar.count, t.qstar.count);
        if (count == 0) {
            continue;
        }
        out.push_back(WindowStat{k * window_length + window_length / 2, count, t.pstar.mean(),
                                 t.qstar.mean(), t.pstar.max});
    }
    return out;
}

SummaryStat to_summary(const CoefficientPair &pair, std::uint64_t L, const WindowTally &t) {
    if (t.pstar.count == 0 && t.qstar.count == 0) {
        throw AnalyticsError("no partitioned qualifying n above k_hat up to " + std::to_string(L));
    }
    return SummaryStat{pair.m1(), pair.m2(), L,           t.pstar.mean(),
                       t.qstar.mean(), t.pstar.max, t.qstar.max};
}

void require_limit(std::uint64_t L, std::optional<std::uint64_t> k_hat) {
    if (k_hat && L <= *k_hat) {
        throw AnalyticsError("summary limit " + std::to_string(L) + " does not exceed k_hat " +
                             std::to_string(*k_hat));
    }
}

}  // namespace

double PrimeTally::mean() const {
    if (count == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return static_cast<double>(sum) / static_cast<double>(count);
}

std::vector<WindowStat> window_stats(std::span<const PartitionRecord> stream,
                                     std::uint64_t window_length) {
    std::vector<WindowTally> tallies;
    for (const auto &rec : stream) {
        const std::uint64_t k = rec.n / window_length;
        if (k >= tallies.size()) {
            tallies.resize(k + 1);
        }
        tally(tallies[k], rec);
    }
    return to_stats(tallies, window_length);
}

SummaryStat summary_stats(const CoefficientPair &pair, std::uint64_t L,
                          std::span<const PartitionRecord> stream,
                          std::optional<std::uint64_t> k_hat) {
    require_limit(L, k_hat);
    WindowTally t;
    for (const auto &rec : stream) {
        if (rec.n <= L && (!k_hat || rec.n > *k_hat)) {
            tally(t, rec);
        }
    }
    return to_summary(pair, L, t);
}

std::vector<RatioPoint> ratio_series(std::span<const WindowStat> windows) {
    std::vector<RatioPoint> out;
    for (const auto &w : windows) {
        if (std::isnan(w.avg_pstar) || std::isnan(w.avg_qstar)) {
            continue;
        }
        out.push_back({w.center, w.avg_pstar / w.avg_qstar});
    }
    return out;
}

std::vector<RatioPoint> ratio_series(std::span<const PartitionRecord> stream,
                                     std::uint64_t window_length) {
    const auto windows = window_stats(stream, window_length);
    return ratio_series(windows);
}

PredictorValues predictors(const CoefficientPair &orientation, double avg_pstar, std::uint64_t L) {
    if (!(avg_pstar > 1.0) || !std::isfinite(avg_pstar)) {
        throw AnalyticsError("predictors need an average p* above 1");
    }
    const double m1 = static_cast<double>(orientation.m1());
    const double m2 = static_cast<double>(orientation.m2());
    const double f = m1 * avg_pstar / (static_cast<double>(orientation.phi_m1()) * m2);
    const double g = avg_pstar / (static_cast<double>(orientation.phi_m2()) * std::log(avg_pstar));
    return PredictorValues{orientation.m1(), orientation.m2(), L, f, g};
}

std::pair<PredictorValues, PredictorValues> predictors(const CoefficientPair &pair,
                                                       const SummaryStat &summary) {
    return {predictors(pair, summary.avg_pstar, summary.L),
            predictors(pair.swapped(), summary.avg_qstar, summary.L)};
}

std::string to_string(LowercaseGroup g) {
    switch (g) {
    case LowercaseGroup::a: return "a";
    case LowercaseGroup::b: return "b";
    case LowercaseGroup::c: return "c";
    case LowercaseGroup::d: return "d";
    case LowercaseGroup::Tie: return "tie";
    }
    return "?";
}

std::string to_string(CapitalGroup g) {
    switch (g) {
    case CapitalGroup::A: return "A";
    case CapitalGroup::B: return "B";
    case CapitalGroup::C: return "C";
    case CapitalGroup::D: return "D";
    case CapitalGroup::Unstable: return "unstable";
    }
    return "?";
}

LowercaseGroup classify_lowercase(const PredictorValues &ab, const PredictorValues &ba) {
    if (ab.f == ba.f || ab.g == ba.g) {
        return LowercaseGroup::Tie;
    }
    const bool f_less = ab.f < ba.f;
    const bool g_less = ab.g < ba.g;
    if (f_less) {
        return g_less ? LowercaseGroup::a : LowercaseGroup::b;
    }
    return g_less ? LowercaseGroup::c : LowercaseGroup::d;
}

HypothesisOutcome evaluate_hypotheses(LowercaseGroup lowercase, CapitalGroup capital) {
    if (lowercase == LowercaseGroup::Tie || capital == CapitalGroup::Unstable) {
        throw AnalyticsError("hypotheses need strict labels on both sides");
    }
    const bool f_predicts_1a = lowercase == LowercaseGroup::a || lowercase == LowercaseGroup::b;
    const bool g_predicts_2a = lowercase == LowercaseGroup::a || lowercase == LowercaseGroup::c;
    const bool measured_1a = capital == CapitalGroup::A || capital == CapitalGroup::B;
    const bool measured_2a = capital == CapitalGroup::A || capital == CapitalGroup::C;
    return HypothesisOutcome{f_predicts_1a == measured_1a, g_predicts_2a == measured_2a};
}

PstarAccumulator::PstarAccumulator(std::uint64_t window_length, std::uint64_t summary_limit,
                                   std::uint64_t retain_below)
    : window_length_(window_length), summary_limit_(summary_limit), retain_below_(retain_below) {
    if (window_length == 0) {
        throw ConfigError("window length must be positive");
    }
}

void PstarAccumulator::add(const PartitionRecord &record) {
    if (record.n > summary_limit_) {
        return;
    }
    const std::uint64_t k = record.n / window_length_;
    if (k >= windows_.size()) {
        windows_.resize(k + 1);
    }
    tally(windows_[k], record);
    if (record.n <= retain_below_) {
        head_.push_back(record);
    } else {
        tally(tail_, record);
    }
}

std::unique_ptr<PartitionSink> PstarAccumulator::fork() const {
    return std::make_unique<PstarAccumulator>(window_length_, summary_limit_, retain_below_);
}

void PstarAccumulator::absorb(PartitionSink &other) {
    auto &o = dynamic_cast<PstarAccumulator &>(other);
    if (o.windows_.size() > windows_.size()) {
        windows_.resize(o.windows_.size());
    }
    for (std::size_t k = 0; k < o.windows_.size(); ++k) {
        windows_[k].pstar.merge(o.windows_[k].pstar);
        windows_[k].qstar.merge(o.windows_[k].qstar);
    }
    head_.insert(head_.end(), o.head_.begin(), o.head_.end());
    tail_.pstar.merge(o.tail_.pstar);
    tail_.qstar.merge(o.tail_.qstar);
}

std::vector<WindowStat> PstarAccumulator::windows() const {
    return to_stats(windows_, window_length_);
}

SummaryStat PstarAccumulator::summary(const CoefficientPair &pair,
                                      std::optional<std::uint64_t> k_hat) const {
    require_limit(summary_limit_, k_hat);
    if (k_hat && *k_hat > retain_below_) {
        throw AnalyticsError("k_hat " + std::to_string(*k_hat) +
                             " exceeds the record retention cutoff " +
                             std::to_string(retain_below_));
    }
    WindowTally t = tail_;
    for (const auto &rec : head_) {
        if (rec.n <= summary_limit_ && (!k_hat || rec.n > *k_hat)) {
            tally(t, rec);
        }
    }
    return to_summary(pair, summary_limit_, t);
}

}  // namespace ggc
