#include "ggc/bench.hpp"

#include <algorithm>
#include <vector>

namespace ggc {

namespace {

bool close(std::chrono::nanoseconds a, std::chrono::nanoseconds b) {
    const double lo = static_cast<double>(std::min(a, b).count());
    const double hi = static_cast<double>(std::max(a, b).count());
    return hi - lo < instability_margin * lo;
}

}  // namespace

bool descending_dominates(const VariantTimes &t) {
    return std::max(t.t_1a, t.t_1b) < std::min(t.t_2a, t.t_2b);
}

CapitalGroup classify_capital(const VariantTimes &t) {
    if (!descending_dominates(t) || close(t.t_1a, t.t_1b) || close(t.t_2a, t.t_2b)) {
        return CapitalGroup::Unstable;
    }
    const bool one_a_first = t.t_1a < t.t_1b;
    const bool two_a_first = t.t_2a < t.t_2b;
    if (one_a_first) {
        return two_a_first ? CapitalGroup::A : CapitalGroup::B;
    }
    return two_a_first ? CapitalGroup::C : CapitalGroup::D;
}

BenchRow time_variants(const RawPair &raw, const SegmentPlan &plan, unsigned repetitions) {
    if (repetitions == 0) {
        throw ConfigError("repetitions must be at least 1");
    }
    const auto [pair, d] = reduce_pair(raw.m1, raw.m2);
    validate_plan(pair, plan);
    RunOptions single;
    single.threads = 1;
    single.retain_cutoff = 0;

    std::array<std::chrono::nanoseconds, 4> medians{};
    for (std::size_t v = 0; v < all_variants.size(); ++v) {
        std::vector<std::chrono::nanoseconds> samples;
        for (unsigned rep = 0; rep < repetitions; ++rep) {
            samples.push_back(run_verification(pair, all_variants[v], plan, single).wall_time);
        }
        std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
        medians[v] = samples[samples.size() / 2];
    }
    const VariantTimes times{medians[0], medians[1], medians[2], medians[3]};
    return BenchRow{pair.m1(), pair.m2(), plan.N, times, classify_capital(times)};
}

}  // namespace ggc
