#include "ggc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ggc/oracle.hpp"

namespace ggc {

namespace {

constexpr std::uint64_t large_segment = 50'000'000;
constexpr std::uint64_t desk_min_segment = 1'000'000;
constexpr std::uint64_t desk_scale = 1'000'000'000;

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

// Steps a residue counter down by 2 modulo m.
struct DownCounter {
    std::uint64_t value;
    std::uint64_t modulus;
    std::uint64_t step;

    DownCounter(std::uint64_t n, std::uint64_t m) : value(n % m), modulus(m), step(2 % m) {}
    void advance() { value = (value >= step) ? value - step : value + modulus - step; }
};

// First n < B with n = m1 + m2 (mod 2), or nullopt when it falls below A.
std::optional<std::uint64_t> top_candidate(const CoefficientPair &pair, std::uint64_t A,
                                           std::uint64_t B) {
    if (B <= A) {
        return std::nullopt;
    }
    std::uint64_t n = B - 1;
    if (n % 2 != (pair.m1() + pair.m2()) % 2) {
        if (n == A) {
            return std::nullopt;
        }
        --n;
    }
    return n;
}

class Emitter {
public:
    Emitter(const CoefficientPair &run_pair, const CheckOptions &options, SegmentResult &out)
        : m1_(run_pair.m1()), m2_(run_pair.m2()), options_(options), out_(out) {}

    // n = m1*p + m2*q in the run orientation, p minimal.
    void found(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
        const PartitionRecord rec = options_.orientation == Orientation::AsGiven
                                        ? PartitionRecord{n, p, q, PartitionKind::PMinimal}
                                        : PartitionRecord{n, q, p, PartitionKind::QMinimal};
        if (n <= options_.retain_cutoff) {
            out_.partitions.push_back(rec);
        }
        if (options_.sink != nullptr) {
            options_.sink->add(rec);
        }
    }

    void missing(std::uint64_t n) { out_.residual.push_back(n); }

    void finish() {
        std::reverse(out_.residual.begin(), out_.residual.end());
        std::reverse(out_.partitions.begin(), out_.partitions.end());
    }

    std::uint64_t m1() const { return m1_; }
    std::uint64_t m2() const { return m2_; }

private:
    std::uint64_t m1_;
    std::uint64_t m2_;
    const CheckOptions &options_;
    SegmentResult &out_;
};

}  // namespace

std::uint64_t required_small_prime_bound(const CoefficientPair &pair, std::uint64_t N,
                                         std::uint64_t alpha) {
    const std::uint64_t a = std::max(isqrt(N / pair.m2()), alpha / pair.m1());
    const std::uint64_t b = std::max(isqrt(N / pair.m1()), alpha / pair.m2());
    return std::max({a, b, std::uint64_t{3}});
}

SegmentPlan make_plan(const CoefficientPair &pair, std::uint64_t limit,
                      std::optional<std::uint64_t> delta, std::optional<std::uint64_t> alpha) {
    const std::uint64_t step = checked_mul(checked_mul(2, pair.m1()), pair.m2());
    SegmentPlan plan;
    plan.N = round_up_multiple(std::max<std::uint64_t>(limit, 10), step);
    if (delta) {
        plan.delta = *delta;
    } else {
        const std::uint64_t target =
            plan.N >= desk_scale ? large_segment
                                 : std::clamp(plan.N, desk_min_segment, large_segment);
        plan.delta = round_up_multiple(target, step);
    }
    plan.alpha = alpha ? *alpha : std::min({plan.delta, large_segment, plan.N});
    plan.K = required_small_prime_bound(pair, plan.N, plan.alpha);
    validate_plan(pair, plan);
    return plan;
}

void validate_plan(const CoefficientPair &pair, const SegmentPlan &plan) {
    const std::uint64_t step = checked_mul(checked_mul(2, pair.m1()), pair.m2());
    if (plan.N <= 9) {
        throw ConfigError("verification limit N must exceed 9");
    }
    if (plan.N % step != 0) {
        throw ConfigError("N must be a multiple of 2*m1*m2 = " + std::to_string(step));
    }
    if (plan.delta == 0 || plan.delta % step != 0) {
        throw ConfigError("segment length must be a positive multiple of 2*m1*m2 = " +
                          std::to_string(step));
    }
    if (plan.alpha == 0 || plan.alpha > plan.delta) {
        throw ConfigError("alpha must satisfy 0 < alpha <= segment length");
    }
    const std::uint64_t top = std::uint64_t{1} << 63;
    if (plan.N > top / std::max(pair.m1(), pair.m2())) {
        throw ConfigError("N too large for 64-bit arithmetic with these coefficients");
    }
    checked_mul(plan.N, std::max(pair.m1(), pair.m2()));
    if (plan.K < required_small_prime_bound(pair, plan.N, plan.alpha)) {
        throw ConfigError("small prime bound K=" + std::to_string(plan.K) + " is below " +
                          std::to_string(required_small_prime_bound(pair, plan.N, plan.alpha)));
    }
}

std::string to_string(AlgorithmVariant variant) {
    std::string out = variant.strategy == Strategy::Descending ? "1" : "2";
    out += variant.orientation == Orientation::AsGiven ? "a" : "b";
    return out;
}

AlgorithmVariant parse_variant(std::string_view text) {
    for (const auto v : all_variants) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw ConfigError("unknown variant '" + std::string(text) + "' (expected 1a, 1b, 2a or 2b)");
}

SegmentResult check1_segment(const CoefficientPair &pair, std::uint64_t A, std::uint64_t B,
                             const M2qSegment &segment, const M1pTables &ism1p,
                             const ResidueWheel &wheel, const CheckOptions &options) {
    SegmentResult out;
    const auto start = top_candidate(pair, A, B);
    if (!start) {
        return out;
    }
    const std::uint64_t lo = A > ism1p.alpha ? A - ism1p.alpha : 0;
    if (segment.C > lo || segment.D < B || segment.buckets.size() != pair.m1()) {
        throw std::logic_error("check1_segment: m2q buckets do not cover [A - alpha, B)");
    }
    Emitter emit(pair, options, out);
    const std::uint64_t m1 = pair.m1();
    const std::uint64_t m2 = pair.m2();
    const std::uint64_t alpha = ism1p.alpha;
    const BitVector &flat = ism1p.flat;

    std::vector<std::size_t> cursor(m1);
    for (std::uint64_t r = 0; r < m1; ++r) {
        cursor[r] = segment.buckets[r].size();
    }

    std::uint64_t n = *start;
    DownCounter r(n, m1);
    DownCounter s(n, wheel.modulus());
    while (true) {
        if (wheel[s.value] && n > 0) {
            const auto &bucket = segment.buckets[r.value];
            std::size_t &l = cursor[r.value];
            while (l > 0 && n < bucket[l - 1] + 2 * m1) {
                --l;
            }
            bool done = false;
            for (std::size_t i = l; i-- > 0;) {
                const std::uint64_t v = bucket[i];
                const std::uint64_t diff = n - v;
                if (diff > alpha) {
                    break;
                }
                if (flat.test(diff)) {
                    emit.found(n, diff / m1, v / m2);
                    done = true;
                    break;
                }
            }
            if (!done) {
                emit.missing(n);
            }
        }
        if (n < A + 2) {
            break;
        }
        n -= 2;
        r.advance();
        s.advance();
    }
    emit.finish();
    return out;
}

SegmentResult check2_segment(const CoefficientPair &pair, std::uint64_t A, std::uint64_t B,
                             const M2qSegment &segment, const M1pTables &m1p,
                             const ResidueWheel &wheel, const CheckOptions &options) {
    SegmentResult out;
    const auto start = top_candidate(pair, A, B);
    if (!start) {
        return out;
    }
    const std::uint64_t lo = A > m1p.alpha ? A - m1p.alpha : 0;
    if (segment.C > lo || segment.C + segment.flat.size() < B ||
        m1p.buckets.size() != pair.m2()) {
        throw std::logic_error("check2_segment: ism2q does not cover [A - alpha, B)");
    }
    Emitter emit(pair, options, out);
    const std::uint64_t m1 = pair.m1();
    const std::uint64_t m2 = pair.m2();
    const std::uint64_t C = segment.C;
    const BitVector &flat = segment.flat;

    std::uint64_t n = *start;
    DownCounter r(n, m2);
    DownCounter s(n, wheel.modulus());
    while (true) {
        if (wheel[s.value] && n > 0) {
            bool done = false;
            for (const std::uint64_t v : m1p.buckets[r.value]) {
                if (v + C > n) {
                    break;
                }
                if (flat.test(n - v - C)) {
                    emit.found(n, v / m1, (n - v) / m2);
                    done = true;
                    break;
                }
            }
            if (!done) {
                emit.missing(n);
            }
        }
        if (n < A + 2) {
            break;
        }
        n -= 2;
        r.advance();
        s.advance();
    }
    emit.finish();
    return out;
}

namespace {

struct Segment {
    std::uint64_t A;
    std::uint64_t B;
};

std::vector<Segment> segments_of(const SegmentPlan &plan) {
    std::vector<Segment> out;
    for (std::uint64_t A = 0; A < plan.N; A += plan.delta) {
        out.push_back({A, std::min(A + plan.delta, plan.N)});
    }
    return out;
}

void merge_into(RunReport &report, SegmentResult &&part) {
    report.residual.insert(report.residual.end(), part.residual.begin(), part.residual.end());
    report.partitions.insert(report.partitions.end(), part.partitions.begin(),
                             part.partitions.end());
}

// Single-threaded descending driver: bucket entries >= A - alpha are kept
// from the previous segment and only [A, B) is sieved anew.
void drive_descending(const CoefficientPair &run, const SegmentPlan &plan,
                      const SmallPrimeTables &tables, const CheckOptions &check,
                      RunReport &report) {
    const auto ism1p = generate_ism1p(run, plan.alpha, tables);
    const ResidueWheel wheel(run);
    M2qSegment window;
    window.buckets.resize(run.m1());
    for (const auto [A, B] : segments_of(plan)) {
        const std::uint64_t lo = A > plan.alpha ? A - plan.alpha : 0;
        auto fresh = generate_m2q_buckets(run, A, B, tables);
        for (std::uint64_t r = 0; r < run.m1(); ++r) {
            auto &bucket = window.buckets[r];
            bucket.erase(bucket.begin(), std::lower_bound(bucket.begin(), bucket.end(), lo));
            bucket.insert(bucket.end(), fresh.buckets[r].begin(), fresh.buckets[r].end());
        }
        window.C = lo;
        window.D = B;
        merge_into(report, check1_segment(run, A, B, window, ism1p, wheel, check));
    }
}

// Single-threaded ascending driver: the last alpha flags of the previous
// window are prepended to the freshly sieved [A, B).
void drive_ascending(const CoefficientPair &run, const SegmentPlan &plan,
                     const SmallPrimeTables &tables, const CheckOptions &check,
                     RunReport &report) {
    const auto m1p = generate_m1p_buckets(run, plan.alpha, tables);
    const ResidueWheel wheel(run);
    M2qSegment window;
    for (const auto [A, B] : segments_of(plan)) {
        const std::uint64_t lo = A > plan.alpha ? A - plan.alpha : 0;
        auto fresh = generate_ism2q(run, A, B, tables);
        BitVector flat = BitVector::slice(window.flat, lo - window.C, A - window.C);
        flat.append(fresh.flat);
        window.C = lo;
        window.D = B;
        window.flat = std::move(flat);
        merge_into(report, check2_segment(run, A, B, window, m1p, wheel, check));
    }
}

// One segment built from scratch over its whole overlap window, for the
// multi-threaded path.
SegmentResult independent_segment(const CoefficientPair &run, Strategy strategy,
                                  const SegmentPlan &plan, const SmallPrimeTables &tables,
                                  const M1pTables &m1p, const ResidueWheel &wheel, Segment seg,
                                  const CheckOptions &check) {
    const std::uint64_t step = 2 * run.m1() * run.m2();
    const std::uint64_t lo = seg.A > plan.alpha ? seg.A - plan.alpha : 0;
    const std::uint64_t C = lo - lo % step;
    if (strategy == Strategy::Descending) {
        const auto window = generate_m2q_buckets(run, C, seg.B, tables);
        return check1_segment(run, seg.A, seg.B, window, m1p, wheel, check);
    }
    const auto window = generate_ism2q(run, C, seg.B, tables);
    return check2_segment(run, seg.A, seg.B, window, m1p, wheel, check);
}

void drive_parallel(const CoefficientPair &run, Strategy strategy, const SegmentPlan &plan,
                    const SmallPrimeTables &tables, const CheckOptions &check, unsigned threads,
                    RunReport &report) {
    const M1pTables m1p = strategy == Strategy::Descending
                              ? generate_ism1p(run, plan.alpha, tables)
                              : generate_m1p_buckets(run, plan.alpha, tables);
    const ResidueWheel wheel(run);
    const auto segs = segments_of(plan);
    std::vector<SegmentResult> results(segs.size());
    std::vector<std::unique_ptr<PartitionSink>> sinks(segs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < segs.size(); i = next++) {
            CheckOptions local = check;
            if (check.sink != nullptr) {
                sinks[i] = check.sink->fork();
                local.sink = sinks[i].get();
            }
            results[i] = independent_segment(run, strategy, plan, tables, m1p, wheel, segs[i],
                                             local);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        merge_into(report, std::move(results[i]));
        if (sinks[i]) {
            check.sink->absorb(*sinks[i]);
        }
    }
}

}  // namespace

RunReport run_verification(const CoefficientPair &pair, AlgorithmVariant variant,
                           const SegmentPlan &plan, const RunOptions &options) {
    validate_plan(pair, plan);
    const auto started = std::chrono::steady_clock::now();
    const CoefficientPair run =
        variant.orientation == Orientation::AsGiven ? pair : pair.swapped();

    RunReport report{pair, 1, variant, plan, {}, std::nullopt, {}, {}};
    const CheckOptions check{variant.orientation, options.retain_cutoff, options.sink};
    const auto tables = small_primes(plan.K);
    if (options.threads > 1) {
        drive_parallel(run, variant.strategy, plan, tables, check, options.threads, report);
    } else if (variant.strategy == Strategy::Descending) {
        drive_descending(run, plan, tables, check, report);
    } else {
        drive_ascending(run, plan, tables, check, report);
    }
    // Segments arrive in ascending order and are each sorted; dedup guards
    // the contract against any overlap.
    report.residual.erase(std::unique(report.residual.begin(), report.residual.end()),
                          report.residual.end());
    if (!report.residual.empty()) {
        report.k_hat = report.residual.back();
    }
    report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - started);
    return report;
}

RunReport run_verification(const RawPair &raw, AlgorithmVariant variant, const SegmentPlan &plan,
                           const RunOptions &options) {
    const auto [pair, d] = reduce_pair(raw.m1, raw.m2);
    RunReport report = run_verification(pair, variant, plan, options);
    report.d = d;
    return report;
}

std::vector<ResidualConfirmation> confirm_residual(const CoefficientPair &pair,
                                                   const std::vector<std::uint64_t> &residual) {
    std::vector<ResidualConfirmation> out;
    out.reserve(residual.size());
    for (const std::uint64_t n : residual) {
        const auto found = oracle::oracle_partition(pair, n);
        if (!found.has_partition) {
            out.push_back({n, ResidualVerdict::NoPartitionAtAll, std::nullopt});
        } else {
            out.push_back({n, ResidualVerdict::PartitionFoundBeyondAlpha,
                           PartitionRecord{n, *found.p_star, *found.q_starstar,
                                           PartitionKind::PMinimal}});
        }
    }
    return out;
}

}  // namespace ggc
