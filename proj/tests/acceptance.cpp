// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any hard criterion fails; criterion 9 is informational.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ggc/analytics.hpp"
#include "ggc/bench.hpp"
#include "ggc/eggc.hpp"
#include "ggc/oracle.hpp"
#include "ggc/verify.hpp"

using namespace ggc;

namespace {

constexpr std::uint64_t billion = 1'000'000'000;
constexpr double tolerance = 0.001 + 1e-9;

struct Outcome {
    bool pass = true;
    bool informational = false;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " MISMATCH{" << what << "}";
        }
    }
};

std::string fixed(double v, int decimals = 3) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(decimals) << v;
    return s.str();
}

bool near(double value, double target) { return std::abs(value - target) <= tolerance; }

// Both descending orientations over n <= L, with windows of 10^6.
struct FullRun {
    std::optional<std::uint64_t> k_hat;
    SummaryStat summary;      // k_hat < n <= L
    SummaryStat summary_all;  // every partitioned n <= L
    std::vector<WindowStat> windows;
    double seconds;
};

class LargeRuns {
public:
    const FullRun &get(std::uint64_t m1, std::uint64_t m2, bool with_qstar = true) {
        const auto key = std::tuple{m1, m2, with_qstar};
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        const CoefficientPair pair(m1, m2);
        const auto start = std::chrono::steady_clock::now();
        PstarAccumulator acc(default_window, billion);
        const auto plan = make_plan(pair, billion + 1);
        const RunOptions options{1, 1'000'000, &acc};
        const auto forward = run_verification(pair, all_variants[0], plan, options);
        if (with_qstar) {
            run_verification(pair, all_variants[1], plan, options);
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return cache_
            .emplace(key, FullRun{forward.k_hat, acc.summary(pair, forward.k_hat),
                                  acc.summary(pair, std::nullopt), acc.windows(), elapsed.count()})
            .first->second;
    }

private:
    std::map<std::tuple<std::uint64_t, std::uint64_t, bool>, FullRun> cache_;
};

Outcome criterion1(LargeRuns &) {
    Outcome o;
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> expected{
        {1, 1, 2}, {1, 2, 5}, {1, 3, 10}, {1, 6, 13}, {2, 3, 17}};
    double slowest = 0;
    for (auto [a, b, k] : expected) {
        const CoefficientPair pair(a, b);
        const auto plan = make_plan(pair, 10'000'000);
        for (const auto v : all_variants) {
            const auto r = run_verification(pair, v, plan);
            slowest = std::max(slowest, std::chrono::duration<double>(r.wall_time).count());
            o.require(r.k_hat == k, to_string(pair) + " " + to_string(v) + " khat=" +
                                        (r.k_hat ? std::to_string(*r.k_hat) : "none"));
            for (const auto &c : confirm_residual(pair, r.residual)) {
                o.require(c.verdict == ResidualVerdict::NoPartitionAtAll,
                          "partition beyond alpha at n=" + std::to_string(c.n));
            }
        }
    }
    o.detail << "khat 2/5/10/13/17 for (1,1)/(1,2)/(1,3)/(1,6)/(2,3), four variants, N=1e7;"
             << " slowest run " << fixed(slowest, 2) << "s";
    o.require(slowest < 10.0, "runtime");
    return o;
}

Outcome criterion2(LargeRuns &) {
    Outcome o;
    const CoefficientPair pair(32, 37);
    const auto plan = make_plan(pair, 10'000'000);
    double slowest = 0;
    for (const auto v : all_variants) {
        const auto r = run_verification(pair, v, plan);
        slowest = std::max(slowest, std::chrono::duration<double>(r.wall_time).count());
        o.require(r.k_hat == 412'987u, to_string(v) + " khat=" +
                                           (r.k_hat ? std::to_string(*r.k_hat) : "none"));
    }
    o.detail << "(32,37) khat 412987, four variants, N=1e7; slowest run " << fixed(slowest, 2)
             << "s";
    o.require(slowest < 30.0, "runtime");
    return o;
}

Outcome criterion3(LargeRuns &runs) {
    Outcome o;
    const auto &r12 = runs.get(1, 2);
    const auto &s = r12.summary;
    o.require(near(s.avg_pstar, 80.839), "(1,2) avg p*");
    o.require(s.max_pstar == 3037, "(1,2) max p*");
    o.require(near(s.avg_qstar, 32.8), "(1,2) avg q*");
    o.require(s.max_qstar == 1609, "(1,2) max q*");
    const auto &r23 = runs.get(2, 3);
    o.require(near(r23.summary.avg_pstar, 69.352), "(2,3) avg p*");
    o.require(r23.summary.max_pstar == 2083, "(2,3) max p*");
    o.detail << "L=1e9 (1,2): avg p* " << fixed(s.avg_pstar, 4) << " max p* " << s.max_pstar
             << " avg q* " << fixed(s.avg_qstar, 4) << " max q* " << s.max_qstar
             << "; (2,3): avg p* " << fixed(r23.summary.avg_pstar, 4) << " max p* "
             << r23.summary.max_pstar << " (" << fixed(r23.summary_all.avg_pstar, 4)
             << " counting n <= khat); " << fixed(r12.seconds, 1) << "s and "
             << fixed(r23.seconds, 1) << "s";
    return o;
}

Outcome criterion4(LargeRuns &runs) {
    Outcome o;
    const auto &a = runs.get(32, 37, false);
    const auto &b = runs.get(1, 37, false);
    o.require(a.summary.max_pstar == 78'697, "(32,37) max p*");
    // the tabulated average counts every partitioned n <= 10^9, including n <= k_hat
    o.require(near(b.summary_all.avg_pstar, 2064.47552), "(1,37) avg p*");
    o.detail << "L=1e9 (32,37): max p* " << a.summary.max_pstar << "; (1,37): avg p* over n <= L "
             << fixed(b.summary_all.avg_pstar, 5) << " (over k_hat < n <= L "
             << fixed(b.summary.avg_pstar, 5) << "); " << fixed(a.seconds, 1) << "s and "
             << fixed(b.seconds, 1) << "s";
    return o;
}

Outcome criterion5(LargeRuns &) {
    Outcome o;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> coef(1, 40);
    std::set<std::pair<std::uint64_t, std::uint64_t>> chosen;
    while (chosen.size() < 20) {
        const auto a = coef(rng);
        const auto b = coef(rng);
        if (std::gcd(a, b) == 1) {
            chosen.emplace(a, b);
        }
    }
    std::size_t partitions = 0;
    for (auto [a, b] : chosen) {
        const CoefficientPair pair(a, b);
        const auto plan = make_plan(pair, 100'000);
        const auto expected = oracle::oracle_residual_range(pair, plan.N);
        for (const auto v : all_variants) {
            const auto r = run_verification(pair, v, plan, {1, plan.N, nullptr});
            const auto tag = to_string(pair) + " " + to_string(v);
            o.require(r.residual == expected, tag + " residual");
            for (const auto &rec : r.partitions) {
                const auto want = oracle::oracle_partition(pair, rec.n);
                const bool ok = rec.kind == PartitionKind::PMinimal
                                    ? want.p_star == rec.p && want.q_starstar == rec.q
                                    : want.q_star == rec.q && want.p_starstar == rec.p;
                if (!ok) {
                    o.require(false, tag + " n=" + std::to_string(rec.n));
                    break;
                }
            }
            partitions += r.partitions.size();
        }
    }
    o.detail << "20 random coprime pairs <= 40, N=1e5, four variants vs brute force; "
             << partitions << " partitions compared";
    return o;
}

LowercaseGroup lowercase_of(const CoefficientPair &pair, const FullRun &run) {
    const auto [ab, ba] = predictors(pair, run.summary);
    return classify_lowercase(ab, ba);
}

Outcome criterion6(LargeRuns &runs) {
    Outcome o;
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, LowercaseGroup>> expected{
        {1, 2, LowercaseGroup::b},
        {1, 3, LowercaseGroup::b},
        {2, 3, LowercaseGroup::c},
        {1, 7, LowercaseGroup::c},
        {1, 5, LowercaseGroup::d}};
    o.detail << "L=1e9 groups:";
    for (auto [a, b, want] : expected) {
        const CoefficientPair pair(a, b);
        const auto got = lowercase_of(pair, runs.get(a, b));
        o.detail << " " << to_string(pair) << "=" << to_string(got);
        o.require(got == want, to_string(pair) + " expected " + to_string(want));
    }
    return o;
}

Outcome criterion7(LargeRuns &runs) {
    Outcome o;
    const auto ratios = ratio_series(runs.get(1, 2).windows);
    double lo = INFINITY;
    double hi = -INFINITY;
    std::size_t outside = 0;
    for (const auto &r : ratios) {
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
        // the envelope is given to three decimals
        const double shown = std::round(r.ratio * 1000.0) / 1000.0;
        outside += (shown < 2.408 || shown > 2.519) ? 1 : 0;
    }
    o.require(ratios.size() == 1000, "window count " + std::to_string(ratios.size()));
    o.require(outside == 0, std::to_string(outside) + " windows outside");
    o.detail << ratios.size() << " windows of (1,2) to 1e9, ratio range [" << fixed(lo, 6)
             << ", " << fixed(hi, 6) << "] vs [2.408, 2.519] at 3 decimals";
    return o;
}

Outcome criterion8(LargeRuns &) {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint64_t> coef(1, 30);
    std::uniform_int_distribution<std::uint64_t> scale(1, 9);
    std::uniform_int_distribution<std::uint64_t> value(1, 100'000);
    std::size_t instances = 0;
    while (instances < 5'000) {
        const auto a = coef(rng);
        const auto b = coef(rng);
        if (std::gcd(a, b) != 1) {
            continue;
        }
        ++instances;
        const CoefficientPair pair(a, b);
        const auto d = scale(rng);
        const auto n = value(rng);
        const auto s = scale_instance(pair, n, d);
        const auto sm1 = static_cast<std::int64_t>(s.m1);
        const auto sm2 = static_cast<std::int64_t>(s.m2);
        const auto tag = to_string(pair) + " d=" + std::to_string(d) + " n=" + std::to_string(n);
        o.require(satisfies_unreduced_conditions(sm1, sm2, static_cast<std::int64_t>(s.n)) ==
                      satisfies_conditions(n, pair),
                  tag + " conditions");
        const auto reduced = oracle::oracle_partition(pair, n);
        const auto scaled = oracle::oracle_partition(s.m1, s.m2, s.n);
        o.require(reduced.p_star == scaled.p_star && reduced.q_star == scaled.q_star,
                  tag + " partitions");
        const auto w = residue_wheel(pair);
        o.require(w.admits(n) == satisfies_conditions(n, pair), tag + " wheel");
        o.require(w.residues() == residue_wheel(pair.swapped()).residues(), tag + " symmetry");
        if (!o.pass) {
            break;
        }
    }
    o.detail << instances << " random scaled instances (m <= 30, d <= 9, n <= 1e5)";
    return o;
}

Outcome criterion9(LargeRuns &) {
    Outcome o;
    o.informational = true;
    bool all = true;
    o.detail << "N=1e8 single-threaded:";
    for (auto [a, b] : {std::pair{1u, 2u}, {2u, 3u}, {3u, 4u}}) {
        const CoefficientPair pair(a, b);
        const auto row = time_variants(make_raw_pair(a, b), make_plan(pair, 100'000'000), 1);
        const bool ok = descending_dominates(row.times);
        all = all && ok;
        o.detail << " " << to_string(pair) << " " << fixed(row.times.t_1a.count() / 1e9, 2) << "/"
                 << fixed(row.times.t_1b.count() / 1e9, 2) << "/"
                 << fixed(row.times.t_2a.count() / 1e9, 2) << "/"
                 << fixed(row.times.t_2b.count() / 1e9, 2) << "s group "
                 << to_string(row.capital) << (ok ? "" : " (ordering differs)");
    }
    o.pass = all;
    return o;
}

Outcome criterion10(LargeRuns &) {
    Outcome o;
    const auto twins = count_solutions({1, -1, 2, 100}).count;
    const auto sophie = count_solutions({1, -2, 1, 100}).count;
    o.require(twins == 8, "twins");
    o.require(sophie == 10, "sophie germain");
    o.detail << "twin pairs <= 100: " << twins << "; Sophie Germain q <= 100: " << sophie;
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> only;
    app.add_option("--only", only, "criteria to run (default: all)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome(LargeRuns &)>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10};
    const std::set<int> selected(only.begin(), only.end());

    LargeRuns runs;
    bool failed = false;
    for (int i = 1; i <= 10; ++i) {
        if (!selected.empty() && !selected.count(i)) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[i - 1](runs);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const char *label = o.pass ? "PASS" : (o.informational ? "INFO" : "FAIL");
        std::cout << "criterion " << std::setw(2) << i << ": " << label << "  " << o.detail.str()
                  << std::endl;
        failed = failed || (!o.pass && !o.informational);
    }
    return failed ? 1 : 0;
}
