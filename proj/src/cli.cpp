#include "ggc/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include "ggc/analytics.hpp"
#include "ggc/bench.hpp"
#include "ggc/eggc.hpp"
#include "ggc/oracle.hpp"
#include "ggc/verify.hpp"

namespace ggc::cli {

namespace {

class CsvFile {
public:
    CsvFile(const std::filesystem::path &dir, const std::string &name, const std::string &header)
        : path_(dir / name), stream_(path_, std::ios::binary | std::ios::trunc) {
        if (!stream_) {
            throw ConfigError("cannot open " + path_.string() + " for writing");
        }
        stream_ << header << '\n';
    }

    template <typename... Args>
    void row(fmt::format_string<Args...> format, Args &&...args) {
        stream_ << fmt::format(format, std::forward<Args>(args)...) << '\n';
    }

private:
    std::filesystem::path path_;
    std::ofstream stream_;
};

std::string fixed(double v, int decimals) {
    if (std::isnan(v)) {
        return "";
    }
    return fmt::format("{:.{}f}", v, decimals);
}

std::string optional_max(double avg, std::uint64_t max) {
    return std::isnan(avg) ? "" : std::to_string(max);
}

std::string khat_text(const std::optional<std::uint64_t> &k) {
    return k ? std::to_string(*k) : "";
}

CoefficientPair reduced_pair(const RunConfig &config, std::ostream &err) {
    if (config.m1 <= 0 || config.m2 <= 0) {
        throw ConfigError("m1 and m2 must be positive for this command");
    }
    const auto [pair, d] =
        reduce_pair(static_cast<std::uint64_t>(config.m1), static_cast<std::uint64_t>(config.m2));
    if (d > 1) {
        fmt::print(err,
                   "note: gcd({}, {}) = {}; reporting for the reduced pair {}; multiply n by {} "
                   "for the original coefficients\n",
                   config.m1, config.m2, d, to_string(pair), d);
    }
    return pair;
}

void write_residual(const RunConfig &config, const CoefficientPair &pair,
                    const std::vector<std::uint64_t> &residual) {
    CsvFile csv(config.output, "residual.csv", "m1,m2,n");
    for (const auto n : residual) {
        csv.row("{},{},{}", pair.m1(), pair.m2(), n);
    }
}

void write_summary(const RunConfig &config, const CoefficientPair &pair, std::uint64_t L,
                   const std::optional<std::uint64_t> &k_hat,
                   const std::optional<SummaryStat> &summary, const std::string &variant,
                   std::chrono::nanoseconds wall) {
    CsvFile csv(config.output, "summary.csv",
                "m1,m2,limit,khat,avg_pstar,max_pstar,avg_qstar,max_qstar,variant,wall_time_ns");
    if (summary) {
        csv.row("{},{},{},{},{},{},{},{},{},{}", pair.m1(), pair.m2(), L, khat_text(k_hat),
                fixed(summary->avg_pstar, 3), optional_max(summary->avg_pstar, summary->max_pstar),
                fixed(summary->avg_qstar, 3), optional_max(summary->avg_qstar, summary->max_qstar),
                variant, wall.count());
    } else {
        csv.row("{},{},{},{},,,,,{},{}", pair.m1(), pair.m2(), L, khat_text(k_hat), variant,
                wall.count());
    }
}

// Returns exit_alpha_too_small when some residual number does have a
// partition (alpha was too small for this N).
int report_confirmation(const CoefficientPair &pair, const RunReport &report, std::ostream &err) {
    int status = exit_ok;
    for (const auto &c : confirm_residual(pair, report.residual)) {
        if (c.verdict == ResidualVerdict::PartitionFoundBeyondAlpha) {
            fmt::print(err, "warning: n={} has partition p={}, q={} beyond alpha={}\n", c.n,
                       c.partition->p, c.partition->q, report.plan.alpha);
            status = exit_alpha_too_small;
        }
    }
    return status;
}

int run_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto pair = reduced_pair(config, err);
    const auto plan = make_plan(pair, config.limit, config.segment, config.alpha);
    const auto variant = parse_variant(config.variant.value_or("1a"));
    const std::uint64_t L = plan.N - 1;
    PstarAccumulator acc(config.window_length, L, config.retain);
    const RunReport report =
        run_verification(pair, variant, plan, {config.threads, config.retain, &acc});

    write_residual(config, pair, report.residual);
    std::optional<SummaryStat> summary;
    try {
        summary = acc.summary(pair, report.k_hat);
    } catch (const AnalyticsError &e) {
        fmt::print(err, "note: no summary statistics: {}\n", e.what());
    }
    write_summary(config, pair, L, report.k_hat, summary, to_string(variant), report.wall_time);
    fmt::print(out, "pair {} variant {} N={} delta={} alpha={}: {} residual, khat={}\n",
               to_string(pair), to_string(variant), plan.N, plan.delta, plan.alpha,
               report.residual.size(), report.k_hat ? std::to_string(*report.k_hat) : "none");
    return report_confirmation(pair, report, err);
}

struct BothOrientations {
    SegmentPlan plan;
    RunReport forward;
    RunReport backward;
};

// Descending runs in both orientations into one accumulator: p* from 1a,
// q* from 1b, summarised over n <= limit.
BothOrientations run_both(const RunConfig &config, const CoefficientPair &pair,
                          PstarAccumulator &acc) {
    const auto plan = make_plan(pair, config.limit + 1, config.segment, config.alpha);
    const RunOptions options{config.threads, config.retain, &acc};
    auto forward = run_verification(pair, parse_variant("1a"), plan, options);
    auto backward = run_verification(pair, parse_variant("1b"), plan, options);
    if (forward.residual != backward.residual) {
        throw std::logic_error("orientations disagree on the residual set");
    }
    return {plan, std::move(forward), std::move(backward)};
}

int run_stats(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto pair = reduced_pair(config, err);
    PstarAccumulator acc(config.window_length, config.limit, config.retain);
    const auto runs = run_both(config, pair, acc);
    const auto summary = acc.summary(pair, runs.forward.k_hat);

    write_residual(config, pair, runs.forward.residual);
    write_summary(config, pair, config.limit, runs.forward.k_hat, summary, "1a+1b",
                  runs.forward.wall_time + runs.backward.wall_time);
    const auto windows = acc.windows();
    {
        CsvFile csv(config.output, "stats.csv",
                    "m1,m2,window_center,count,avg_pstar,avg_qstar,max_pstar");
        for (const auto &w : windows) {
            csv.row("{},{},{},{},{},{},{}", pair.m1(), pair.m2(), w.center, w.count,
                    fixed(w.avg_pstar, 3), fixed(w.avg_qstar, 3), w.max_pstar);
        }
    }
    {
        CsvFile csv(config.output, "ratio.csv", "m1,m2,window_center,ratio");
        for (const auto &r : ratio_series(windows)) {
            csv.row("{},{},{},{}", pair.m1(), pair.m2(), r.center, fixed(r.ratio, 6));
        }
    }
    fmt::print(out, "pair {} up to {}: khat={} avg p*={:.3f} max p*={} avg q*={:.3f} max q*={}\n",
               to_string(pair), config.limit, khat_text(runs.forward.k_hat), summary.avg_pstar,
               summary.max_pstar, summary.avg_qstar, summary.max_qstar);
    return std::max(report_confirmation(pair, runs.forward, err),
                    report_confirmation(pair, runs.backward, err));
}

int run_predict(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto pair = reduced_pair(config, err);
    PstarAccumulator acc(config.window_length, config.limit, config.retain);
    const auto runs = run_both(config, pair, acc);
    const auto summary = acc.summary(pair, runs.forward.k_hat);
    const auto [ab, ba] = predictors(pair, summary);
    const auto group = classify_lowercase(ab, ba);
    CsvFile csv(config.output, "predict.csv", "m1,m2,limit,f_ab,f_ba,g_ab,g_ba,group");
    csv.row("{},{},{},{},{},{},{},{}", pair.m1(), pair.m2(), config.limit, fixed(ab.f, 6),
            fixed(ba.f, 6), fixed(ab.g, 6), fixed(ba.g, 6), to_string(group));
    fmt::print(out, "pair {} up to {}: f={:.6f}/{:.6f} g={:.6f}/{:.6f} group={}\n",
               to_string(pair), config.limit, ab.f, ba.f, ab.g, ba.g, to_string(group));
    return std::max(report_confirmation(pair, runs.forward, err),
                    report_confirmation(pair, runs.backward, err));
}

int run_bench(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto pair = reduced_pair(config, err);
    const auto plan = make_plan(pair, config.limit, config.segment, config.alpha);
    if (config.threads > 1) {
        fmt::print(err, "note: bench always runs single-threaded\n");
    }
    const auto row = time_variants(make_raw_pair(pair.m1(), pair.m2()), plan, config.repetitions);
    CsvFile csv(config.output, "bench.csv", "m1,m2,limit,t_1a_ns,t_1b_ns,t_2a_ns,t_2b_ns,group");
    csv.row("{},{},{},{},{},{},{},{}", row.m1, row.m2, row.N, row.times.t_1a.count(),
            row.times.t_1b.count(), row.times.t_2a.count(), row.times.t_2b.count(),
            to_string(row.capital));
    fmt::print(out, "pair {} N={}: 1a={}ns 1b={}ns 2a={}ns 2b={}ns group={}{}\n",
               to_string(pair), row.N, row.times.t_1a.count(), row.times.t_1b.count(),
               row.times.t_2a.count(), row.times.t_2b.count(), to_string(row.capital),
               descending_dominates(row.times) ? "" : " (ascending variant beat a descending one)");
    return exit_ok;
}

int run_oracle(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const auto pair = reduced_pair(config, err);
    const auto residual = oracle::oracle_residual_range(pair, config.limit);
    write_residual(config, pair, residual);
    fmt::print(out, "pair {} below {}: {} counterexamples, max={}\n", to_string(pair),
               config.limit, residual.size(),
               residual.empty() ? "none" : std::to_string(residual.back()));
    return exit_ok;
}

int run_eggc(const RunConfig &config, std::ostream &out) {
    const auto result = count_solutions({config.m1, config.m2, config.n, config.bound});
    CsvFile csv(config.output, "eggc.csv", "m1,m2,n,bound,count");
    csv.row("{},{},{},{},{}", config.m1, config.m2, config.n, config.bound, result.count);
    fmt::print(out, "{} = {}*p + ({})*q with prime q <= {}: {} solutions; conditions {}\n",
               config.n, config.m1, config.m2, config.bound, result.count,
               result.conditions_hold ? "hold" : "do not hold");
    return exit_ok;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        std::filesystem::create_directories(config.output);
        switch (config.command) {
        case Command::verify: return run_verify(config, out, err);
        case Command::stats: return run_stats(config, out, err);
        case Command::predict: return run_predict(config, out, err);
        case Command::bench: return run_bench(config, out, err);
        case Command::oracle: return run_oracle(config, out, err);
        case Command::eggc: return run_eggc(config, out);
        }
    } catch (const ConfigError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config;
    } catch (const AnalyticsError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config;
    }
    return exit_config;
}

int main_entry(int argc, char **argv) {
    CLI::App app{"Generalized Goldbach verification engine"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--m1", config.m1, "first coefficient")->required();
        sub->add_option("--m2", config.m2, "second coefficient")->required();
        sub->add_option("--out", config.output, "output directory");
    };
    auto add_plan = [&](CLI::App *sub) {
        sub->add_option("--limit", config.limit, "verification limit")->required();
        sub->add_option("--segment", config.segment, "segment length (multiple of 2*m1*m2)");
        sub->add_option("--alpha", config.alpha, "cap on m1*p during the search");
        sub->add_option("--threads", config.threads, "segment-parallel workers")
            ->check(CLI::PositiveNumber);
        sub->add_option("--retain", config.retain, "keep individual partitions for n <= this");
    };

    auto *verify = app.add_subcommand("verify", "find all counterexamples below the limit");
    add_common(verify);
    add_plan(verify);
    verify->add_option("--variant", config.variant, "1a, 1b, 2a or 2b")
        ->check(CLI::IsMember({"1a", "1b", "2a", "2b"}));
    verify->add_option("--window", config.window_length, "statistics window length");

    auto *stats = app.add_subcommand("stats", "p*/q* statistics and windowed series");
    add_common(stats);
    add_plan(stats);
    stats->add_option("--window", config.window_length, "statistics window length");

    auto *predict = app.add_subcommand("predict", "f/g predictors and lowercase group");
    add_common(predict);
    add_plan(predict);

    auto *bench = app.add_subcommand("bench", "time the four variants single-threaded");
    add_common(bench);
    add_plan(bench);
    bench->add_option("--repetitions", config.repetitions, "runs per variant (median)")
        ->check(CLI::PositiveNumber);

    auto *oracle_cmd = app.add_subcommand("oracle", "brute-force counterexamples (limit <= 1e6)");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--limit", config.limit, "exclusive upper bound")->required();

    auto *eggc = app.add_subcommand("eggc", "count prime solutions with a negative m2");
    add_common(eggc);
    eggc->add_option("--n", config.n, "right-hand side")->required();
    eggc->add_option("--bound", config.bound, "cap on q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, std::cerr, std::cerr) == 0 ? exit_ok : exit_config;
    }

    if (verify->parsed()) {
        config.command = Command::verify;
    } else if (stats->parsed()) {
        config.command = Command::stats;
    } else if (predict->parsed()) {
        config.command = Command::predict;
    } else if (bench->parsed()) {
        config.command = Command::bench;
    } else if (oracle_cmd->parsed()) {
        config.command = Command::oracle;
    } else {
        config.command = Command::eggc;
    }
    return run(config, std::cout, std::cerr);
}

}  // namespace ggc::cli
