#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "ggc/cli.hpp"

using namespace ggc::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string &name)
        : path(fs::temp_directory_path() / ("ggc_cli_" + name)) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const fs::path &p) {
    std::vector<std::string> out;
    std::istringstream in(slurp(p));
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

// Drops the trailing wall-time column.
std::string without_timing(const std::string &csv) {
    std::istringstream in(csv);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

int execute(RunConfig config, std::string *stdout_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int rc = run(config, out, err);
    if (stdout_text) {
        *stdout_text = out.str();
    }
    return rc;
}

RunConfig config_for(Command c, std::int64_t m1, std::int64_t m2, std::uint64_t limit,
                     const fs::path &dir) {
    RunConfig config;
    config.command = c;
    config.m1 = m1;
    config.m2 = m2;
    config.limit = limit;
    config.output = dir;
    return config;
}

}  // namespace

TEST_CASE("verify writes residual and summary") {
    TempDir dir("verify");
    auto config = config_for(Command::verify, 1, 2, 10'000, dir.path);
    config.variant = "1a";
    REQUIRE(execute(config) == exit_ok);
    CHECK(lines(dir.path / "residual.csv") ==
          std::vector<std::string>{"m1,m2,n", "1,2,1", "1,2,3", "1,2,5"});
    const auto summary = lines(dir.path / "summary.csv");
    REQUIRE(summary.size() == 2);
    CHECK(summary[0] ==
          "m1,m2,limit,khat,avg_pstar,max_pstar,avg_qstar,max_qstar,variant,wall_time_ns");
    CHECK(summary[1].rfind("1,2,9999,5,", 0) == 0);
    CHECK(slurp(dir.path / "residual.csv").find('\r') == std::string::npos);
}

TEST_CASE("non-coprime input is reported for the reduced pair") {
    TempDir dir("reduce");
    REQUIRE(execute(config_for(Command::verify, 3, 6, 1'000, dir.path)) == exit_ok);
    CHECK(lines(dir.path / "residual.csv") ==
          std::vector<std::string>{"m1,m2,n", "1,2,1", "1,2,3", "1,2,5"});
}

TEST_CASE("oracle command") {
    TempDir dir("oracle");
    std::string text;
    REQUIRE(execute(config_for(Command::oracle, 1, 6, 1'000, dir.path), &text) == exit_ok);
    CHECK(lines(dir.path / "residual.csv").back() == "1,6,13");
    CHECK(text.find("max=13") != std::string::npos);
}

TEST_CASE("stats and predict outputs are reproducible") {
    TempDir a("stats_a");
    TempDir b("stats_b");
    for (const auto &dir : {a.path, b.path}) {
        auto stats = config_for(Command::stats, 2, 3, 2'000'000, dir);
        stats.window_length = 100'000;
        REQUIRE(execute(stats) == exit_ok);
        REQUIRE(execute(config_for(Command::predict, 2, 3, 2'000'000, dir)) == exit_ok);
    }
    for (const auto *name : {"residual.csv", "stats.csv", "ratio.csv", "predict.csv"}) {
        CAPTURE(name);
        CHECK(slurp(a.path / name) == slurp(b.path / name));
    }
    CHECK(without_timing(slurp(a.path / "summary.csv")) ==
          without_timing(slurp(b.path / "summary.csv")));
    const auto stats = lines(a.path / "stats.csv");
    CHECK(stats[0] == "m1,m2,window_center,count,avg_pstar,avg_qstar,max_pstar");
    CHECK(stats.size() == 21);
    CHECK(lines(a.path / "ratio.csv")[0] == "m1,m2,window_center,ratio");
    const auto predict = lines(a.path / "predict.csv");
    CHECK(predict[0] == "m1,m2,limit,f_ab,f_ba,g_ab,g_ba,group");
    CHECK(predict[1].rfind("2,3,2000000,", 0) == 0);
}

TEST_CASE("bench and eggc commands") {
    TempDir dir("bench");
    auto bench = config_for(Command::bench, 3, 4, 20'000, dir.path);
    bench.threads = 4;
    REQUIRE(execute(bench) == exit_ok);
    const auto rows = lines(dir.path / "bench.csv");
    CHECK(rows[0] == "m1,m2,limit,t_1a_ns,t_1b_ns,t_2a_ns,t_2b_ns,group");
    CHECK(rows.size() == 2);

    auto eggc = config_for(Command::eggc, 1, -1, 0, dir.path);
    eggc.n = 2;
    eggc.bound = 100;
    REQUIRE(execute(eggc) == exit_ok);
    CHECK(lines(dir.path / "eggc.csv") == std::vector<std::string>{"m1,m2,n,bound,count",
                                                                    "1,-1,2,100,8"});
}

TEST_CASE("exit codes") {
    TempDir dir("exit");
    CHECK(execute(config_for(Command::verify, 0, 2, 1'000, dir.path)) == exit_config);
    CHECK(execute(config_for(Command::verify, 1, -2, 1'000, dir.path)) == exit_config);
    auto bad_segment = config_for(Command::verify, 2, 3, 10'000, dir.path);
    bad_segment.segment = 100;
    CHECK(execute(bad_segment) == exit_config);

    auto small_alpha = config_for(Command::verify, 1, 2, 10'000, dir.path);
    small_alpha.segment = 4'000;
    small_alpha.alpha = 20;
    CHECK(execute(small_alpha) == exit_alpha_too_small);
    CHECK(lines(dir.path / "residual.csv").size() > 4);
}

TEST_CASE("argument parsing") {
    TempDir dir("args");
    const std::string out = dir.path.string();
    std::vector<std::string> good{"ggc", "verify", "--m1", "1", "--m2", "3", "--limit",
                                  "1000", "--variant", "2b", "--out", out};
    std::vector<char *> argv;
    for (auto &s : good) {
        argv.push_back(s.data());
    }
    CHECK(main_entry(static_cast<int>(argv.size()), argv.data()) == exit_ok);
    CHECK(lines(dir.path / "residual.csv").back() == "1,3,10");

    std::vector<std::string> bad{"ggc", "verify", "--m1", "1", "--m2", "3", "--variant", "9z"};
    argv.clear();
    for (auto &s : bad) {
        argv.push_back(s.data());
    }
    CHECK(main_entry(static_cast<int>(argv.size()), argv.data()) == exit_config);
}
