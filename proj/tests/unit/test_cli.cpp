#include <gtest/gtest.h>

#ifdef DYNMATCH_CLI

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "dynmatch/harness/io.hpp"
#include "dynmatch/harness/profile.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = DYNMATCH_TEST_DATA;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DYNMATCH_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dynmatch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, AuditedRunsSucceedForEveryAlgorithm) {
    for (const std::string algo : {"random", "level-walk", "level-bfs", "oracle"}) {
        EXPECT_EQ(run_cli("run --input " + kData + "/small_static.txt --algo " + algo +
                          " --reps 2 --undo-percent 25 --audit"),
                      0)
            << algo;
    }
    EXPECT_EQ(run_cli("run --input " + kData + "/small_static.txt --algo level --mcm bfs --reps 1"), 0);
}

TEST_F(CliTest, BadArgumentsFail) {
    EXPECT_NE(run_cli("run --algo random"), 0);
    EXPECT_NE(run_cli("run --input " + kData + "/small_static.txt --algo nope"), 0);
    EXPECT_NE(run_cli("run --input " + kData + "/small_static.txt --algo level-walk --mcm bfs"), 0);
    EXPECT_NE(run_cli("run --input " + kData + "/missing.txt"), 0);
}

TEST_F(CliTest, GenRunProfilePipeline) {
    const auto stream = path("stream.txt");
    const auto results = path("results.csv");
    const auto profile = path("profile.tsv");
    ASSERT_EQ(run_cli("gen --input " + kData + "/small_static.txt --undo-percent 10 --seed 4 --out " + stream), 0);
    const auto parsed = dynmatch::harness::parse_temporal(dynmatch::harness::read_file(stream));
    EXPECT_EQ(parsed.stream.ops.size(), 198u);

    for (const std::string algo : {"random", "level-bfs"}) {
        ASSERT_EQ(run_cli("run --temporal " + stream + " --name small --algo " + algo + " --reps 2 --results " +
                          results),
                  0);
    }
    const auto rows = dynmatch::harness::read_results_csv(dynmatch::harness::read_file(results));
    EXPECT_EQ(rows.size(), 4u);

    ASSERT_EQ(run_cli("profile --results " + results + " --tau-grid 0.5:1:0.1 --out " + profile), 0);
    const auto tsv = dynmatch::harness::read_file(profile);
    EXPECT_TRUE(tsv.starts_with("tau\tlevel-bfs\trandom\n"));
}

TEST_F(CliTest, MixedStreamGeneration) {
    const auto stream = path("mixed.txt");
    ASSERT_EQ(run_cli("gen --mixed-n 50 --mixed-ops 400 --mixed-edges 80 --seed 2 --out " + stream), 0);
    EXPECT_EQ(run_cli("run --temporal " + stream + " --algo random --audit --reps 1"), 0);
}

#endif
