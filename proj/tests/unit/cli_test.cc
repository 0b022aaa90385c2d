/*******************************************************************************
 * @file:   cli_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shmpart/cli/cli.h"
#include "shmpart/eval/generators.h"
#include "shmpart/io/metis.h"

namespace shmpart::cli {
namespace {
namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    _dir = fs::temp_directory_path() /
           ("shmpart_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(_dir);
  }
  void TearDown() override {
    fs::remove_all(_dir);
  }

  std::string write_file(const std::string &name, const std::string &contents) {
    const fs::path path = _dir / name;
    std::ofstream(path) << contents;
    return path.string();
  }

  std::string path(const std::string &name) const {
    return (_dir / name).string();
  }

  int invoke(const std::vector<std::string> &args) {
    std::vector<const char *> argv{"shmpart"};
    for (const auto &arg : args) {
      argv.push_back(arg.c_str());
    }
    _out.str("");
    _err.str("");
    return run(static_cast<int>(argv.size()), argv.data(), _out, _err);
  }

  static std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  fs::path _dir;
  std::ostringstream _out;
  std::ostringstream _err;
};

TEST_F(CliTest, PartitionsPath) {
  const std::string graph = write_file("p4.graph", "4 3\n2\n1 3\n2 4\n3\n");
  const std::string output = path("p4.part");
  ASSERT_EQ(invoke({graph, "--k", "2", "--epsilon", "0", "--threads", "1", "-o", output}), kSuccess);
  EXPECT_EQ(_out.str().substr(0, 18), "cut=1 balance=1.00");
  EXPECT_EQ(io::read_partition(output, 4).size(), 4u);
}

TEST_F(CliTest, UsageErrors) {
  const std::string graph = write_file("p4.graph", "4 3\n2\n1 3\n2 4\n3\n");
  EXPECT_EQ(invoke({graph, "--k", "0"}), kUsageError);
  EXPECT_NE(_err.str().find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({graph}), kUsageError);
  EXPECT_EQ(invoke({graph, "--k", "2", "--epsilon", "-1"}), kUsageError);
  EXPECT_EQ(invoke({graph, "--k", "2", "--preset", "turbo"}), kUsageError);
  EXPECT_EQ(invoke({graph, "--k", "5"}), kUsageError);
  EXPECT_NE(_err.str().find("exceeds"), std::string::npos);
}

TEST_F(CliTest, MissingFile) {
  const std::string missing = path("nope.graph");
  EXPECT_EQ(invoke({missing, "--k", "2"}), kFileError);
  EXPECT_NE(_err.str().find(missing), std::string::npos);
}

TEST_F(CliTest, ParseErrorNamesLocation) {
  const std::string graph = write_file("bad.graph", "4 3\n2\n1 x3\n2 4\n3\n");
  EXPECT_EQ(invoke({graph, "--k", "2"}), kParseError);
  EXPECT_NE(_err.str().find("line 3"), std::string::npos);
}

TEST_F(CliTest, MetricsCsv) {
  const std::string graph = path("rgg.graph");
  io::write_metis(graph, eval::gen_rgg(3000, 1));
  const std::string metrics = path("metrics.csv");
  ASSERT_EQ(invoke({graph, "--k", "4", "--threads", "2", "--metrics-csv", metrics}), kSuccess);
  const std::string csv = slurp(metrics);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "phase,level,cut,time");
  EXPECT_NE(csv.find("\ntotal,0,"), std::string::npos);
}

TEST_F(CliTest, FastPresetRuns) {
  const std::string graph = path("rgg.graph");
  io::write_metis(graph, eval::gen_rgg(3000, 2));
  EXPECT_EQ(invoke({graph, "--k", "8", "--preset", "fast", "--threads", "1"}), kSuccess);
}

// Repeated runs with one thread and a fixed seed write identical partitions.
TEST_F(CliTest, DeterministicOutput) {
  const std::string graph = path("rgg.graph");
  io::write_metis(graph, eval::gen_rgg(5000, 3));
  const std::string first = path("a.part");
  const std::string second = path("b.part");
  ASSERT_EQ(invoke({graph, "--k", "8", "--threads", "1", "--seed", "5", "-o", first}), kSuccess);
  ASSERT_EQ(invoke({graph, "--k", "8", "--threads", "1", "--seed", "5", "-o", second}), kSuccess);
  EXPECT_EQ(slurp(first), slurp(second));
}

#ifdef SHMPART_CLI_PATH
TEST_F(CliTest, BinaryExitCodes) {
  const std::string graph = write_file("p4.graph", "4 3\n2\n1 3\n2 4\n3\n");
  const std::string binary = SHMPART_CLI_PATH;
  const auto status = [&](const std::string &args) {
    const int raw = std::system((binary + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status(graph + " --k 2 --threads 1"), kSuccess);
  EXPECT_EQ(status(graph + " --k 0"), kUsageError);
  EXPECT_EQ(status(path("missing.graph") + " --k 2"), kFileError);
}
#endif

} // namespace
} // namespace shmpart::cli
