/*******************************************************************************
 * @file:   cli.cc
 ******************************************************************************/
#include "shmpart/cli/cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "shmpart/driver/partitioner.h"
#include "shmpart/io/metis.h"

namespace shmpart::cli {
namespace {
enum class Preset { kFast, kQuality };

void apply_preset(PartitionerConfig &config, const Preset preset) {
  if (preset == Preset::kFast) {
    config.refinement_iterations = 10;
    config.initial_attempts = 2;
    config.mls_global_iterations = 1;
  }
}
} // namespace

int run(const int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Shared-memory parallel multilevel graph partitioner"};
  app.name("shmpart");

  PartitionerConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string graph_path;
  std::string output_path;
  std::string metrics_path;
  Preset preset = Preset::kQuality;
  const std::map<std::string, Preset> presets{{"fast", Preset::kFast}, {"quality", Preset::kQuality}};

  app.add_option("graph", graph_path, "Graph in METIS format")->required();
  app.add_option("--k", config.k, "Number of blocks")
      ->required()
      ->check(CLI::Range(1u, std::numeric_limits<BlockID>::max()));
  app.add_option("--epsilon", config.epsilon, "Allowed imbalance")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", config.workers, "Number of worker threads")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("-o,--output", output_path, "Write the partition (one block ID per line)");
  app.add_option("--metrics-csv", metrics_path, "Write per-phase metrics as CSV");
  app.add_option("--preset", preset, "Quality knobs")
      ->transform(CLI::CheckedTransformer(presets, CLI::ignore_case))
      ->default_str("quality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  apply_preset(config, preset);

  try {
    config.validate();
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Graph graph;
  try {
    graph = io::read_metis(graph_path);
  } catch (const io::FileError &e) {
    err << "error: " << e.what() << '\n';
    return kFileError;
  } catch (const io::ParseError &e) {
    err << "error: " << graph_path << ": " << e.what() << '\n';
    return kParseError;
  }

  if (config.k > graph.n()) {
    err << "error: --k " << config.k << " exceeds the number of vertices (" << graph.n() << ")\n\n" << app.help();
    return kUsageError;
  }

  PartitionResult result;
  try {
    result = partition_graph(graph, config);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  try {
    if (!output_path.empty()) {
      io::write_partition(output_path, result.partition.assignment());
    }
    if (!metrics_path.empty()) {
      std::ofstream metrics(metrics_path);
      if (!metrics) {
        throw io::FileError("cannot open '" + metrics_path + "' for writing");
      }
      result.metrics.write_csv(metrics);
    }
  } catch (const io::FileError &e) {
    err << "error: " << e.what() << '\n';
    return kFileError;
  }

  const Partition &partition = result.partition;
  const double average = static_cast<double>(partition.total_weight()) / partition.k();
  const double balance = average > 0.0 ? partition.max_block_weight() / average : 1.0;
  if (!partition.balanced()) {
    err << "warning: partition exceeds the block weight bound " << partition.bound() << '\n';
  }
  out << "cut=" << partition.cut() << std::fixed << std::setprecision(4) << " balance=" << balance
      << std::setprecision(3) << " time=" << seconds << '\n';
  return kSuccess;
}

} // namespace shmpart::cli
