/*******************************************************************************
 * Run records, budget-matched virtual instances and performance profiles.
 *
 * @file:   experiments.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "shmpart/definitions.h"

namespace shmpart::eval {

struct RunRecord {
  std::string algorithm;
  std::string instance;
  std::size_t rep = 0;
  EdgeWeight cut = 0;
  double time = 0.0;
  bool imbalanced = false;

  friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

// CSV with header algorithm,instance,rep,cut,time,imbalanced; imbalanced is
// written as 0 or 1. Reading throws std::runtime_error on malformed rows.
void write_run_records(std::ostream &out, std::span<const RunRecord> records);
std::vector<RunRecord> read_run_records(std::istream &in);

struct VirtualInstance {
  // True if the first sample of the second list was slower, so the roles of
  // the two lists were exchanged for this instance.
  bool swapped = false;
  double time_a = 0.0;
  EdgeWeight quality_a = 0;
  // Best cut among accepted samples of the faster algorithm; empty if the only
  // candidate was rejected.
  std::optional<EdgeWeight> quality_b;
  double accepted_time_b = 0.0;
  std::size_t accepted_samples = 0;
  // The faster algorithm ran out of repetitions before reaching the budget.
  bool budget_exhausted = false;
};

struct VirtualInstanceSet {
  std::vector<VirtualInstance> instances;
  // More instances were requested than distinct first-sample pairs exist, so
  // pairs were drawn with replacement.
  bool resampled = false;
};

// Probability of accepting the sample that crosses the budget:
// (budget - time_before) / time_last.
double acceptance_probability(double budget, double time_before, double time_last);

// For each instance one repetition per list is drawn; the slower one becomes
// A and its time the budget. Further repetitions of B are drawn without
// replacement, accumulating B time (first sample included) until the budget is
// reached; the crossing sample is accepted with acceptance_probability(). Throws
// std::invalid_argument on empty lists or count == 0.
VirtualInstanceSet virtual_instances(
    std::span<const RunRecord> runs_a, std::span<const RunRecord> runs_b, std::size_t count, std::uint64_t seed
);

// Value assigned to imbalanced results in performance profiles.
inline constexpr double kImbalancedProfileValue = 1.1;

// Per algorithm the sorted values 1 - best / cut over all instances, where cut
// is the mean over repetitions and best the smallest mean cut of any algorithm
// with only balanced repetitions on that instance. Throws
// std::invalid_argument if an algorithm lacks an instance.
std::map<std::string, std::vector<double>> performance_profile(std::span<const RunRecord> records);

} // namespace shmpart::eval
