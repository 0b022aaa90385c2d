/*******************************************************************************
 * @file:   experiments.cc
 ******************************************************************************/
#include "shmpart/eval/experiments.h"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shmpart/random.h"

namespace shmpart::eval {
namespace {
constexpr const char *kHeader = "algorithm,instance,rep,cut,time,imbalanced";

std::vector<std::string> split_row(const std::string &line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}
} // namespace

void write_run_records(std::ostream &out, std::span<const RunRecord> records) {
  out << kHeader << '\n';
  for (const RunRecord &r : records) {
    if (r.algorithm.find(',') != std::string::npos || r.instance.find(',') != std::string::npos) {
      throw std::invalid_argument("labels must not contain commas");
    }
    out << r.algorithm << ',' << r.instance << ',' << r.rep << ',' << r.cut << ','
        << std::setprecision(17) << r.time << ',' << (r.imbalanced ? 1 : 0) << '\n';
  }
}

std::vector<RunRecord> read_run_records(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("missing run record header");
  }
  std::vector<RunRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) {
      continue;
    }
    const auto fields = split_row(line);
    if (fields.size() != 6) {
      throw std::runtime_error("row " + std::to_string(row) + ": expected 6 fields");
    }
    RunRecord r;
    try {
      std::size_t used = 0;
      r.algorithm = fields[0];
      r.instance = fields[1];
      r.rep = std::stoull(fields[2], &used);
      if (used != fields[2].size()) {
        throw std::invalid_argument("rep");
      }
      r.cut = std::stoll(fields[3], &used);
      if (used != fields[3].size()) {
        throw std::invalid_argument("cut");
      }
      r.time = std::stod(fields[4], &used);
      if (used != fields[4].size()) {
        throw std::invalid_argument("time");
      }
    } catch (const std::exception &) {
      throw std::runtime_error("row " + std::to_string(row) + ": malformed number");
    }
    if (fields[5] != "0" && fields[5] != "1") {
      throw std::runtime_error("row " + std::to_string(row) + ": imbalanced must be 0 or 1");
    }
    r.imbalanced = fields[5] == "1";
    records.push_back(std::move(r));
  }
  return records;
}

double acceptance_probability(const double budget, const double time_before, const double time_last) {
  if (time_last <= 0.0) {
    return 1.0;
  }
  return std::clamp((budget - time_before) / time_last, 0.0, 1.0);
}

VirtualInstanceSet virtual_instances(
    std::span<const RunRecord> runs_a, std::span<const RunRecord> runs_b, const std::size_t count,
    const std::uint64_t seed
) {
  if (runs_a.empty() || runs_b.empty() || count == 0) {
    throw std::invalid_argument("virtual instances need runs of both algorithms and count >= 1");
  }
  Random rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  VirtualInstanceSet result;

  const std::uint64_t pairs = static_cast<std::uint64_t>(runs_a.size()) * runs_b.size();
  result.resampled = count > pairs;
  std::vector<std::uint64_t> first_pairs(count);
  if (result.resampled) {
    for (auto &pair : first_pairs) {
      pair = random_below(rng, pairs);
    }
  } else {
    // distinct pairs via a partial Fisher-Yates over a sparse permutation
    std::map<std::uint64_t, std::uint64_t> permuted;
    const auto at = [&](const std::uint64_t i) {
      const auto it = permuted.find(i);
      return it == permuted.end() ? i : it->second;
    };
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t j = i + random_below(rng, pairs - i);
      const std::uint64_t value_i = at(i);
      first_pairs[i] = at(j);
      permuted[j] = value_i;
    }
  }

  std::vector<std::size_t> order;
  for (const std::uint64_t pair : first_pairs) {
    std::size_t first_a = pair / runs_b.size();
    std::size_t first_b = pair % runs_b.size();
    std::span<const RunRecord> slow = runs_a;
    std::span<const RunRecord> fast = runs_b;
    VirtualInstance instance;
    if (runs_b[first_b].time > runs_a[first_a].time) {
      std::swap(slow, fast);
      std::swap(first_a, first_b);
      instance.swapped = true;
    }
    const double budget = slow[first_a].time;
    instance.time_a = budget;
    instance.quality_a = slow[first_a].cut;

    order.resize(fast.size());
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[first_b]);

    double accumulated = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) {
        const std::size_t j = i + random_below(rng, order.size() - i);
        std::swap(order[i], order[j]);
      }
      const RunRecord &sample = fast[order[i]];
      if (accumulated + sample.time >= budget) {
        if (coin(rng) < acceptance_probability(budget, accumulated, sample.time)) {
          accumulated += sample.time;
          ++instance.accepted_samples;
          instance.quality_b = std::min(instance.quality_b.value_or(sample.cut), sample.cut);
        }
        instance.accepted_time_b = accumulated;
        break;
      }
      accumulated += sample.time;
      ++instance.accepted_samples;
      instance.quality_b = std::min(instance.quality_b.value_or(sample.cut), sample.cut);
      if (i + 1 == order.size()) {
        instance.budget_exhausted = true;
        instance.accepted_time_b = accumulated;
      }
    }
    result.instances.push_back(instance);
  }
  return result;
}

std::map<std::string, std::vector<double>> performance_profile(std::span<const RunRecord> records) {
  struct Aggregate {
    double cut_sum = 0.0;
    std::size_t reps = 0;
    bool imbalanced = false;
  };
  std::map<std::string, std::map<std::string, Aggregate>> by_algorithm;
  std::set<std::string> instances;
  for (const RunRecord &r : records) {
    Aggregate &a = by_algorithm[r.algorithm][r.instance];
    a.cut_sum += static_cast<double>(r.cut);
    ++a.reps;
    a.imbalanced |= r.imbalanced;
    instances.insert(r.instance);
  }

  std::map<std::string, std::vector<double>> profile;
  for (const std::string &instance : instances) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &[algorithm, per_instance] : by_algorithm) {
      const auto it = per_instance.find(instance);
      if (it == per_instance.end()) {
        throw std::invalid_argument("algorithm " + algorithm + " has no record for instance " + instance);
      }
      if (!it->second.imbalanced) {
        best = std::min(best, it->second.cut_sum / it->second.reps);
      }
    }
    for (const auto &[algorithm, per_instance] : by_algorithm) {
      const Aggregate &a = per_instance.at(instance);
      const double cut = a.cut_sum / a.reps;
      double value = 0.0;
      if (a.imbalanced) {
        value = kImbalancedProfileValue;
      } else if (cut > 0.0) {
        value = 1.0 - best / cut;
      }
      profile[algorithm].push_back(value);
    }
  }
  for (auto &[algorithm, values] : profile) {
    std::sort(values.begin(), values.end());
  }
  return profile;
}

} // namespace shmpart::eval
