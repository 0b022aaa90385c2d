/*******************************************************************************
 * Command-line front end of the partitioner.
 *
 * @file:   cli.h
 ******************************************************************************/
#pragma once

#include <ostream>

namespace shmpart::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kFileError = 2,
  kParseError = 3,
  kInternalError = 4,
};

// Parses the arguments, partitions the graph and writes the requested
// outputs. The summary line goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace shmpart::cli
