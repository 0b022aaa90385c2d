/*******************************************************************************
 * Metis adjacency format and partition file I/O.
 *
 * Header line "n m [fmt [ncon]]"; fmt selects vertex weights (tens digit) and
 * edge weights (ones digit). Vertex i's line lists its 1-based neighbors.
 * Lines starting with '%' are comments.
 *
 * @file:   metis.h
 ******************************************************************************/
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmpart/graph.h"

namespace shmpart::io {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &what);

  [[nodiscard]] std::size_t line() const {
    return _line;
  }
  [[nodiscard]] std::size_t column() const {
    return _column;
  }

private:
  std::size_t _line;
  std::size_t _column;
};

// Thrown when a file cannot be opened.
class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Graph read_metis(std::istream &in);
Graph read_metis(const std::string &path);

void write_metis(std::ostream &out, const Graph &graph);
void write_metis(const std::string &path, const Graph &graph);

std::vector<BlockID> read_partition(std::istream &in, NodeID n);
std::vector<BlockID> read_partition(const std::string &path, NodeID n);

void write_partition(std::ostream &out, std::span<const BlockID> assignment);
void write_partition(const std::string &path, std::span<const BlockID> assignment);

} // namespace shmpart::io
