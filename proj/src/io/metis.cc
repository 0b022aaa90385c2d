/*******************************************************************************
 * @file:   metis.cc
 ******************************************************************************/
#include "shmpart/io/metis.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace shmpart::io {
namespace {
std::string located(const std::size_t line, const std::size_t column, const std::string &what) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << what;
  return out.str();
}

struct Token {
  std::string_view text;
  std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string &line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > begin) {
      tokens.push_back({std::string_view(line).substr(begin, i - begin), begin + 1});
    }
  }
  return tokens;
}

std::uint64_t parse_unsigned(const Token &token, const std::size_t line_no) {
  std::uint64_t value = 0;
  const auto *first = token.text.data();
  const auto *last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(
        line_no, token.column, "expected a non-negative integer, got '" + std::string(token.text) + "'"
    );
  }
  return value;
}

bool is_comment(const std::string &line) {
  return !line.empty() && line[0] == '%';
}

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open '" + path + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw FileError("cannot open '" + path + "' for writing");
  }
  return out;
}
} // namespace

ParseError::ParseError(const std::size_t line, const std::size_t column, const std::string &what)
    : std::runtime_error(located(line, column, what)),
      _line(line),
      _column(column) {}

Graph read_metis(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;

  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_comment(line)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) {
    throw ParseError(line_no + 1, 1, "missing header line");
  }

  const std::size_t header_line = line_no;
  const auto header = tokenize(line);
  if (header.size() < 2 || header.size() > 4) {
    throw ParseError(header_line, 1, "header must be 'n m [fmt [ncon]]'");
  }
  const std::uint64_t n = parse_unsigned(header[0], header_line);
  const std::uint64_t m = parse_unsigned(header[1], header_line);
  if (n >= kInvalidNodeID) {
    throw ParseError(header_line, header[0].column, "too many vertices");
  }

  bool has_vertex_weights = false;
  bool has_edge_weights = false;
  if (header.size() >= 3) {
    const std::string_view fmt = header[2].text;
    if (fmt.size() > 3 || fmt.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(header_line, header[2].column, "unsupported fmt '" + std::string(fmt) + "'");
    }
    const std::string padded = std::string(3 - fmt.size(), '0') + std::string(fmt);
    if (padded[0] == '1') {
      throw ParseError(header_line, header[2].column, "vertex sizes are not supported");
    }
    has_vertex_weights = padded[1] == '1';
    has_edge_weights = padded[2] == '1';
  }
  if (header.size() == 4) {
    const std::uint64_t ncon = parse_unsigned(header[3], header_line);
    if (ncon != 1 || !has_vertex_weights) {
      throw ParseError(header_line, header[3].column, "only a single vertex weight is supported");
    }
  }

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  std::vector<NodeWeight> vertex_weights(n, 1);
  std::vector<std::size_t> vertex_line(n, 0);
  targets.reserve(2 * m);
  edge_weights.reserve(2 * m);

  std::vector<std::pair<NodeID, EdgeWeight>> row;
  NodeID v = 0;
  while (v < n) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, 1, "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(v));
    }
    ++line_no;
    if (is_comment(line)) {
      continue;
    }
    vertex_line[v] = line_no;

    const auto tokens = tokenize(line);
    std::size_t t = 0;
    if (has_vertex_weights) {
      if (tokens.empty()) {
        throw ParseError(line_no, 1, "missing vertex weight");
      }
      const std::uint64_t w = parse_unsigned(tokens[0], line_no);
      if (w == 0) {
        throw ParseError(line_no, tokens[0].column, "vertex weight must be positive");
      }
      vertex_weights[v] = static_cast<NodeWeight>(w);
      t = 1;
    }

    row.clear();
    const std::size_t stride = has_edge_weights ? 2 : 1;
    if ((tokens.size() - t) % stride != 0) {
      throw ParseError(line_no, tokens.back().column, "neighbor without edge weight");
    }
    for (; t < tokens.size(); t += stride) {
      const std::uint64_t u = parse_unsigned(tokens[t], line_no);
      if (u == 0 || u > n) {
        throw ParseError(line_no, tokens[t].column, "neighbor index out of range");
      }
      if (u - 1 == v) {
        throw ParseError(line_no, tokens[t].column, "self-loop");
      }
      EdgeWeight w = 1;
      if (has_edge_weights) {
        const std::uint64_t raw = parse_unsigned(tokens[t + 1], line_no);
        if (raw == 0) {
          throw ParseError(line_no, tokens[t + 1].column, "edge weight must be positive");
        }
        w = static_cast<EdgeWeight>(raw);
      }
      row.emplace_back(static_cast<NodeID>(u - 1), w);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first == row[i - 1].first) {
        throw ParseError(line_no, 1, "parallel edge to vertex " + std::to_string(row[i].first + 1));
      }
    }
    for (const auto &[u, w] : row) {
      targets.push_back(u);
      edge_weights.push_back(w);
    }
    offsets[v + 1] = targets.size();
    ++v;
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!is_comment(line) && !tokenize(line).empty()) {
      throw ParseError(line_no, 1, "unexpected content after the last vertex line");
    }
  }

  if (targets.size() != 2 * m) {
    throw ParseError(
        header_line, header[1].column,
        "header declares " + std::to_string(m) + " edges but the adjacency lists contain " +
            std::to_string(targets.size()) + " half-edges"
    );
  }

  for (NodeID x = 0; x < n; ++x) {
    for (EdgeID e = offsets[x]; e < offsets[x + 1]; ++e) {
      const NodeID u = targets[e];
      const auto first = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
      const auto last = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
      const auto it = std::lower_bound(first, last, x);
      if (it == last || *it != x || edge_weights[static_cast<std::size_t>(it - targets.begin())] != edge_weights[e]) {
        throw ParseError(
            vertex_line[x], 1,
            "edge (" + std::to_string(x + 1) + "," + std::to_string(u + 1) +
                ") has no matching reverse edge"
        );
      }
    }
  }

  return {std::move(offsets), std::move(targets), std::move(edge_weights), std::move(vertex_weights)};
}

Graph read_metis(const std::string &path) {
  auto in = open_input(path);
  return read_metis(in);
}

void write_metis(std::ostream &out, const Graph &graph) {
  const bool vertex_weights = !graph.has_unit_vertex_weights();
  const bool edge_weights = !graph.has_unit_edge_weights();

  out << graph.n() << ' ' << graph.m();
  if (vertex_weights || edge_weights) {
    out << ' ' << (vertex_weights ? "1" : "") << (edge_weights ? "1" : (vertex_weights ? "0" : ""));
  }
  out << '\n';

  std::string buffer;
  for (NodeID v = 0; v < graph.n(); ++v) {
    buffer.clear();
    if (vertex_weights) {
      buffer += std::to_string(graph.vertex_weight(v));
    }
    graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
      if (!buffer.empty()) {
        buffer += ' ';
      }
      buffer += std::to_string(u + 1);
      if (edge_weights) {
        buffer += ' ';
        buffer += std::to_string(w);
      }
    });
    buffer += '\n';
    out << buffer;
  }
}

void write_metis(const std::string &path, const Graph &graph) {
  auto out = open_output(path);
  write_metis(out, graph);
}

std::vector<BlockID> read_partition(std::istream &in, const NodeID n) {
  std::vector<BlockID> assignment;
  assignment.reserve(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens.size() != 1) {
      throw ParseError(line_no, tokens[1].column, "expected a single block ID per line");
    }
    const std::uint64_t b = parse_unsigned(tokens[0], line_no);
    if (b >= kInvalidBlockID) {
      throw ParseError(line_no, tokens[0].column, "block ID too large");
    }
    assignment.push_back(static_cast<BlockID>(b));
  }
  if (assignment.size() != n) {
    throw ParseError(
        line_no + 1, 1,
        "expected " + std::to_string(n) + " block IDs, got " + std::to_string(assignment.size())
    );
  }
  return assignment;
}

std::vector<BlockID> read_partition(const std::string &path, const NodeID n) {
  auto in = open_input(path);
  return read_partition(in, n);
}

void write_partition(std::ostream &out, std::span<const BlockID> assignment) {
  std::string buffer;
  for (const BlockID b : assignment) {
    buffer += std::to_string(b);
    buffer += '\n';
  }
  out << buffer;
}

void write_partition(const std::string &path, std::span<const BlockID> assignment) {
  auto out = open_output(path);
  write_partition(out, assignment);
}

} // namespace shmpart::io
