/*******************************************************************************
 * @file:   metis_io_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shmpart/io/metis.h"
#include "test_graphs.h"

namespace shmpart {
namespace {

Graph parse(const std::string &text) {
  std::istringstream in(text);
  return io::read_metis(in);
}

std::string serialize(const Graph &graph) {
  std::ostringstream out;
  io::write_metis(out, graph);
  return out.str();
}

void expect_parse_error(const std::string &text, const std::size_t line, const std::size_t column) {
  try {
    parse(text);
    FAIL() << "expected a parse error for:\n" << text;
  } catch (const io::ParseError &e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(MetisReaderTest, ReadsUnweightedPath) {
  const Graph g = parse("% a path\n4 3\n2\n1 3\n2 4\n3\n");
  EXPECT_EQ(g, testing::path_graph(4));
}

TEST(MetisReaderTest, ReadsEdgeAndVertexWeights) {
  const Graph g = parse("3 2 11\n5 2 7\n1 1 7 3 2\n4 2 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.vertex_weight(0), 5);
  EXPECT_EQ(g.vertex_weight(2), 4);
  EXPECT_EQ(g.incident_weights(1)[0], 7);
  EXPECT_EQ(g.incident_weights(1)[1], 2);
  EXPECT_EQ(g.total_vertex_weight(), 10);
}

TEST(MetisReaderTest, EmptyLinesAreIsolatedVertices) {
  const Graph g = parse("3 1\n2\n1\n\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(MetisReaderTest, ReportsLocations) {
  expect_parse_error("4 3\n2\n1 3 x\n2 4\n3\n", 3, 5);
  expect_parse_error("2 1\n3\n1\n", 2, 1);
  expect_parse_error("2 1\n1\n1\n", 2, 1);
  expect_parse_error("2 1 1\n2 0\n1 0\n", 2, 3);
  expect_parse_error("2 2\n2\n1\n", 1, 3);
  expect_parse_error("3 2\n2\n1\n1\n", 1, 3);
  expect_parse_error("2 1\n2\n1\n1\n", 4, 1);
  expect_parse_error("2 1\n2 2\n1 1\n", 2, 1);
}

TEST(MetisReaderTest, RejectsMalformedHeader) {
  EXPECT_THROW(parse(""), io::ParseError);
  EXPECT_THROW(parse("4\n"), io::ParseError);
  EXPECT_THROW(parse("2 1 100\n2\n1\n"), io::ParseError);
}

TEST(MetisWriterTest, CanonicalRoundTrip) {
  const std::vector<std::string> files{
      "4 3\n2\n1 3\n2 4\n3\n",
      "3 2 1\n2 7\n1 7 3 2\n2 2\n",
      "3 2 10\n5 2\n1 1 3\n4 2\n",
      "3 2 11\n5 2 7\n1 1 7 3 2\n4 2 2\n",
      "3 0\n\n\n\n",
  };
  for (const std::string &file : files) {
    EXPECT_EQ(serialize(parse(file)), file);
  }
}

TEST(MetisWriterTest, RandomGraphsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = testing::random_weighted_graph(30, 0.2, seed % 2 == 0 ? 1 : 9, seed % 3 == 0 ? 1 : 4, seed);
    EXPECT_EQ(parse(serialize(g)), g);
  }
}

TEST(PartitionFileTest, RoundTrip) {
  const std::vector<BlockID> assignment{0, 3, 1, 1, 2, 0};
  std::ostringstream out;
  io::write_partition(out, assignment);
  EXPECT_EQ(out.str(), "0\n3\n1\n1\n2\n0\n");
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_partition(in, 6), assignment);
}

TEST(PartitionFileTest, RejectsWrongLength) {
  std::istringstream in("0\n1\n");
  EXPECT_THROW(io::read_partition(in, 3), io::ParseError);
}

TEST(FileTest, MissingFileNamesPath) {
  try {
    io::read_metis(std::string("/nonexistent/graph.metis"));
    FAIL();
  } catch (const io::FileError &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/graph.metis"), std::string::npos);
  }
}

TEST(FileTest, GraphFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "shmpart_io_test.metis";
  const Graph g = testing::random_weighted_graph(20, 0.3, 3, 3, 5);
  io::write_metis(path.string(), g);
  EXPECT_EQ(io::read_metis(path.string()), g);
  std::filesystem::remove(path);
}

} // namespace
} // namespace shmpart
