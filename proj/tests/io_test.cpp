#include <gtest/gtest.h>

#include <random>

#include "gerry/error.hpp"
#include "gerry/io.hpp"
#include "gerry/oracle.hpp"
#include "gerry/reductions.hpp"
#include "test_support.hpp"

namespace gerry {
namespace {

std::string error_of(std::string_view text) {
  try {
    (void)parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceText, SixVertexRoundTrip) {
  const Instance inst = testing::six_vertex_instance();
  EXPECT_EQ(parse_instance(write_instance(inst)), inst);
}

TEST(InstanceText, SixVertexFileMatchesFixture) {
  const Instance parsed = parse_instance(read_text_file(GERRY_TEST_DATA "/six_vertex.inst"));
  EXPECT_EQ(parsed, testing::six_vertex_instance());
}

TEST(InstanceText, RandomRoundTrips) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 12;
    Instance inst = random_instance(n, 1 + rng() % 5, 9, 1 + rng() % n, rng());
    const std::string text = write_instance(inst);
    EXPECT_EQ(parse_instance(text), inst);
    EXPECT_EQ(write_instance(parse_instance(text)), text);
  }
}

TEST(InstanceText, DisconnectedModeRoundTrip) {
  const Instance inst = clique_to_path(complete_graph(3), 3, false).instance;
  const std::string text = write_instance(inst);
  EXPECT_NE(text.find("# mode disconnected\nmode disconnected\n"), std::string::npos);
  EXPECT_EQ(parse_instance(text), inst);
}

TEST(InstanceText, CommentsAndBlankLines) {
  const Instance inst = parse_instance("# hi\ncolors p q # two\n\ntarget p\nk 1\nv 0 q 2\nv 1 p 3\ne 1 0\n");
  EXPECT_EQ(inst.vertex_count, 2U);
  EXPECT_EQ(inst.color_of, (std::vector<ColorId>{1, 0}));
  EXPECT_EQ(inst.edges, (std::vector<Edge>{{1, 0}}));
}

TEST(InstanceText, Errors) {
  EXPECT_NE(error_of("").find("missing header"), std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 p 1\nv 0 p 1\n").find("duplicate vertex"),
            std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 p 1\ne 0 3\n").find("unknown vertex"),
            std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk x\n").find("malformed integer"), std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 p -4\n").find("negative weight"),
            std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 z 1\n").find("unknown color"), std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget z\nk 1\nv 0 p 1\n").find("unknown target"), std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 p 1\nfoo\n").find("unknown directive"),
            std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 0 p 1\nv 1 p 1\ne 0 1\nv 2 p 1\n").find("after edge"),
            std::string::npos);
  EXPECT_NE(error_of("colors p\ntarget p\nk 1\nv 1 p 1\n").find("0..n-1"), std::string::npos);
  EXPECT_NE(error_of("target p\nk 1\nv 0 p 1\n").find("missing header"), std::string::npos);
}

TEST(InstanceText, ErrorCarriesLineNumber) {
  try {
    (void)parse_instance("colors p\ntarget p\nk 1\nv 0 p 1\nv 0 p 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5U);
  }
}

TEST(PartitionText, RoundTrip) {
  const Partition part{{{0, 1, 2}, {5, 3}, {4}}};
  EXPECT_EQ(write_partition(part), "0 1 2\n5 3\n4\n");
  EXPECT_EQ(parse_partition(write_partition(part)), part);
  EXPECT_EQ(parse_partition("# c\n0 1 2  # tail\n\n5 3\n4\n"), part);
  EXPECT_EQ(parse_partition(read_text_file(GERRY_TEST_DATA "/six_vertex.part")),
            (Partition{{{0, 1, 2}, {3, 4, 5}}}));
  EXPECT_THROW((void)parse_partition("0 a\n"), ParseError);
}

TEST(GraphText, RoundTripAndErrors) {
  const SimpleGraph g = cycle_graph(5);
  const SimpleGraph back = parse_graph(write_graph(g));
  EXPECT_EQ(back.vertex_count, 5U);
  EXPECT_EQ(back.edges, g.edges);
  EXPECT_EQ(parse_graph(read_text_file(GERRY_TEST_DATA "/k3.graph")).edges.size(), 3U);
  EXPECT_THROW((void)parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW((void)parse_graph("n 2\ne 0 2\n"), ParseError);
}

TEST(Files, MissingFileThrows) {
  EXPECT_THROW((void)read_text_file("/nonexistent/gerry/file"), std::runtime_error);
}

}  // namespace
}  // namespace gerry
