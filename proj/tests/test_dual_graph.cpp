#include <gtest/gtest.h>

#include "germkit/dual_graph.hpp"
#include "germkit/errors.hpp"
#include "support.hpp"

using namespace germkit;
using germkit::testing::corpus_file;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseGraph, SingleExceptionalVertex) {
  auto g = parse_graph("vertex a kind=exc self=-4\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.vertex(0).id, "a");
  EXPECT_EQ(g.vertex(0).kind, VertexKind::Exceptional);
  EXPECT_EQ(g.vertex(0).self_int, -4);
}

TEST(ParseGraph, IIdualExampleCounts) {
  auto g = parse_graph(corpus_file("iidual.graph"));
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(g.exceptional_indices().size(), 4u);
  EXPECT_EQ(g.component_indices().size(), 5u);
}

TEST(ParseGraph, CommentsAndBlankLinesIgnored) {
  auto g = parse_graph("# header\n\nvertex a kind=exc self=-2   # trailing\n  \nvertex b kind=comp self=-1\nedge a b\n");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, LoopRejectedWithLine) {
  const std::string text = "vertex a kind=exc self=-2\nedge a a\n";
  EXPECT_EQ(parse_error_line(text), 2);
  EXPECT_NE(parse_error_message(text).find("loop"), std::string::npos);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nvertex a kind=exc self=-3\n"), 2);   // duplicate
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-1\n"), 1);                             // exc > -2
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nvertex c kind=comp self=-2\n"), 2); // comp != -1
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nnode a\n"), 2);                     // keyword
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nvertex b kind=exc self=-2\nedge a b\nedge b a\n"), 4);
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nedge a z\n"), 2);                   // unknown id
  EXPECT_EQ(parse_error_line("vertex a kind=exc self=-2\nvertex b kind=exc self=-2\n"), 2);  // disconnected
  EXPECT_EQ(parse_error_line("vertex a-b kind=exc self=-2\n"), 1);                           // bad id
  EXPECT_EQ(parse_error_line("vertex a kind=foo self=-2\n"), 1);
  EXPECT_EQ(parse_error_line(""), 1);
}

TEST(ParseGraph, RoundTripThroughText) {
  auto g = parse_graph(corpus_file("kad.graph"));
  auto h = parse_graph(to_text(g));
  EXPECT_EQ(to_text(g), to_text(h));
  EXPECT_EQ(h.edges().size(), g.edges().size());
}

TEST(IsTree, Examples) {
  EXPECT_TRUE(is_tree(parse_graph(corpus_file("iidual.graph"))));
  EXPECT_FALSE(is_tree(parse_graph(
      "vertex a kind=exc self=-2\nvertex b kind=exc self=-2\nvertex c kind=exc self=-2\n"
      "edge a b\nedge b c\nedge c a\n")));
  EXPECT_TRUE(is_tree(parse_graph("vertex a kind=exc self=-2\n")));
}

TEST(ExceptionalClusters, CD3CaseA) {
  auto cl = exceptional_clusters(parse_graph(corpus_file("cd3_a.graph")));
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(cl[0].vertices, (std::vector<std::string>{"v1"}));
  EXPECT_EQ(cl[0].shape, ClusterShape::Chain);
  EXPECT_EQ(cl[1].vertices, (std::vector<std::string>{"v3", "v4", "v5", "v7"}));
  EXPECT_EQ(cl[1].shape, ClusterShape::Fork);
}

TEST(ExceptionalClusters, K1AcChain) {
  auto g = parse_graph(corpus_file("k1a_c_k2.graph"));
  auto cl = exceptional_clusters(g);
  ASSERT_EQ(cl.size(), 1u);
  EXPECT_EQ(cl[0].shape, ClusterShape::Chain);
  std::vector<int> weights;
  for (const auto& id : chain_order(g, cl[0])) weights.push_back(-g.vertex(g.index_of(id)).self_int);
  EXPECT_EQ(weights, (std::vector<int>{3, 2, 5, 4, 2}));
}

TEST(ExceptionalClusters, NoExceptionalVertices) {
  EXPECT_TRUE(exceptional_clusters(parse_graph("vertex c kind=comp self=-1\n")).empty());
}

TEST(ExceptionalClusters, OtherShape) {
  auto cl = exceptional_clusters(parse_graph(corpus_file("iib.graph")));
  ASSERT_EQ(cl.size(), 1u);
  EXPECT_EQ(cl[0].shape, ClusterShape::Other);
}

TEST(IntersectionMatrix, Examples) {
  auto one = intersection_matrix(parse_graph("vertex a kind=exc self=-4\n"), {"a"});
  EXPECT_EQ(one.entries, (std::vector<std::vector<std::int64_t>>{{-4}}));

  auto star = intersection_matrix(parse_graph(corpus_file("iidual.graph")), {"v3", "v2", "v4", "v7"});
  EXPECT_EQ(star.entries, (std::vector<std::vector<std::int64_t>>{
                              {-2, 1, 1, 1}, {1, -4, 0, 0}, {1, 0, -4, 0}, {1, 0, 0, -2}}));

  auto chain = intersection_matrix(parse_graph(corpus_file("k1a_a_m3.graph")), {"e1", "e2"});
  EXPECT_EQ(chain.entries, (std::vector<std::vector<std::int64_t>>{{-2, 1}, {1, -5}}));
}

TEST(IntersectionMatrix, UnknownIdRejected) {
  EXPECT_THROW(intersection_matrix(parse_graph("vertex a kind=exc self=-4\n"), {"zz"}), InputError);
}

TEST(NegativeDefinite, Examples) {
  auto g = parse_graph(corpus_file("iidual.graph"));
  auto star = intersection_matrix(g, {"v3", "v2", "v4", "v7"});
  EXPECT_EQ(leading_minors(star), (std::vector<BigInt>{-2, 7, -24, 32}));
  EXPECT_TRUE(is_negative_definite(star));
  EXPECT_TRUE(is_negative_definite(intersection_matrix(parse_graph("vertex a kind=exc self=-4\n"), {"a"})));

  IntersectionMatrix cycle{{"a", "b", "c"}, {{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}};
  EXPECT_FALSE(is_negative_definite(cycle));
}

TEST(NegativeDefinite, EveryCorpusClusterContracts) {
  for (const char* name : {"cd3_a.graph", "cd3_b.graph", "cd3_c.graph", "iia.graph", "iidual.graph", "iib.graph",
                           "ic.graph", "kad.graph", "k1a_a_m3.graph", "k1a_c_k2.graph"}) {
    auto g = parse_graph(corpus_file(name));
    EXPECT_TRUE(is_tree(g)) << name;
    for (const auto& c : exceptional_clusters(g)) {
      EXPECT_TRUE(is_negative_definite(intersection_matrix(g, c.vertices))) << name;
    }
  }
}
