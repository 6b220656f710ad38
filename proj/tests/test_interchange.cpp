#include <gtest/gtest.h>

#include <random>

#include "kpan/interchange.hpp"
#include "oracle.hpp"

using namespace kpan;

namespace {

GraphErrorKind parse_error(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const GraphError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed without error: " << text;
    return GraphErrorKind::InvalidProfile;
}

}  // namespace

TEST(ParseGraph, SpecExamples) {
    EXPECT_EQ(parse_graph(R"({"parts":[2,2,2],"deleted_edges":[]})"), complete_kpartite({2, 2, 2}));
    const KGraph one = parse_graph(R"({"parts":[2,2,2],"deleted_edges":[[0,2]]})");
    EXPECT_EQ(one.edge_count(), 11);
    EXPECT_FALSE(one.adjacent(0, 2));
    const KGraph matching = parse_graph(R"({"parts":[2,2],"edges":[[0,2],[1,3]]})");
    EXPECT_EQ(matching.edge_count(), 2);
    EXPECT_TRUE(matching.adjacent(0, 2));
    EXPECT_TRUE(matching.adjacent(1, 3));
    EXPECT_FALSE(matching.adjacent(0, 3));
}

TEST(ParseGraph, DistinctErrors) {
    EXPECT_EQ(parse_error("{not json"), GraphErrorKind::MalformedDocument);
    EXPECT_EQ(parse_error(R"({"parts":[2,2]})"), GraphErrorKind::MalformedDocument);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[],"deleted_edges":[]})"),
              GraphErrorKind::MalformedDocument);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[[0]]})"), GraphErrorKind::MalformedDocument);
    EXPECT_EQ(parse_error(R"({"parts":"2,2","edges":[]})"), GraphErrorKind::MalformedDocument);
    EXPECT_EQ(parse_error(R"({"parts":[2,0],"edges":[]})"), GraphErrorKind::InvalidProfile);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[[0,1]]})"), GraphErrorKind::IntraPartEdge);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"deleted_edges":[[0,1]]})"), GraphErrorKind::IntraPartEdge);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[[0,2],[2,0]]})"), GraphErrorKind::DuplicateEdge);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"deleted_edges":[[0,2],[0,2]]})"),
              GraphErrorKind::DuplicateEdge);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[[0,4]]})"), GraphErrorKind::VertexOutOfRange);
    EXPECT_EQ(parse_error(R"({"parts":[2,2],"edges":[[-1,2]]})"), GraphErrorKind::VertexOutOfRange);
}

TEST(ParseGraph, UnsortedPartsAreRelabelled) {
    // File labels: part (1) = {0}, part (3) = {1,2,3}. After sorting the
    // 3-part comes first, so file vertex 0 becomes vertex 3.
    const KGraph g = parse_graph(R"({"parts":[1,3],"edges":[[0,1],[0,3]]})");
    EXPECT_EQ(g.profile().parts(), (std::vector<int>{3, 1}));
    EXPECT_TRUE(g.adjacent(3, 0));
    EXPECT_TRUE(g.adjacent(3, 2));
    EXPECT_FALSE(g.adjacent(3, 1));
}

TEST(SerializeGraph, RoundTripsRandomGraphs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const KGraph g = oracle::random_graph(oracle::random_profile(rng, 2, 20), rng, 0.7);
        for (GraphForm form : {GraphForm::Deletion, GraphForm::Explicit}) {
            const KGraph back = parse_graph(serialize_graph(g, form));
            EXPECT_EQ(back, g);
            for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(back.part_of(v), g.part_of(v));
        }
    }
}

TEST(SerializeGraph, DeletionFormListsMissingPairsInOrder) {
    const KGraph g = delete_edges(complete_kpartite({2, 2, 2}), {Edge{3, 5}, Edge{0, 2}});
    EXPECT_EQ(serialize_graph(g), R"({"deleted_edges":[[0,2],[3,5]],"parts":[2,2,2]})");
}
