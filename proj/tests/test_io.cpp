#include "jnmf/benchmarks.hpp"
#include "jnmf/errors.hpp"
#include "jnmf/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace jnmf;

namespace {

std::string to_text(const SignedGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(EdgeList, ParsesMixedSigns) {
    const auto g = parse_edge_list("a b 1\nb c -1");
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(g.weight(0, 1), 1.0);
    EXPECT_EQ(g.weight(2, 1), -1.0);
    EXPECT_EQ(g.edges().size(), 2u);
}

TEST(EdgeList, CommentsAndWeights) {
    const auto g = parse_edge_list("# comment\na b 2.5\n\n   # indented comment\n");
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.weight(0, 1), 2.5);
}

TEST(EdgeList, NodeDeclarationsFixOrderAndAllowIsolatedNodes) {
    const auto g = parse_edge_list("z\ny\nx\nx y -2\n");
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"z", "y", "x"}));
    EXPECT_EQ(g.weight(1, 2), -2.0);
    EXPECT_EQ(g.adjacency().row(0).cwiseAbs().sum(), 0.0);
}

TEST(EdgeList, IdenticalDuplicatesAreAccepted) {
    const auto g = parse_edge_list("a b 1\nb a 1\n");
    EXPECT_EQ(g.edges().size(), 1u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("a b 1\nb c 0\n"), 2u);
    EXPECT_EQ(parse_error_line("a b 1\n\nc c 1\n"), 3u);
    EXPECT_EQ(parse_error_line("a b\n"), 1u);
    EXPECT_EQ(parse_error_line("a b 1 2\n"), 1u);
    EXPECT_EQ(parse_error_line("a b x\n"), 1u);
    EXPECT_EQ(parse_error_line("a b nan\n"), 1u);
    EXPECT_EQ(parse_error_line("a b 1\nb a -1\n"), 2u);
    EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
    EXPECT_THROW(parse_edge_list("a\n"), ParseError);
}

TEST(EdgeList, RoundTripGeneratedGraphs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SgConfig cfg;
        cfg.seed = seed;
        cfg.p_plus = 0.2;
        cfg.p_minus = 0.2;
        const auto g = generate_sg(cfg).graph;
        const auto back = parse_edge_list(to_text(g));
        EXPECT_EQ(back.adjacency(), g.adjacency());
        EXPECT_EQ(back.labels(), g.labels());
    }
}

TEST(EdgeList, RoundTripIsExactForArbitraryWeights) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> weight(-10.0, 10.0);
    std::vector<SignedEdge> edges;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            edges.push_back({i, j, weight(rng)});
    const auto g = SignedGraph::from_edges(8, edges, {"a", "b", "c", "d", "e", "f", "g", "h"});
    const auto back = parse_edge_list(to_text(g));
    EXPECT_EQ(back.adjacency(), g.adjacency());
    EXPECT_EQ(back.labels(), g.labels());
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(-0.5), "-0.5");
    EXPECT_EQ(format_double(0.1), "0.1");
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> any(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = any(rng);
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(PartitionFile, RoundTrip) {
    const std::vector<std::string> labels{"x", "y", "z", "w"};
    const Partition p({1, 0, 1, 2});
    std::ostringstream out;
    write_partition(out, p, labels);
    EXPECT_TRUE(parse_partition(out.str(), labels).equivalent(p));
}

TEST(PartitionFile, CommunityTokensNumberedByFirstAppearance) {
    const std::vector<std::string> labels{"a", "b", "c"};
    const auto p = parse_partition("# truth\nc B\na A\nb B\n", labels);
    EXPECT_EQ(p.assignment(), (std::vector<int>{1, 0, 0}));
}

TEST(PartitionFile, Errors) {
    const std::vector<std::string> labels{"a", "b"};
    EXPECT_THROW(parse_partition("a 1\n", labels), ParseError);
    EXPECT_THROW(parse_partition("a 1\nb 1\nc 2\n", labels), ParseError);
    EXPECT_THROW(parse_partition("a 1\na 2\nb 1\n", labels), ParseError);
    EXPECT_THROW(parse_partition("a\nb 1\n", labels), ParseError);
    std::ostringstream out;
    EXPECT_THROW(write_partition(out, Partition({0, 1, 0}), labels), ShapeError);
}

TEST(Files, ReadWriteAndMissingFile) {
    const auto dir = std::filesystem::temp_directory_path() / "jnmf_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "g.edges";
    write_text_file(path, "a b -1\n");
    EXPECT_EQ(read_text_file(path), "a b -1\n");
    EXPECT_EQ(load_edge_list(path).weight(0, 1), -1.0);
    EXPECT_THROW(read_text_file(dir / "missing.edges"), ParseError);
    std::filesystem::remove_all(dir);
}

TEST(Datasets, BundledNetworksLoad) {
    const std::string dir = JNMF_DATA_DIR;
    struct Expected {
        const char* name;
        std::size_t nodes;
        std::size_t communities;
    };
    for (const auto& e : {Expected{"supreme_court", 9, 2}, Expected{"slovene_parties", 10, 2},
                          Expected{"gahuku_gama", 16, 3}}) {
        const auto g = load_edge_list(dir + "/" + e.name + ".edges");
        EXPECT_EQ(g.size(), e.nodes) << e.name;
        const auto truth = load_partition(dir + "/" + e.name + ".truth", g.labels());
        EXPECT_EQ(truth.communities(), e.communities) << e.name;
    }
}
