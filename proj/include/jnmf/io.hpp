#pragma once

#include "jnmf/partition.hpp"
#include "jnmf/signed_graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jnmf {

// Edge-list format, one record per line:
//
//   # comment
//   u v w        undirected link between tokens u and v with signed weight w != 0
//   u            declares node u (optional; fixes index order, allows isolated nodes)
//
// Node tokens are mapped to indices in order of first appearance. A pair may
// be repeated (in either orientation) only with the identical weight.
SignedGraph parse_edge_list(std::string_view text);

/// Writes every node declaration in index order followed by the upper-triangle
/// links; parse_edge_list reproduces the graph exactly.
void write_edge_list(std::ostream& out, const SignedGraph& graph);

// Partition format: "u label" per line, '#' comments. Labels are arbitrary
// tokens, numbered in order of first appearance. Every node of `node_labels`
// must appear exactly once.
Partition parse_partition(std::string_view text, const std::vector<std::string>& node_labels);

void write_partition(std::ostream& out, const Partition& part, const std::vector<std::string>& node_labels);

/// Whole file as a string; throws ParseError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes through a temporary string so a failed run leaves no partial file.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

SignedGraph load_edge_list(const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path, const std::vector<std::string>& node_labels);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

} // namespace jnmf
