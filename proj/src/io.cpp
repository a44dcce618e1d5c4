#include "jnmf/io.hpp"

#include "jnmf/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace jnmf {

namespace {

// Splits text into whitespace-separated tokens per line, skipping blank and
// comment lines. Callback receives (line number, tokens).
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<std::string_view> tokens;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        tokens.clear();
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        fn(line_no, tokens);
    }
}

double parse_weight(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw ParseError("invalid weight '" + std::string(token) + "'", line_no);
    return value;
}

} // namespace

SignedGraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::map<std::pair<int, int>, double> links;

    auto node = [&](std::string_view token) {
        auto [it, inserted] = index.emplace(std::string(token), static_cast<int>(labels.size()));
        if (inserted)
            labels.emplace_back(token);
        return it->second;
    };

    for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
        if (tok.size() == 1) {
            node(tok[0]);
            return;
        }
        if (tok.size() != 3)
            throw ParseError("expected 'u v w', got " + std::to_string(tok.size()) + " fields", line_no);
        const double w = parse_weight(tok[2], line_no);
        if (w == 0.0)
            throw ParseError("zero weight", line_no);
        const int u = node(tok[0]);
        const int v = node(tok[1]);
        if (u == v)
            throw ParseError("self-loop on '" + std::string(tok[0]) + "'", line_no);
        const auto key = std::minmax(u, v);
        auto [it, inserted] = links.emplace(key, w);
        if (!inserted && it->second != w)
            throw ParseError("duplicate edge '" + std::string(tok[0]) + " " + std::string(tok[1]) +
                                 "' with conflicting weight",
                             line_no);
    });

    if (labels.size() < 2)
        throw ParseError("edge list declares fewer than 2 nodes");
    std::vector<SignedEdge> edges;
    edges.reserve(links.size());
    for (const auto& [key, w] : links)
        edges.push_back({key.first, key.second, w});
    const auto n = labels.size();
    return SignedGraph::from_edges(n, edges, std::move(labels));
}

void write_edge_list(std::ostream& out, const SignedGraph& graph) {
    out << "# nodes " << graph.size() << "\n";
    for (const auto& label : graph.labels())
        out << label << '\n';
    const auto edges = graph.edges();
    out << "# edges " << edges.size() << "\n";
    for (const auto& e : edges)
        out << graph.labels()[static_cast<std::size_t>(e.u)] << ' ' << graph.labels()[static_cast<std::size_t>(e.v)]
            << ' ' << format_double(e.weight) << '\n';
}

Partition parse_partition(std::string_view text, const std::vector<std::string>& node_labels) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < node_labels.size(); ++i)
        index.emplace(node_labels[i], i);

    std::vector<int> raw(node_labels.size(), -1);
    std::unordered_map<std::string, int> community;
    for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
        if (tok.size() != 2)
            throw ParseError("expected 'node label', got " + std::to_string(tok.size()) + " fields", line_no);
        const auto it = index.find(std::string(tok[0]));
        if (it == index.end())
            throw ParseError("unknown node '" + std::string(tok[0]) + "'", line_no);
        if (raw[it->second] != -1)
            throw ParseError("node '" + std::string(tok[0]) + "' assigned twice", line_no);
        const auto [c, inserted] = community.emplace(std::string(tok[1]), static_cast<int>(community.size()));
        raw[it->second] = c->second;
    });
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] == -1)
            throw ParseError("node '" + node_labels[i] + "' has no community");
    return Partition(std::move(raw));
}

void write_partition(std::ostream& out, const Partition& part, const std::vector<std::string>& node_labels) {
    if (part.size() != node_labels.size())
        throw ShapeError("partition and label list sizes differ");
    for (std::size_t i = 0; i < part.size(); ++i)
        out << node_labels[i] << ' ' << part.label(i) << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ParseError("cannot write '" + path.string() + "'");
    out << contents;
    if (!out)
        throw ParseError("write to '" + path.string() + "' failed");
}

SignedGraph load_edge_list(const std::filesystem::path& path) {
    try {
        return parse_edge_list(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Partition load_partition(const std::filesystem::path& path, const std::vector<std::string>& node_labels) {
    try {
        return parse_partition(read_text_file(path), node_labels);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

} // namespace jnmf
