#include "jnmf/signed_graph.hpp"

#include "jnmf/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace jnmf {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i + 1));
    return labels;
}

} // namespace

SignedGraph::SignedGraph(Matrix adjacency, std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
    if (adjacency_.rows() != adjacency_.cols())
        throw StructureError("adjacency matrix must be square");
    const auto n = adjacency_.rows();
    if (n < 2)
        throw StructureError("a signed graph needs at least 2 nodes");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (adjacency_(i, i) != 0.0)
            throw StructureError("self-loop at node " + std::to_string(i));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (!std::isfinite(adjacency_(i, j)))
                throw StructureError("non-finite weight at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            if (adjacency_(i, j) != adjacency_(j, i))
                throw StructureError("asymmetric adjacency at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }
    if (labels_.empty())
        labels_ = default_labels(static_cast<std::size_t>(n));
    else if (labels_.size() != static_cast<std::size_t>(n))
        throw ShapeError("label count " + std::to_string(labels_.size()) + " does not match node count " +
                         std::to_string(n));
}

SignedGraph SignedGraph::from_edges(std::size_t n, const std::vector<SignedEdge>& edges,
                                    std::vector<std::string> labels) {
    Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
            throw ShapeError("edge endpoint out of range");
        if (e.u == e.v)
            throw StructureError("self-loop at node " + std::to_string(e.u));
        if (a(e.u, e.v) != 0.0)
            throw StructureError("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
        a(e.u, e.v) = e.weight;
        a(e.v, e.u) = e.weight;
    }
    return SignedGraph(std::move(a), std::move(labels));
}

std::vector<SignedEdge> SignedGraph::edges() const {
    std::vector<SignedEdge> out;
    const auto n = adjacency_.rows();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (adjacency_(i, j) != 0.0)
                out.push_back({static_cast<int>(i), static_cast<int>(j), adjacency_(i, j)});
    return out;
}

SignedSplit split_adjacency(const SignedGraph& graph) {
    const Matrix& a = graph.adjacency();
    return {a.cwiseMax(0.0), (-a).cwiseMax(0.0)};
}

WeightMask build_weight_mask(const SignedGraph& graph, double high, double low) {
    if (!(high > 0.0) || !(low > 0.0))
        throw ParameterError("mask weights must be positive");
    const Matrix& a = graph.adjacency();
    Matrix b = (a.array() != 0.0).select(Matrix::Constant(a.rows(), a.cols(), high), low);
    return {std::move(b), high, low};
}

GraphStats graph_stats(const SignedGraph& graph) {
    GraphStats s;
    s.nodes = graph.size();
    double total = 0.0;
    for (const auto& e : graph.edges()) {
        if (e.weight > 0)
            ++s.positive_edges;
        else
            ++s.negative_edges;
        total += std::abs(e.weight);
    }
    s.mean_abs_degree = 2.0 * total / static_cast<double>(s.nodes);
    return s;
}

} // namespace jnmf
