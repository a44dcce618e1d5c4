#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace jnmf {

using Matrix = Eigen::MatrixXd;

inline constexpr double kDefaultHighWeight = 5.0;
inline constexpr double kDefaultLowWeight = 1.0;

struct SignedEdge {
    int u;
    int v;
    double weight;
};

/// Undirected signed network stored as a dense symmetric adjacency matrix.
///
/// The constructor validates the structure (square, n >= 2, exactly symmetric,
/// zero diagonal, finite entries) and throws StructureError otherwise; asymmetric
/// input is rejected rather than symmetrized. Instances are immutable.
class SignedGraph {
  public:
    explicit SignedGraph(Matrix adjacency, std::vector<std::string> labels = {});

    /// Builds the adjacency from an edge list over nodes 0..n-1. Each
    /// undirected pair may appear once; zero weights are skipped.
    static SignedGraph from_edges(std::size_t n, const std::vector<SignedEdge>& edges,
                                  std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return static_cast<std::size_t>(adjacency_.rows()); }
    const Matrix& adjacency() const noexcept { return adjacency_; }
    double weight(std::size_t i, std::size_t j) const { return adjacency_(i, j); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Nonzero entries of the strict upper triangle, row-major order.
    std::vector<SignedEdge> edges() const;

  private:
    Matrix adjacency_;
    std::vector<std::string> labels_;
};

/// A = a_plus - a_minus with disjoint nonnegative supports.
struct SignedSplit {
    Matrix a_plus;
    Matrix a_minus;
};

/// Confidence weights of the factorization residuals: high_weight where the
/// graph has an edge, low_weight elsewhere (including the diagonal).
struct WeightMask {
    Matrix b;
    double high_weight = kDefaultHighWeight;
    double low_weight = kDefaultLowWeight;
};

struct GraphStats {
    std::size_t nodes = 0;
    std::size_t positive_edges = 0;
    std::size_t negative_edges = 0;
    double mean_abs_degree = 0.0;
};

SignedSplit split_adjacency(const SignedGraph& graph);

WeightMask build_weight_mask(const SignedGraph& graph, double high = kDefaultHighWeight,
                             double low = kDefaultLowWeight);

GraphStats graph_stats(const SignedGraph& graph);

} // namespace jnmf
