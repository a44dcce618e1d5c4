#pragma once

#include "jnmf/partition.hpp"
#include "jnmf/signed_graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace jnmf {

using Rng = std::mt19937_64;

/// Exponent applied to the multiplicative ratio in the membership update.
inline constexpr double kMembershipStepExponent = 0.25;
/// Membership entries below this are flushed to zero after each step.
inline constexpr double kMembershipFlushThreshold = 1e-150;

/// Factors of A+ ~ H W1 H^T and A- ~ H W2 H^T.
///   h  : n x c, nonnegative, rows sum to 1
///   w1 : c x c, nonnegative, diagonal
///   w2 : c x c, nonnegative, symmetric, zero diagonal
struct FactorState {
    Matrix h;
    Matrix w1;
    Matrix w2;

    std::size_t nodes() const noexcept { return static_cast<std::size_t>(h.rows()); }
    std::size_t communities() const noexcept { return static_cast<std::size_t>(h.cols()); }
};

/// True when every structural constraint of FactorState holds; row sums are
/// compared against 1 with `row_tol`.
bool satisfies_constraints(const FactorState& state, double row_tol = 1e-9);

struct SolverConfig {
    int c = 2;
    int max_iter = 500;
    int restarts = 10;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    double epsilon = 1e-12;
    double high_weight = kDefaultHighWeight;
    double low_weight = kDefaultLowWeight;
    unsigned threads = 1;

    void validate() const;
};

struct SolverResult {
    FactorState state;
    std::vector<double> objective_trace;
    bool converged = false;
    int iterations_used = 0;
    std::uint64_t seed = 0;

    double final_objective() const;
};

/// Weighted joint tri-factorization problem for one graph.
///
/// The residual weight B is constant (low) off the edge support. Every product
/// with B o (H W H^T) splits into a rank-c term and a sparse correction over
/// the edges, so each sub-step costs O(|E| c + n c^2).
class JnmfProblem {
  public:
    /// Throws ShapeError when dimensions disagree or when the mask is not
    /// constant off the support of A+ + A-.
    JnmfProblem(const SignedSplit& split, const WeightMask& mask);

    std::size_t size() const noexcept { return n_; }

    /// 1/2 sum_ij B_ij (A+ - H W1 H^T)_ij^2 + 1/2 sum_ij B_ij (A- - H W2 H^T)_ij^2
    double objective(const FactorState& state) const;

    void update_w1(FactorState& state, double epsilon) const;
    void update_w2(FactorState& state, double epsilon) const;

    /// Multiplicative membership step without the row renormalization.
    void scale_h(FactorState& state, double epsilon) const;

    /// scale_h followed by normalize_rows.
    void update_h(FactorState& state, double epsilon) const;

    /// Alternates (W1, H, W2, H) from `initial` until max_iter cycles or the
    /// relative objective change drops to cfg.tol.
    SolverResult run(FactorState initial, const SolverConfig& cfg) const;

  private:
    void check_shape(const FactorState& state) const;
    std::vector<double> model_on_edges(const Matrix& h, const Matrix& w) const;
    Matrix edge_product(const std::vector<double>& values, const Matrix& y) const;
    void update_relation(Matrix& w, const Matrix& h, const std::vector<double>& weighted_target,
                         double epsilon) const;

    std::size_t n_ = 0;
    double low_ = 1.0;
    // Edge support in CSR form, both directions stored.
    std::vector<std::size_t> row_start_;
    std::vector<int> col_;
    std::vector<double> a_plus_;
    std::vector<double> a_minus_;
    std::vector<double> v_;        // B_ij
    std::vector<double> v_excess_; // B_ij - low
    std::vector<double> v_plus_;   // B_ij A+_ij
    std::vector<double> v_minus_;  // B_ij A-_ij
};

double objective(const SignedSplit& split, const WeightMask& mask, const FactorState& state);

/// Uniform (0,1) draws floored at cfg.epsilon: H row-normalized, W1 diagonal,
/// W2 symmetric with zero diagonal.
FactorState init_state(const SolverConfig& cfg, std::size_t n, Rng& rng);

FactorState update_w1(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon = 1e-12);
FactorState update_w2(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon = 1e-12);
FactorState update_h(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon = 1e-12);

/// Rescales rows of h to sum to one; rows with no mass become uniform.
void normalize_rows(Matrix& h);

/// One initialization from `seed`, then JnmfProblem::run.
SolverResult fit_restart(const JnmfProblem& problem, const SolverConfig& cfg, std::uint64_t seed);

/// Best of cfg.restarts runs (seeds cfg.seed + r) by final objective; ties go
/// to the lower restart index.
SolverResult fit(const SignedGraph& graph, const SolverConfig& cfg);

/// Node i goes to argmax_r H_ir (first maximum wins); empty communities are
/// dropped and the remaining labels compacted in index order.
Partition hard_assign(const FactorState& state);

} // namespace jnmf
