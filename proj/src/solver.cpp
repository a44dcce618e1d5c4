#include "jnmf/solver.hpp"

#include "jnmf/errors.hpp"
#include "jnmf/parallel.hpp"

#include <cmath>
#include <limits>

namespace jnmf {

bool satisfies_constraints(const FactorState& s, double row_tol) {
    const auto c = s.h.cols();
    if (s.w1.rows() != c || s.w1.cols() != c || s.w2.rows() != c || s.w2.cols() != c)
        return false;
    if ((s.h.array() < 0.0).any() || (s.w1.array() < 0.0).any() || (s.w2.array() < 0.0).any())
        return false;
    if (!s.h.allFinite() || !s.w1.allFinite() || !s.w2.allFinite())
        return false;
    for (Eigen::Index i = 0; i < s.h.rows(); ++i)
        if (std::abs(s.h.row(i).sum() - 1.0) > row_tol)
            return false;
    for (Eigen::Index r = 0; r < c; ++r) {
        if (s.w2(r, r) != 0.0)
            return false;
        for (Eigen::Index q = 0; q < c; ++q) {
            if (r != q && s.w1(r, q) != 0.0)
                return false;
            if (s.w2(r, q) != s.w2(q, r))
                return false;
        }
    }
    return true;
}

void SolverConfig::validate() const {
    if (c < 1)
        throw ParameterError("community count must be at least 1");
    if (max_iter < 1)
        throw ParameterError("max_iter must be at least 1");
    if (restarts < 1)
        throw ParameterError("restarts must be at least 1");
    if (!(tol >= 0.0))
        throw ParameterError("tol must be nonnegative");
    if (!(epsilon > 0.0))
        throw ParameterError("epsilon must be positive");
    if (!(high_weight > 0.0) || !(low_weight > 0.0))
        throw ParameterError("mask weights must be positive");
}

double SolverResult::final_objective() const {
    return objective_trace.empty() ? std::numeric_limits<double>::infinity() : objective_trace.back();
}

JnmfProblem::JnmfProblem(const SignedSplit& split, const WeightMask& mask) {
    const auto n = split.a_plus.rows();
    if (split.a_plus.cols() != n || split.a_minus.rows() != n || split.a_minus.cols() != n ||
        mask.b.rows() != n || mask.b.cols() != n)
        throw ShapeError("split and mask dimensions disagree");
    n_ = static_cast<std::size_t>(n);
    low_ = mask.low_weight;

    row_start_.reserve(n_ + 1);
    row_start_.push_back(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double ap = split.a_plus(i, j);
            const double am = split.a_minus(i, j);
            const double b = mask.b(i, j);
            if (ap == 0.0 && am == 0.0) {
                if (b != mask.low_weight)
                    throw ShapeError("mask is not constant off the edge support");
                continue;
            }
            const double v = b;
            col_.push_back(static_cast<int>(j));
            a_plus_.push_back(ap);
            a_minus_.push_back(am);
            v_.push_back(v);
            v_excess_.push_back(v - low_);
            v_plus_.push_back(v * ap);
            v_minus_.push_back(v * am);
        }
        row_start_.push_back(col_.size());
    }
}

void JnmfProblem::check_shape(const FactorState& s) const {
    const auto c = s.h.cols();
    if (static_cast<std::size_t>(s.h.rows()) != n_ || s.w1.rows() != c || s.w1.cols() != c || s.w2.rows() != c ||
        s.w2.cols() != c)
        throw ShapeError("factor state does not match problem dimensions");
}

// (H W H^T)_ij for every stored edge (i, j).
std::vector<double> JnmfProblem::model_on_edges(const Matrix& h, const Matrix& w) const {
    const Matrix hw = h * w;
    std::vector<double> x(col_.size());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k)
            x[k] = hw.row(static_cast<Eigen::Index>(i)).dot(h.row(col_[k]));
    return x;
}

// S Y where S is the sparse matrix with the given values on the edge support.
Matrix JnmfProblem::edge_product(const std::vector<double>& values, const Matrix& y) const {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n_), y.cols());
    for (std::size_t i = 0; i < n_; ++i) {
        auto row = out.row(static_cast<Eigen::Index>(i));
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k)
            row.noalias() += values[k] * y.row(col_[k]);
    }
    return out;
}

double JnmfProblem::objective(const FactorState& s) const {
    check_shape(s);
    const Matrix gram = s.h.transpose() * s.h;
    const Matrix g1 = gram * s.w1;
    const Matrix g2 = gram * s.w2;
    // ||H W H^T||_F^2 = tr((G W)^2)
    const double dense = low_ * (g1.cwiseProduct(g1.transpose()).sum() + g2.cwiseProduct(g2.transpose()).sum());

    const auto x1 = model_on_edges(s.h, s.w1);
    const auto x2 = model_on_edges(s.h, s.w2);
    double sparse = 0.0;
    for (std::size_t k = 0; k < col_.size(); ++k) {
        const double r1 = a_plus_[k] - x1[k];
        const double r2 = a_minus_[k] - x2[k];
        sparse += v_[k] * (r1 * r1 + r2 * r2) - low_ * (x1[k] * x1[k] + x2[k] * x2[k]);
    }
    return std::max(0.0, 0.5 * (dense + sparse));
}

// W <- W o [H^T (B o A) H] / [H^T (B o H W H^T) H]
void JnmfProblem::update_relation(Matrix& w, const Matrix& h, const std::vector<double>& weighted_target,
                                  double epsilon) const {
    const Matrix gram = h.transpose() * h;
    auto excess = model_on_edges(h, w);
    for (std::size_t k = 0; k < excess.size(); ++k)
        excess[k] *= v_excess_[k];
    const Matrix numer = h.transpose() * edge_product(weighted_target, h);
    const Matrix denom = low_ * (gram * w * gram) + h.transpose() * edge_product(excess, h);
    w = w.cwiseProduct(numer.cwiseQuotient(denom.cwiseMax(epsilon)));
}

void JnmfProblem::update_w1(FactorState& s, double epsilon) const {
    check_shape(s);
    update_relation(s.w1, s.h, v_plus_, epsilon);
    s.w1 = Matrix(s.w1.diagonal().asDiagonal());
}

void JnmfProblem::update_w2(FactorState& s, double epsilon) const {
    check_shape(s);
    update_relation(s.w2, s.h, v_minus_, epsilon);
    s.w2.diagonal().setZero();
    s.w2 = 0.5 * (s.w2 + s.w2.transpose()).eval();
}

// H <- H o ([(B o A+) H W1 + (B o A-) H W2] / [(B o X1) H W1 + (B o X2) H W2])^(1/4)
void JnmfProblem::scale_h(FactorState& s, double epsilon) const {
    check_shape(s);
    const Matrix& h = s.h;
    const Matrix gram = h.transpose() * h;
    auto e1 = model_on_edges(h, s.w1);
    auto e2 = model_on_edges(h, s.w2);
    for (std::size_t k = 0; k < e1.size(); ++k) {
        e1[k] *= v_excess_[k];
        e2[k] *= v_excess_[k];
    }
    const Matrix numer = edge_product(v_plus_, h) * s.w1 + edge_product(v_minus_, h) * s.w2;
    const Matrix denom = low_ * (h * (s.w1 * gram * s.w1) + h * (s.w2 * gram * s.w2)) +
                         edge_product(e1, h) * s.w1 + edge_product(e2, h) * s.w2;
    const Matrix ratio = numer.cwiseQuotient(denom.cwiseMax(epsilon));
    s.h = h.cwiseProduct(ratio.array().pow(kMembershipStepExponent).matrix());
    s.h = (s.h.array() < kMembershipFlushThreshold).select(0.0, s.h);
}

void JnmfProblem::update_h(FactorState& s, double epsilon) const {
    scale_h(s, epsilon);
    normalize_rows(s.h);
}

SolverResult JnmfProblem::run(FactorState state, const SolverConfig& cfg) const {
    cfg.validate();
    check_shape(state);
    SolverResult result;
    double previous = objective(state);
    if (!std::isfinite(previous))
        throw NumericalError("objective is not finite at initialization");
    result.objective_trace.reserve(static_cast<std::size_t>(cfg.max_iter));
    for (int t = 1; t <= cfg.max_iter; ++t) {
        update_w1(state, cfg.epsilon);
        update_h(state, cfg.epsilon);
        update_w2(state, cfg.epsilon);
        update_h(state, cfg.epsilon);
        const double current = objective(state);
        if (!std::isfinite(current))
            throw NumericalError("objective became non-finite at cycle " + std::to_string(t));
        result.objective_trace.push_back(current);
        result.iterations_used = t;
        if (std::abs(previous - current) <= cfg.tol * previous) {
            result.converged = true;
            break;
        }
        previous = current;
    }
    result.state = std::move(state);
    return result;
}

double objective(const SignedSplit& split, const WeightMask& mask, const FactorState& state) {
    return JnmfProblem(split, mask).objective(state);
}

FactorState init_state(const SolverConfig& cfg, std::size_t n, Rng& rng) {
    cfg.validate();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] { return std::max(unit(rng), cfg.epsilon); };
    const auto rows = static_cast<Eigen::Index>(n);
    const auto c = static_cast<Eigen::Index>(cfg.c);

    FactorState s;
    s.h.resize(rows, c);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index r = 0; r < c; ++r)
            s.h(i, r) = draw();
    normalize_rows(s.h);
    s.h = s.h.cwiseMax(cfg.epsilon);

    s.w1 = Matrix::Zero(c, c);
    for (Eigen::Index r = 0; r < c; ++r)
        s.w1(r, r) = draw();

    s.w2 = Matrix::Zero(c, c);
    for (Eigen::Index r = 0; r < c; ++r)
        for (Eigen::Index q = r + 1; q < c; ++q)
            s.w2(r, q) = s.w2(q, r) = draw();
    return s;
}

FactorState update_w1(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon) {
    JnmfProblem(split, mask).update_w1(state, epsilon);
    return state;
}

FactorState update_w2(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon) {
    JnmfProblem(split, mask).update_w2(state, epsilon);
    return state;
}

FactorState update_h(const SignedSplit& split, const WeightMask& mask, FactorState state, double epsilon) {
    JnmfProblem(split, mask).update_h(state, epsilon);
    return state;
}

void normalize_rows(Matrix& h) {
    const double uniform = h.cols() > 0 ? 1.0 / static_cast<double>(h.cols()) : 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        const double total = h.row(i).sum();
        if (total > 0.0 && std::isfinite(total))
            h.row(i) /= total;
        else
            h.row(i).setConstant(uniform);
    }
}

SolverResult fit_restart(const JnmfProblem& problem, const SolverConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    auto result = problem.run(init_state(cfg, problem.size(), rng), cfg);
    result.seed = seed;
    return result;
}

SolverResult fit(const SignedGraph& graph, const SolverConfig& cfg) {
    cfg.validate();
    if (static_cast<std::size_t>(cfg.c) > graph.size())
        throw ParameterError("community count " + std::to_string(cfg.c) + " exceeds node count " +
                             std::to_string(graph.size()));
    const JnmfProblem problem(split_adjacency(graph), build_weight_mask(graph, cfg.high_weight, cfg.low_weight));
    auto runs = parallel_map(
        static_cast<std::size_t>(cfg.restarts),
        [&](std::size_t r) { return fit_restart(problem, cfg, cfg.seed + r); }, cfg.threads);

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r].final_objective() < runs[best].final_objective())
            best = r;
    return std::move(runs[best]);
}

Partition hard_assign(const FactorState& state) {
    std::vector<int> raw(state.nodes());
    for (Eigen::Index i = 0; i < state.h.rows(); ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index r = 1; r < state.h.cols(); ++r)
            if (state.h(i, r) > state.h(i, best))
                best = r;
        raw[static_cast<std::size_t>(i)] = static_cast<int>(best);
    }
    return Partition::compacted(raw);
}

} // namespace jnmf
