#pragma once

#include "jnmf/benchmarks.hpp"
#include "jnmf/solver.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jnmf {

// sg1: SG over p_in, no noise.      slfr1: SLFR over mu, no noise.
// sg2: SG over (p_plus, p_minus).   slfr2: SLFR over (p_plus, p_minus).
enum class Curve { sg1, slfr1, sg2, slfr2 };

// fixed: c set to the ground-truth community count.
// sweep: c chosen by penalized partition density over a range.
enum class Selection { fixed, sweep };

Curve parse_curve(std::string_view name);
std::string_view curve_name(Curve curve);
Selection parse_selection(std::string_view name);
std::string_view selection_name(Selection mode);

struct ExperimentConfig {
    Curve curve = Curve::sg1;
    Selection selection = Selection::fixed;
    SgConfig sg;                     // p_in is overridden by the sg1 grid
    SlfrConfig slfr;                 // mu is overridden by the slfr1 grid
    std::vector<double> p_in_grid;   // sg1
    std::vector<double> mu_grid;     // slfr1
    std::vector<double> p_plus_grid; // sg2, slfr2
    std::vector<double> p_minus_grid;
    int trials = 10;
    int sweep_lo = 0; // 0 = default range for the graph size
    int sweep_hi = 0;
    SolverConfig solver;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct TrialOutcome {
    double nmi = 0.0;
    int detected_c = 0;
};

struct ExperimentRow {
    std::vector<double> point; // values of the grid variables
    double mean_nmi = 0.0;
    double std_nmi = 0.0;
    double mean_c = 0.0;
    double std_c = 0.0;
    std::vector<TrialOutcome> trials;
};

struct ExperimentResult {
    std::vector<std::string> variables;
    std::vector<ExperimentRow> rows;
};

/// Default grids: p_in 0, 0.1, ..., 1; mu 0.1, ..., 0.9; noise 0, 0.25, 0.5.
ExperimentConfig default_experiment(Curve curve);

/// Runs the solver on one labelled graph and scores it against the truth.
TrialOutcome detect_and_score(const LabeledGraph& g, Selection mode, int sweep_lo, int sweep_hi,
                              const SolverConfig& solver);

/// Generator seed of trial t at grid point g. The solver seed of the same
/// trial is this value plus 500009.
std::uint64_t trial_seed(std::uint64_t base, std::size_t grid_point, int trial);

/// Every (grid point, trial) cell runs on cfg.threads workers; rows come back
/// in grid order regardless of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Columns: grid variables, mean_nmi, std_nmi, mean_c, std_c.
void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result);

} // namespace jnmf
