#pragma once

#include "jnmf/partition.hpp"
#include "jnmf/signed_graph.hpp"
#include "jnmf/solver.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace jnmf {

// How intra-community links are tallied.
enum class EdgeTally {
    count,          // number of positive / negative links
    absolute_weight // sum of |A_ij| over positive / negative links
};

struct CommunityDensity {
    std::size_t size = 0;
    double positive = 0.0; // m+
    double negative = 0.0; // m-
    double density = 0.0;  // (m+ - m-) / (size (size - 1) / 2), 0 for size <= 1
};

struct DensityReport {
    std::vector<CommunityDensity> per_community;
    double weighted_avg = 0.0; // sum over communities of (size / n) * density
    double penalized = 0.0;    // weighted_avg / sqrt(c)
};

/// Signed partition density of every community and the sqrt(c)-penalized
/// size-weighted average. Each undirected link is counted once.
DensityReport partition_density(const SignedGraph& graph, const Partition& part,
                                EdgeTally tally = EdgeTally::count);

struct SweepEntry {
    int c = 0;
    double mean_density = 0.0;
    double std_density = 0.0;
    std::vector<double> densities; // penalized density per restart
    SolverResult best;             // lowest-objective restart
};

struct SweepReport {
    std::vector<SweepEntry> per_c;
    int selected_c = 0;
    Partition selected_partition;
};

/// Seed of restart r for community count c: base + c * 10007 + r.
std::uint64_t sweep_seed(std::uint64_t base, int c, int restart);

/// 1 .. min(20, floor(n / 3)), at least 1 .. 1.
std::pair<int, int> default_c_range(std::size_t n);

/// Fits every c in [c_lo, c_hi] with cfg.restarts restarts, scores each
/// restart's hard assignment by penalized density and picks the c with the
/// highest mean (ties to the smaller c). Runs (c, restart) cells on
/// cfg.threads workers; the outcome does not depend on the thread count.
SweepReport sweep_c(const SignedGraph& graph, int c_lo, int c_hi, const SolverConfig& cfg,
                    EdgeTally tally = EdgeTally::count);

/// "c,mean_density,std_density" rows preceded by a versioned header comment.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

} // namespace jnmf
