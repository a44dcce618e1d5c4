#pragma once

#include "jnmf/partition.hpp"
#include "jnmf/signed_graph.hpp"
#include "jnmf/solver.hpp"

#include <cstdint>
#include <vector>

namespace jnmf {

/// Signed Girvan-Newman style planted partition.
struct SgConfig {
    int c = 4;          // communities
    int n = 30;         // nodes per community
    double k = 16.0;    // expected degree
    double p_in = 0.8;  // expected fraction of a node's links that are internal
    double p_plus = 0;  // probability an inter-community link is positive
    double p_minus = 0; // probability an intra-community link is negative
    std::uint64_t seed = 0;

    void validate() const;
};

/// Signed LFR benchmark.
struct SlfrConfig {
    int n = 1000;
    double k_avg = 20.0;
    int k_max = 50;
    double lambda1 = 2.0; // degree exponent
    double lambda2 = 1.0; // community-size exponent
    int s_min = 20;
    int s_max = 60;
    double mu = 0.2;      // fraction of each node's links leaving its community
    double p_plus = 0;
    double p_minus = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct LabeledGraph {
    SignedGraph graph;
    Partition truth;
};

/// Every intra pair is linked with probability k p_in / (n - 1) and every
/// inter pair with probability k (1 - p_in) / ((c - 1) n), so each node has
/// expected degree k with expected internal share p_in. Intra links start
/// positive, inter links negative; sign noise is applied last.
LabeledGraph generate_sg(const SgConfig& cfg);

/// Power-law degrees and community sizes, per-node internal/external stub
/// split (1 - mu) / mu, configuration-model matching within communities and
/// across communities with self-loops and multi-edges repaired by edge swaps.
LabeledGraph generate_slfr(const SlfrConfig& cfg);

/// Re-signs every link: intra links become negative with probability p_minus
/// (positive otherwise), inter links positive with probability p_plus
/// (negative otherwise). One uniform draw per link in row-major upper-triangle
/// order; magnitudes and topology are untouched.
LabeledGraph apply_sign_noise(const LabeledGraph& g, double p_plus, double p_minus, Rng& rng);

/// Continuous power law x^-exponent on [lo, hi].
class TruncatedPowerLaw {
  public:
    TruncatedPowerLaw(double exponent, double lo, double hi);

    double cdf(double x) const;
    double quantile(double u) const;
    double mean() const;
    double sample(Rng& rng) const;

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

  private:
    double exponent_, lo_, hi_;
};

/// Lower cutoff of a power law on [lo, hi] whose mean equals `mean`.
/// Throws GenerationError when no cutoff >= 0.5 works.
double power_law_lower_cutoff(double exponent, double hi, double mean);

/// n integer degrees: continuous power-law draws rounded to the nearest
/// integer, the total made even by adjusting one node.
std::vector<int> sample_degree_sequence(int n, double k_avg, int k_max, double exponent, Rng& rng);

/// Community sizes drawn from P(s) ~ s^-exponent on integers [s_min, s_max],
/// trimmed to sum exactly to n. Throws GenerationError after bounded retries.
std::vector<int> sample_community_sizes(int n, int s_min, int s_max, double exponent, Rng& rng);

} // namespace jnmf
