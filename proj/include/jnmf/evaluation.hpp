#pragma once

#include "jnmf/partition.hpp"

#include <cstddef>
#include <vector>

namespace jnmf {

/// counts[i][j] = |truth community i  intersect  detected community j|
struct ConfusionTable {
    std::vector<std::vector<std::size_t>> counts;
    std::vector<std::size_t> row_sums;
    std::vector<std::size_t> col_sums;
    std::size_t total = 0;
};

ConfusionTable confusion(const Partition& truth, const Partition& detected);

/// Normalized mutual information, natural log, 0 log 0 = 0:
///
///   sum_ij n_ij log(n_ij n / (n_i n_j)) / sqrt(H1 H2),  Hk = -sum n_i log(n_i / n)
///
/// When either partition is a single community the denominator vanishes; the
/// result is then 1 if the two groupings coincide and 0 otherwise.
double nmi(const Partition& truth, const Partition& detected);

} // namespace jnmf
