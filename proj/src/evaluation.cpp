#include "jnmf/evaluation.hpp"

#include "jnmf/errors.hpp"

#include <cmath>

namespace jnmf {

ConfusionTable confusion(const Partition& truth, const Partition& detected) {
    if (truth.size() != detected.size())
        throw ShapeError("partitions cover different node counts");
    ConfusionTable t;
    t.counts.assign(truth.communities(), std::vector<std::size_t>(detected.communities(), 0));
    t.row_sums = truth.sizes();
    t.col_sums = detected.sizes();
    t.total = truth.size();
    for (std::size_t v = 0; v < truth.size(); ++v)
        ++t.counts[static_cast<std::size_t>(truth.label(v))][static_cast<std::size_t>(detected.label(v))];
    return t;
}

namespace {

double scaled_entropy(const std::vector<std::size_t>& sizes, double n) {
    double h = 0.0;
    for (auto s : sizes)
        if (s > 0)
            h -= static_cast<double>(s) * std::log(static_cast<double>(s) / n);
    return h;
}

} // namespace

double nmi(const Partition& truth, const Partition& detected) {
    const auto t = confusion(truth, detected);
    if (t.total == 0)
        throw ShapeError("partitions are empty");
    if (truth.communities() == 1 || detected.communities() == 1)
        return truth.equivalent(detected) ? 1.0 : 0.0;

    const auto n = static_cast<double>(t.total);
    double mutual = 0.0;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            const auto nij = static_cast<double>(t.counts[i][j]);
            if (nij == 0.0)
                continue;
            mutual += nij * std::log(nij * n / (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
        }
    }
    return mutual / std::sqrt(scaled_entropy(t.row_sums, n) * scaled_entropy(t.col_sums, n));
}

} // namespace jnmf
