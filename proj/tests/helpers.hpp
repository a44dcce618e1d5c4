#pragma once

#include "jnmf/signed_graph.hpp"
#include "jnmf/solver.hpp"

#include <random>
#include <vector>

namespace testing_support {

using jnmf::Matrix;

// Symmetric hollow matrix with +/-1 links on a fraction `fill` of the pairs.
inline Matrix random_signed(int n, double fill, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < fill)
                a(i, j) = a(j, i) = unit(rng) < 0.5 ? 1.0 : -1.0;
    return a;
}

// Same as random_signed with magnitudes drawn from (0.1, 3).
inline Matrix random_weighted(int n, double fill, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < fill)
                a(i, j) = a(j, i) = (unit(rng) < 0.5 ? 1.0 : -1.0) * (0.1 + 2.9 * unit(rng));
    return a;
}

inline std::vector<int> random_labels(int n, int c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, c - 1);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels)
        l = pick(rng);
    return labels;
}

// Two cliques of `size` nodes with +1 inside and -1 across.
inline jnmf::SignedGraph two_cliques(int size) {
    const int n = 2 * size;
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                a(i, j) = (i / size == j / size) ? 1.0 : -1.0;
    return jnmf::SignedGraph(a);
}

} // namespace testing_support
