#include "jnmf/model_selection.hpp"

#include "jnmf/errors.hpp"
#include "jnmf/io.hpp"
#include "jnmf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace jnmf {

DensityReport partition_density(const SignedGraph& graph, const Partition& part, EdgeTally tally) {
    if (part.size() != graph.size())
        throw ShapeError("partition covers " + std::to_string(part.size()) + " nodes, graph has " +
                         std::to_string(graph.size()));
    DensityReport report;
    report.per_community.resize(part.communities());
    for (std::size_t a = 0; a < part.communities(); ++a)
        report.per_community[a].size = part.sizes()[a];

    for (const auto& e : graph.edges()) {
        const int cu = part.label(static_cast<std::size_t>(e.u));
        if (cu != part.label(static_cast<std::size_t>(e.v)))
            continue;
        const double amount = tally == EdgeTally::count ? 1.0 : std::abs(e.weight);
        auto& comm = report.per_community[static_cast<std::size_t>(cu)];
        (e.weight > 0 ? comm.positive : comm.negative) += amount;
    }

    const auto n = static_cast<double>(graph.size());
    for (auto& comm : report.per_community) {
        if (comm.size >= 2) {
            const auto sz = static_cast<double>(comm.size);
            comm.density = (comm.positive - comm.negative) / (sz * (sz - 1.0) / 2.0);
        }
        report.weighted_avg += static_cast<double>(comm.size) / n * comm.density;
    }
    report.penalized = report.weighted_avg / std::sqrt(static_cast<double>(part.communities()));
    return report;
}

std::uint64_t sweep_seed(std::uint64_t base, int c, int restart) {
    return base + static_cast<std::uint64_t>(c) * 10007u + static_cast<std::uint64_t>(restart);
}

std::pair<int, int> default_c_range(std::size_t n) {
    return {1, std::max(1, static_cast<int>(std::min<std::size_t>(20, n / 3)))};
}

SweepReport sweep_c(const SignedGraph& graph, int c_lo, int c_hi, const SolverConfig& cfg, EdgeTally tally) {
    cfg.validate();
    if (c_lo > c_hi)
        throw ParameterError("empty community-count range");
    if (c_lo < 1 || static_cast<std::size_t>(c_hi) > graph.size())
        throw ParameterError("community-count range must lie within [1, n]");

    const JnmfProblem problem(split_adjacency(graph), build_weight_mask(graph, cfg.high_weight, cfg.low_weight));
    const auto span = static_cast<std::size_t>(c_hi - c_lo + 1);
    const auto restarts = static_cast<std::size_t>(cfg.restarts);

    struct Cell {
        SolverResult result;
        double density = 0.0;
    };
    auto cells = parallel_map(
        span * restarts,
        [&](std::size_t idx) {
            const int c = c_lo + static_cast<int>(idx / restarts);
            const int r = static_cast<int>(idx % restarts);
            SolverConfig local = cfg;
            local.c = c;
            Cell cell;
            cell.result = fit_restart(problem, local, sweep_seed(cfg.seed, c, r));
            cell.density = partition_density(graph, hard_assign(cell.result.state), tally).penalized;
            return cell;
        },
        cfg.threads);

    SweepReport report;
    for (std::size_t ci = 0; ci < span; ++ci) {
        SweepEntry entry;
        entry.c = c_lo + static_cast<int>(ci);
        std::size_t best = ci * restarts;
        for (std::size_t r = 0; r < restarts; ++r) {
            const auto& cell = cells[ci * restarts + r];
            entry.densities.push_back(cell.density);
            if (cell.result.final_objective() < cells[best].result.final_objective())
                best = ci * restarts + r;
        }
        const double k = static_cast<double>(restarts);
        entry.mean_density = std::accumulate(entry.densities.begin(), entry.densities.end(), 0.0) / k;
        if (restarts > 1) {
            double ss = 0.0;
            for (double d : entry.densities)
                ss += (d - entry.mean_density) * (d - entry.mean_density);
            entry.std_density = std::sqrt(ss / (k - 1.0));
        }
        entry.best = std::move(cells[best].result);
        report.per_c.push_back(std::move(entry));
    }

    std::size_t winner = 0;
    for (std::size_t i = 1; i < report.per_c.size(); ++i)
        if (report.per_c[i].mean_density > report.per_c[winner].mean_density)
            winner = i;
    report.selected_c = report.per_c[winner].c;
    report.selected_partition = hard_assign(report.per_c[winner].best.state);
    return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "# jnmf-sweep v1 selected_c=" << report.selected_c << "\n";
    out << "c,mean_density,std_density\n";
    for (const auto& e : report.per_c)
        out << e.c << ',' << format_double(e.mean_density) << ',' << format_double(e.std_density) << '\n';
}

} // namespace jnmf
