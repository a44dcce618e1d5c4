#include "jnmf/experiment.hpp"

#include "jnmf/errors.hpp"
#include "jnmf/evaluation.hpp"
#include "jnmf/io.hpp"
#include "jnmf/model_selection.hpp"
#include "jnmf/parallel.hpp"

#include <cmath>
#include <ostream>

namespace jnmf {

Curve parse_curve(std::string_view name) {
    if (name == "sg1")
        return Curve::sg1;
    if (name == "slfr1")
        return Curve::slfr1;
    if (name == "sg2")
        return Curve::sg2;
    if (name == "slfr2")
        return Curve::slfr2;
    throw ParameterError("unknown curve '" + std::string(name) + "'");
}

std::string_view curve_name(Curve curve) {
    switch (curve) {
    case Curve::sg1:
        return "sg1";
    case Curve::slfr1:
        return "slfr1";
    case Curve::sg2:
        return "sg2";
    case Curve::slfr2:
        return "slfr2";
    }
    return "";
}

Selection parse_selection(std::string_view name) {
    if (name == "fixed")
        return Selection::fixed;
    if (name == "sweep")
        return Selection::sweep;
    throw ParameterError("unknown selection mode '" + std::string(name) + "'");
}

std::string_view selection_name(Selection mode) { return mode == Selection::fixed ? "fixed" : "sweep"; }

ExperimentConfig default_experiment(Curve curve) {
    ExperimentConfig cfg;
    cfg.curve = curve;
    for (int i = 0; i <= 10; ++i)
        cfg.p_in_grid.push_back(i / 10.0);
    for (int i = 1; i <= 9; ++i)
        cfg.mu_grid.push_back(i / 10.0);
    cfg.p_plus_grid = {0.0, 0.25, 0.5};
    cfg.p_minus_grid = {0.0, 0.25, 0.5};
    cfg.sg.p_in = 0.8;
    cfg.slfr.mu = 0.2;
    return cfg;
}

TrialOutcome detect_and_score(const LabeledGraph& g, Selection mode, int sweep_lo, int sweep_hi,
                              const SolverConfig& solver) {
    Partition detected;
    if (mode == Selection::fixed) {
        SolverConfig cfg = solver;
        cfg.c = static_cast<int>(g.truth.communities());
        detected = hard_assign(fit(g.graph, cfg).state);
    } else {
        auto [lo, hi] = default_c_range(g.graph.size());
        if (sweep_lo > 0)
            lo = sweep_lo;
        if (sweep_hi > 0)
            hi = sweep_hi;
        detected = sweep_c(g.graph, lo, hi, solver).selected_partition;
    }
    return {nmi(g.truth, detected), static_cast<int>(detected.communities())};
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t grid_point, int trial) {
    return base + 1000003u * grid_point + 101u * static_cast<std::uint64_t>(trial);
}

namespace {

std::vector<std::vector<double>> grid_points(const ExperimentConfig& cfg, std::vector<std::string>& variables) {
    std::vector<std::vector<double>> points;
    switch (cfg.curve) {
    case Curve::sg1:
        variables = {"p_in"};
        for (double v : cfg.p_in_grid)
            points.push_back({v});
        break;
    case Curve::slfr1:
        variables = {"mu"};
        for (double v : cfg.mu_grid)
            points.push_back({v});
        break;
    case Curve::sg2:
    case Curve::slfr2:
        variables = {"p_plus", "p_minus"};
        for (double pp : cfg.p_plus_grid)
            for (double pm : cfg.p_minus_grid)
                points.push_back({pp, pm});
        break;
    }
    if (points.empty())
        throw ParameterError("experiment grid is empty");
    return points;
}

LabeledGraph generate_point(const ExperimentConfig& cfg, const std::vector<double>& point, std::uint64_t seed) {
    switch (cfg.curve) {
    case Curve::sg1: {
        SgConfig sg = cfg.sg;
        sg.p_in = point[0];
        sg.p_plus = sg.p_minus = 0.0;
        sg.seed = seed;
        return generate_sg(sg);
    }
    case Curve::sg2: {
        SgConfig sg = cfg.sg;
        sg.p_plus = point[0];
        sg.p_minus = point[1];
        sg.seed = seed;
        return generate_sg(sg);
    }
    case Curve::slfr1: {
        SlfrConfig lfr = cfg.slfr;
        lfr.mu = point[0];
        lfr.p_plus = lfr.p_minus = 0.0;
        lfr.seed = seed;
        return generate_slfr(lfr);
    }
    case Curve::slfr2: {
        SlfrConfig lfr = cfg.slfr;
        lfr.p_plus = point[0];
        lfr.p_minus = point[1];
        lfr.seed = seed;
        return generate_slfr(lfr);
    }
    }
    throw ParameterError("unknown curve");
}

std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs)
        mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs)
        ss += (x - mean) * (x - mean);
    const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    return {mean, sd};
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1)
        throw ParameterError("trials must be at least 1");
    cfg.solver.validate();
    ExperimentResult result;
    const auto points = grid_points(cfg, result.variables);
    const auto trials = static_cast<std::size_t>(cfg.trials);

    SolverConfig solver = cfg.solver;
    solver.threads = 1;
    auto outcomes = parallel_map(
        points.size() * trials,
        [&](std::size_t idx) {
            const auto g = idx / trials;
            const auto t = static_cast<int>(idx % trials);
            const auto seed = trial_seed(cfg.seed, g, t);
            SolverConfig local = solver;
            local.seed = seed + 500009u;
            return detect_and_score(generate_point(cfg, points[g], seed), cfg.selection, cfg.sweep_lo, cfg.sweep_hi,
                                    local);
        },
        cfg.threads);

    for (std::size_t g = 0; g < points.size(); ++g) {
        ExperimentRow row;
        row.point = points[g];
        std::vector<double> nmis, cs;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto& o = outcomes[g * trials + t];
            row.trials.push_back(o);
            nmis.push_back(o.nmi);
            cs.push_back(o.detected_c);
        }
        std::tie(row.mean_nmi, row.std_nmi) = mean_and_std(nmis);
        std::tie(row.mean_c, row.std_c) = mean_and_std(cs);
        result.rows.push_back(std::move(row));
    }
    return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result) {
    out << "# jnmf-experiment v1 curve=" << curve_name(cfg.curve) << " selection=" << selection_name(cfg.selection)
        << " trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
    for (const auto& v : result.variables)
        out << v << ',';
    out << "mean_nmi,std_nmi,mean_c,std_c\n";
    for (const auto& row : result.rows) {
        for (double v : row.point)
            out << format_double(v) << ',';
        out << format_double(row.mean_nmi) << ',' << format_double(row.std_nmi) << ',' << format_double(row.mean_c)
            << ',' << format_double(row.std_c) << '\n';
    }
}

} // namespace jnmf
