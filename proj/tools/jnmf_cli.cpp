// jnmf: community detection in signed networks by joint NMF.
//
//   jnmf detect EDGES [--c N | --sweep LO..HI] [solver flags] [--partition FILE]
//   jnmf generate sg|slfr [generator flags] --edges FILE --truth FILE
//   jnmf experiment sg1|slfr1|sg2|slfr2 [grid flags] [--output FILE]
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.

#include "jnmf/benchmarks.hpp"
#include "jnmf/errors.hpp"
#include "jnmf/experiment.hpp"
#include "jnmf/io.hpp"
#include "jnmf/model_selection.hpp"
#include "jnmf/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kNumericalError = 3;

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw jnmf::ParameterError("range must look like LO..HI, got '" + text + "'");
    try {
        std::size_t used_lo = 0, used_hi = 0;
        const int lo = std::stoi(text.substr(0, dots), &used_lo);
        const int hi = std::stoi(text.substr(dots + 2), &used_hi);
        if (used_lo != dots || used_hi != text.size() - dots - 2)
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw jnmf::ParameterError("range must look like LO..HI, got '" + text + "'");
    }
}

void add_solver_flags(CLI::App& cmd, jnmf::SolverConfig& cfg) {
    cmd.add_option("--restarts", cfg.restarts, "Random initializations per fit")->capture_default_str();
    cmd.add_option("--max-iter", cfg.max_iter, "Maximum update cycles")->capture_default_str();
    cmd.add_option("--tol", cfg.tol, "Relative objective change to stop at")->capture_default_str();
    cmd.add_option("--seed", cfg.seed, "Base random seed")->capture_default_str();
    cmd.add_option("--high-weight", cfg.high_weight, "Mask weight on observed links")->capture_default_str();
    cmd.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void emit(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-")
        std::cout << contents;
    else
        jnmf::write_text_file(path, contents);
}

json communities_json(const jnmf::Partition& part, const std::vector<std::string>& labels) {
    json out = json::array();
    for (const auto& members : part.members()) {
        json group = json::array();
        for (int v : members)
            group.push_back(labels[static_cast<std::size_t>(v)]);
        out.push_back(std::move(group));
    }
    return out;
}

struct DetectArgs {
    std::string edges;
    int c = 0;
    std::string sweep;
    std::string partition_out;
    std::string density_csv;
    bool weighted_density = false;
    jnmf::SolverConfig solver;
};

int run_detect(const DetectArgs& args) {
    const auto graph = jnmf::load_edge_list(args.edges);
    const auto tally = args.weighted_density ? jnmf::EdgeTally::absolute_weight : jnmf::EdgeTally::count;

    json summary;
    summary["nodes"] = graph.size();
    jnmf::Partition part;
    jnmf::SolverResult best;
    if (args.c > 0) {
        jnmf::SolverConfig cfg = args.solver;
        cfg.c = args.c;
        best = jnmf::fit(graph, cfg);
        part = jnmf::hard_assign(best.state);
        summary["mode"] = "fixed";
        summary["selected_c"] = args.c;
    } else {
        auto [lo, hi] = args.sweep.empty() ? jnmf::default_c_range(graph.size()) : parse_range(args.sweep);
        const auto report = jnmf::sweep_c(graph, lo, hi, args.solver, tally);
        part = report.selected_partition;
        for (const auto& e : report.per_c)
            if (e.c == report.selected_c)
                best = e.best;
        summary["mode"] = "sweep";
        summary["selected_c"] = report.selected_c;
        json rows = json::array();
        for (const auto& e : report.per_c)
            rows.push_back({{"c", e.c},
                            {"mean_density", e.mean_density},
                            {"std_density", e.std_density},
                            {"best_objective", e.best.final_objective()}});
        summary["sweep"] = std::move(rows);
        if (!args.density_csv.empty()) {
            std::ostringstream csv;
            jnmf::write_sweep_csv(csv, report);
            emit(args.density_csv, csv.str());
        }
    }

    const auto density = jnmf::partition_density(graph, part, tally);
    summary["communities"] = part.communities();
    summary["objective"] = best.final_objective();
    summary["iterations"] = best.iterations_used;
    summary["converged"] = best.converged;
    summary["weighted_density"] = density.weighted_avg;
    summary["penalized_density"] = density.penalized;
    summary["partition"] = communities_json(part, graph.labels());

    if (!args.partition_out.empty()) {
        std::ostringstream out;
        jnmf::write_partition(out, part, graph.labels());
        emit(args.partition_out, out.str());
    }
    std::cout << summary.dump(2) << '\n';
    return 0;
}

json stats_json(const jnmf::LabeledGraph& g) {
    const auto stats = jnmf::graph_stats(g.graph);
    return {{"nodes", stats.nodes},
            {"positive_edges", stats.positive_edges},
            {"negative_edges", stats.negative_edges},
            {"mean_abs_degree", stats.mean_abs_degree},
            {"communities", g.truth.communities()},
            {"community_sizes", g.truth.sizes()}};
}

int write_generated(const jnmf::LabeledGraph& g, const std::string& edges, const std::string& truth) {
    std::ostringstream e, t;
    jnmf::write_edge_list(e, g.graph);
    jnmf::write_partition(t, g.truth, g.graph.labels());
    jnmf::write_text_file(edges, e.str());
    jnmf::write_text_file(truth, t.str());
    std::cout << stats_json(g).dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection in signed networks by joint nonnegative matrix factorization"};
    app.require_subcommand(1);

    DetectArgs detect;
    auto* detect_cmd = app.add_subcommand("detect", "Detect communities in an edge-list file");
    detect_cmd->add_option("edges", detect.edges, "Edge-list file (u v w per line)")->required();
    auto* c_opt = detect_cmd->add_option("--c", detect.c, "Fixed community count");
    auto* sweep_opt = detect_cmd->add_option("--sweep", detect.sweep, "Community-count range LO..HI");
    c_opt->excludes(sweep_opt);
    detect_cmd->add_option("--partition", detect.partition_out, "Write the partition file here ('-' for stdout)");
    detect_cmd->add_option("--density-csv", detect.density_csv, "Write the sweep density table here");
    detect_cmd->add_flag("--weighted-density", detect.weighted_density,
                         "Tally intra-community links by absolute weight");
    add_solver_flags(*detect_cmd, detect.solver);

    auto* generate_cmd = app.add_subcommand("generate", "Generate a benchmark graph with ground truth");
    generate_cmd->require_subcommand(1);
    std::string gen_edges, gen_truth;
    jnmf::SgConfig sg;
    auto* sg_cmd = generate_cmd->add_subcommand("sg", "Signed Girvan-Newman benchmark");
    sg_cmd->add_option("--c", sg.c, "Communities")->capture_default_str();
    sg_cmd->add_option("--n", sg.n, "Nodes per community")->capture_default_str();
    sg_cmd->add_option("--k", sg.k, "Average degree")->capture_default_str();
    sg_cmd->add_option("--p-in", sg.p_in, "Internal link fraction")->capture_default_str();
    sg_cmd->add_option("--p-plus", sg.p_plus, "Positive inter-link fraction")->capture_default_str();
    sg_cmd->add_option("--p-minus", sg.p_minus, "Negative intra-link fraction")->capture_default_str();
    sg_cmd->add_option("--seed", sg.seed, "Random seed")->capture_default_str();
    jnmf::SlfrConfig lfr;
    auto* lfr_cmd = generate_cmd->add_subcommand("slfr", "Signed LFR benchmark");
    lfr_cmd->add_option("--n", lfr.n, "Nodes")->capture_default_str();
    lfr_cmd->add_option("--k-avg", lfr.k_avg, "Average degree")->capture_default_str();
    lfr_cmd->add_option("--k-max", lfr.k_max, "Maximum degree")->capture_default_str();
    lfr_cmd->add_option("--lambda1", lfr.lambda1, "Degree exponent")->capture_default_str();
    lfr_cmd->add_option("--lambda2", lfr.lambda2, "Community-size exponent")->capture_default_str();
    lfr_cmd->add_option("--s-min", lfr.s_min, "Smallest community")->capture_default_str();
    lfr_cmd->add_option("--s-max", lfr.s_max, "Largest community")->capture_default_str();
    lfr_cmd->add_option("--mu", lfr.mu, "Mixing parameter")->capture_default_str();
    lfr_cmd->add_option("--p-plus", lfr.p_plus, "Positive inter-link fraction")->capture_default_str();
    lfr_cmd->add_option("--p-minus", lfr.p_minus, "Negative intra-link fraction")->capture_default_str();
    lfr_cmd->add_option("--seed", lfr.seed, "Random seed")->capture_default_str();
    for (auto* cmd : {sg_cmd, lfr_cmd}) {
        cmd->add_option("--edges", gen_edges, "Output edge-list file")->required();
        cmd->add_option("--truth", gen_truth, "Output ground-truth partition file")->required();
    }

    auto* exp_cmd = app.add_subcommand("experiment", "Run a benchmark curve and write NMI statistics as CSV");
    std::string curve_name = "sg1";
    std::string selection = "fixed";
    std::string exp_sweep;
    std::string exp_output;
    jnmf::ExperimentConfig exp = jnmf::default_experiment(jnmf::Curve::sg1);
    exp_cmd->add_option("curve", curve_name, "sg1 | slfr1 | sg2 | slfr2")->required();
    exp_cmd->add_option("--selection", selection, "fixed (true c) | sweep (density selection)")->capture_default_str();
    exp_cmd->add_option("--sweep", exp_sweep, "Community-count range LO..HI for --selection sweep");
    exp_cmd->add_option("--trials", exp.trials, "Graphs per grid point")->capture_default_str();
    exp_cmd->add_option("--p-in-grid", exp.p_in_grid, "sg1 grid")->delimiter(',');
    exp_cmd->add_option("--mu-grid", exp.mu_grid, "slfr1 grid")->delimiter(',');
    exp_cmd->add_option("--p-plus-grid", exp.p_plus_grid, "sg2/slfr2 grid")->delimiter(',');
    exp_cmd->add_option("--p-minus-grid", exp.p_minus_grid, "sg2/slfr2 grid")->delimiter(',');
    exp_cmd->add_option("--sg-c", exp.sg.c, "SG communities")->capture_default_str();
    exp_cmd->add_option("--sg-n", exp.sg.n, "SG nodes per community")->capture_default_str();
    exp_cmd->add_option("--sg-k", exp.sg.k, "SG average degree")->capture_default_str();
    exp_cmd->add_option("--p-in", exp.sg.p_in, "SG internal fraction for sg2")->capture_default_str();
    exp_cmd->add_option("--lfr-n", exp.slfr.n, "SLFR nodes")->capture_default_str();
    exp_cmd->add_option("--k-avg", exp.slfr.k_avg, "SLFR average degree")->capture_default_str();
    exp_cmd->add_option("--k-max", exp.slfr.k_max, "SLFR maximum degree")->capture_default_str();
    exp_cmd->add_option("--lambda1", exp.slfr.lambda1, "SLFR degree exponent")->capture_default_str();
    exp_cmd->add_option("--lambda2", exp.slfr.lambda2, "SLFR size exponent")->capture_default_str();
    exp_cmd->add_option("--s-min", exp.slfr.s_min, "SLFR smallest community")->capture_default_str();
    exp_cmd->add_option("--s-max", exp.slfr.s_max, "SLFR largest community")->capture_default_str();
    exp_cmd->add_option("--mu", exp.slfr.mu, "SLFR mixing for slfr2")->capture_default_str();
    exp_cmd->add_option("--output", exp_output, "CSV output file (default stdout)");
    add_solver_flags(*exp_cmd, exp.solver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (detect_cmd->parsed())
            return run_detect(detect);
        if (sg_cmd->parsed())
            return write_generated(jnmf::generate_sg(sg), gen_edges, gen_truth);
        if (lfr_cmd->parsed())
            return write_generated(jnmf::generate_slfr(lfr), gen_edges, gen_truth);
        if (exp_cmd->parsed()) {
            exp.curve = jnmf::parse_curve(curve_name);
            exp.selection = jnmf::parse_selection(selection);
            exp.seed = exp.solver.seed;
            exp.threads = exp.solver.threads;
            if (!exp_sweep.empty())
                std::tie(exp.sweep_lo, exp.sweep_hi) = parse_range(exp_sweep);
            const auto result = jnmf::run_experiment(exp);
            std::ostringstream csv;
            jnmf::write_experiment_csv(csv, exp, result);
            emit(exp_output, csv.str());
            return 0;
        }
    } catch (const jnmf::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const jnmf::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const jnmf::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}
