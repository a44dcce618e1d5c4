#include "jnmf/errors.hpp"
#include "jnmf/experiment.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace jnmf;

namespace {

ExperimentConfig small_sg1() {
    auto cfg = default_experiment(Curve::sg1);
    cfg.p_in_grid = {1.0, 0.9};
    cfg.trials = 2;
    cfg.solver.restarts = 3;
    cfg.seed = 4;
    return cfg;
}

} // namespace

TEST(Experiment, NamesRoundTrip) {
    for (auto c : {Curve::sg1, Curve::slfr1, Curve::sg2, Curve::slfr2})
        EXPECT_EQ(parse_curve(curve_name(c)), c);
    for (auto s : {Selection::fixed, Selection::sweep})
        EXPECT_EQ(parse_selection(selection_name(s)), s);
    EXPECT_THROW(parse_curve("sg3"), ParameterError);
    EXPECT_THROW(parse_selection("best"), ParameterError);
}

TEST(Experiment, DefaultGrids) {
    const auto sg1 = default_experiment(Curve::sg1);
    ASSERT_EQ(sg1.p_in_grid.size(), 11u);
    EXPECT_EQ(sg1.p_in_grid.front(), 0.0);
    EXPECT_EQ(sg1.p_in_grid.back(), 1.0);
    EXPECT_EQ(default_experiment(Curve::slfr1).mu_grid.size(), 9u);
    const auto sg2 = default_experiment(Curve::sg2);
    EXPECT_EQ(sg2.p_plus_grid, (std::vector<double>{0.0, 0.25, 0.5}));
    EXPECT_EQ(sg2.p_minus_grid, (std::vector<double>{0.0, 0.25, 0.5}));
}

TEST(Experiment, SeparableSgIsRecoveredExactly) {
    const auto cfg = small_sg1();
    const auto result = run_experiment(cfg);
    ASSERT_EQ(result.rows.size(), 2u);
    EXPECT_EQ(result.variables, (std::vector<std::string>{"p_in"}));
    EXPECT_EQ(result.rows[0].point, (std::vector<double>{1.0}));
    EXPECT_DOUBLE_EQ(result.rows[0].mean_nmi, 1.0);
    EXPECT_EQ(result.rows[0].std_nmi, 0.0);
    EXPECT_EQ(result.rows[0].mean_c, 4.0);
    EXPECT_EQ(result.rows[0].trials.size(), 2u);
}

TEST(Experiment, CsvIsDeterministicAndThreadIndependent) {
    auto cfg = small_sg1();
    std::ostringstream a, b;
    write_experiment_csv(a, cfg, run_experiment(cfg));
    cfg.threads = 3;
    write_experiment_csv(b, cfg, run_experiment(cfg));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().rfind("# jnmf-experiment v1 curve=sg1 selection=fixed trials=2 seed=4\n"
                            "p_in,mean_nmi,std_nmi,mean_c,std_c\n",
                            0),
              0u)
        << a.str();
}

TEST(Experiment, Sg2GridHasBothNoiseVariables) {
    auto cfg = default_experiment(Curve::sg2);
    cfg.p_plus_grid = {0.0};
    cfg.p_minus_grid = {0.0, 0.5};
    cfg.trials = 1;
    cfg.solver.restarts = 2;
    const auto result = run_experiment(cfg);
    EXPECT_EQ(result.variables, (std::vector<std::string>{"p_plus", "p_minus"}));
    ASSERT_EQ(result.rows.size(), 2u);
    EXPECT_EQ(result.rows[1].point, (std::vector<double>{0.0, 0.5}));
}

TEST(Experiment, RejectsEmptyGridAndZeroTrials) {
    auto cfg = small_sg1();
    cfg.p_in_grid.clear();
    EXPECT_THROW(run_experiment(cfg), ParameterError);
    cfg = small_sg1();
    cfg.trials = 0;
    EXPECT_THROW(run_experiment(cfg), ParameterError);
}

TEST(Experiment, TrialSeedsAreDistinct) {
    EXPECT_NE(trial_seed(0, 0, 1), trial_seed(0, 1, 0));
    EXPECT_EQ(trial_seed(7, 2, 3), 7u + 2u * 1000003u + 3u * 101u);
}
