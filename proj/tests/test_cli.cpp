#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string command = std::string(JNMF_CLI_PATH) + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("jnmf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const std::string kData = JNMF_DATA_DIR;

} // namespace

TEST_F(Cli, DetectSupremeCourtSweep) {
    const auto run = run_cli("detect " + kData + "/supreme_court.edges --sweep 1..6 --partition " + path("p.txt"));
    ASSERT_EQ(run.status, 0);
    const auto summary = nlohmann::json::parse(run.out);
    EXPECT_EQ(summary["selected_c"], 2);
    EXPECT_EQ(summary["mode"], "sweep");
    EXPECT_EQ(summary["sweep"].size(), 6u);
    const auto groups = summary["partition"].get<std::vector<std::vector<std::string>>>();
    EXPECT_EQ(groups, (std::vector<std::vector<std::string>>{{"1", "2", "3", "4"}, {"5", "6", "7", "8", "9"}}));
    EXPECT_EQ(slurp(path("p.txt")), "1 0\n2 0\n3 0\n4 0\n5 1\n6 1\n7 1\n8 1\n9 1\n");
}

TEST_F(Cli, DetectFixedOnPlantedCliques) {
    std::ofstream edges(path("cliques.edges"));
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            edges << "n" << i << " n" << j << ' ' << ((i < 5) == (j < 5) ? 1 : -1) << '\n';
    edges.close();
    const auto run = run_cli("detect " + path("cliques.edges") + " --c 2");
    ASSERT_EQ(run.status, 0);
    const auto summary = nlohmann::json::parse(run.out);
    EXPECT_EQ(summary["mode"], "fixed");
    const auto groups = summary["partition"].get<std::vector<std::vector<std::string>>>();
    EXPECT_EQ(groups, (std::vector<std::vector<std::string>>{{"n0", "n1", "n2", "n3", "n4"}, {"n5", "n6", "n7", "n8", "n9"}}));
}

TEST_F(Cli, DetectIsByteIdenticalOnRerun) {
    const std::string args = "detect " + kData + "/gahuku_gama.edges --sweep 1..5 --seed 9 --density-csv ";
    const auto a = run_cli(args + path("a.csv") + " --partition " + path("a.part"));
    const auto b = run_cli(args + path("b.csv") + " --partition " + path("b.part"));
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("a.part")), slurp(path("b.part")));
}

TEST_F(Cli, GenerateSgWritesFilesDeterministically) {
    const std::string flags = "generate sg --c 4 --n 30 --k 16 --p-in 0.8 --seed 3";
    const auto a = run_cli(flags + " --edges " + path("a.edges") + " --truth " + path("a.truth"));
    const auto b = run_cli(flags + " --edges " + path("b.edges") + " --truth " + path("b.truth"));
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(nlohmann::json::parse(a.out)["nodes"], 120);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(path("a.edges")), slurp(path("b.edges")));
    EXPECT_EQ(slurp(path("a.truth")), slurp(path("b.truth")));
}

TEST_F(Cli, GenerateSlfrDefaults) {
    const auto run = run_cli("generate slfr --seed 2 --edges " + path("g.edges") + " --truth " + path("g.truth"));
    ASSERT_EQ(run.status, 0);
    const auto stats = nlohmann::json::parse(run.out);
    EXPECT_EQ(stats["nodes"], 1000);
    for (int size : stats["community_sizes"].get<std::vector<int>>()) {
        EXPECT_GE(size, 20);
        EXPECT_LE(size, 60);
    }
}

TEST_F(Cli, ExperimentCsvIsDeterministic) {
    const std::string flags = "experiment sg1 --p-in-grid 1.0,0.9 --trials 2 --restarts 2 --seed 5 --output ";
    ASSERT_EQ(run_cli(flags + path("a.csv")).status, 0);
    ASSERT_EQ(run_cli(flags + path("b.csv")).status, 0);
    const auto text = slurp(path("a.csv"));
    EXPECT_EQ(text, slurp(path("b.csv")));
    EXPECT_NE(text.find("p_in,mean_nmi,std_nmi,mean_c,std_c\n1,1,0,4,0\n"), std::string::npos) << text;
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("").status, 1);
    EXPECT_EQ(run_cli("detect").status, 1);
    EXPECT_EQ(run_cli("detect " + kData + "/supreme_court.edges --c 2 --sweep 1..3").status, 1);
    EXPECT_EQ(run_cli("detect " + kData + "/supreme_court.edges --c 20").status, 1);
    EXPECT_EQ(run_cli("detect " + kData + "/supreme_court.edges --sweep 3").status, 1);
    EXPECT_EQ(run_cli("detect " + path("missing.edges")).status, 2);
    std::ofstream(path("bad.edges")) << "a b 0\n";
    EXPECT_EQ(run_cli("detect " + path("bad.edges")).status, 2);
    EXPECT_EQ(run_cli("generate sg --k 500 --edges " + path("x") + " --truth " + path("y")).status, 1);
    EXPECT_EQ(run_cli("experiment sg9").status, 1);
}
