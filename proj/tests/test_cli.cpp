#include "linsvm/bench.hpp"
#include "linsvm/cli.hpp"
#include "linsvm/dataset.hpp"
#include "linsvm/model.hpp"

#include "test_support.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace linsvm;
using linsvm::test::read_file;
using linsvm::test::temp_dir;

namespace {

struct cli_result {
    int status;
    std::string out;
    std::string err;
};

cli_result run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return { status, out.str(), err.str() };
}

}  // namespace

TEST(Cli, GenDataIsDeterministicAndParses) {
    const temp_dir dir;
    const std::string a = (dir / "a.txt").string();
    const std::string b = (dir / "b.txt").string();
    ASSERT_EQ(run({ "gen-data", "--seed", "3", "--n", "150", "--d", "20", "--density", "0.2", "--noise", "0.1", "--out", a }).status, 0);
    ASSERT_EQ(run({ "gen-data", "--seed", "3", "--n", "150", "--d", "20", "--density", "0.2", "--noise", "0.1", "--out", b }).status, 0);
    EXPECT_EQ(read_file(a), read_file(b));
    EXPECT_EQ(load_libsvm(a).size(), 150u);
    EXPECT_EQ(run({ "train", "--data", a, "--solver", "baseline", "--c", "1" }).status, 0);
}

TEST(Cli, GenDataRejectsZeroDensity) {
    const temp_dir dir;
    const cli_result r = run({ "gen-data", "--density", "0", "--out", (dir / "x.txt").string() });
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("density"), std::string::npos);
}

TEST(Cli, TrainIsBitReproducible) {
    const temp_dir dir;
    const std::string data = (dir / "d.txt").string();
    save_libsvm(data, generate_synthetic({ 5, 300, 25, 0.3, 0.1 }));
    const std::vector<std::string> common{ "train", "--data", data, "--solver", "avsf", "--c", "1", "--epsilon", "0.01", "--seed", "7" };

    std::vector<std::string> first = common;
    first.insert(first.end(), { "--model-out", (dir / "m1.txt").string(), "--report-out", (dir / "r1.json").string() });
    std::vector<std::string> second = common;
    second.insert(second.end(), { "--model-out", (dir / "m2.txt").string(), "--report-out", (dir / "r2.json").string() });
    ASSERT_EQ(run(first).status, 0);
    ASSERT_EQ(run(second).status, 0);

    EXPECT_EQ(read_file(dir / "m1.txt"), read_file(dir / "m2.txt"));
    const auto r1 = nlohmann::json::parse(read_file(dir / "r1.json"));
    const auto r2 = nlohmann::json::parse(read_file(dir / "r2.json"));
    EXPECT_EQ(r1["steps"], r2["steps"]);
    EXPECT_EQ(r1["solver"], "avsf");
}

TEST(Cli, TrainReportOnSeparableData) {
    const temp_dir dir;
    const std::string data = (dir / "sep.txt").string();
    save_libsvm(data, generate_synthetic({ 2, 200, 10, 1.0, 0.0 }));
    for (const std::string solver : { "baseline", "avsf" }) {
        const cli_result r = run({ "train", "--data", data, "--solver", solver, "--c", "10", "--report-out", (dir / "r.json").string(),
                                   "--model-out", (dir / "m.txt").string() });
        ASSERT_EQ(r.status, 0) << r.err;
        const auto report = nlohmann::json::parse(read_file(dir / "r.json"));
        EXPECT_TRUE(report["converged"].get<bool>());
        EXPECT_LE(report["max_kkt_violation"].get<double>(), 2 * 0.01);
        EXPECT_EQ(report["epsilon"].get<double>(), 0.01);

        const cli_result p = run({ "predict", "--model", (dir / "m.txt").string(), "--data", data });
        ASSERT_EQ(p.status, 0);
        EXPECT_NE(p.out.find("accuracy"), std::string::npos);
    }
}

TEST(Cli, TrainFlagValidation) {
    const temp_dir dir;
    const std::string data = (dir / "d.txt").string();
    save_libsvm(data, generate_synthetic({ 1, 20, 5, 0.5, 0.1 }));

    cli_result r = run({ "train", "--data", data, "--epsilon", "0" });
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("epsilon"), std::string::npos);

    EXPECT_NE(run({ "train", "--data", data, "--c", "-1" }).status, 0);
    EXPECT_NE(run({ "train", "--data", data, "--solver", "smo" }).status, 0);
    EXPECT_NE(run({ "train", "--data", data, "--max-outer", "0" }).status, 0);
    EXPECT_NE(run({ "train", "--data", data, "--max-outer", "many" }).status, 0);
    EXPECT_NE(run({ "train", "--data", data, "--c", "abc" }).status, 0);
    EXPECT_NE(run({ "train" }).status, 0);
    EXPECT_NE(run({}).status, 0);
    EXPECT_EQ(run({ "train", "--data", data, "--max-outer", "2" }).status, 0);

    r = run({ "train", "--data", (dir / "missing.txt").string() });
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("missing.txt"), std::string::npos);
}

TEST(Cli, TrainReportsParseErrorsWithLine) {
    const temp_dir dir;
    const std::string data = (dir / "bad.txt").string();
    {
        std::ofstream out{ data };
        out << "+1 1:1\n-1 3:1 2:1\n";
    }
    const cli_result r = run({ "train", "--data", data });
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("line 2: non-increasing indices"), std::string::npos) << r.err;
}

TEST(Cli, PredictZeroModelAndUnseenFeatures) {
    const temp_dir dir;
    model m;
    m.solver = "baseline";
    m.weights = { 0.0, 0.0 };
    save_model(dir / "zero.txt", m);
    {
        std::ofstream out{ dir / "test.txt" };
        out << "-1 1:1\n+1 2:-3\n-1 7:2\n";
    }
    const cli_result r = run({ "predict", "--model", (dir / "zero.txt").string(), "--data", (dir / "test.txt").string(), "--predictions-out",
                               (dir / "pred.txt").string() });
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(read_file(dir / "pred.txt"), "+1\n+1\n+1\n");
    EXPECT_NE(r.out.find("(1/3)"), std::string::npos) << r.out;

    EXPECT_NE(run({ "predict", "--model", (dir / "none.txt").string(), "--data", (dir / "test.txt").string() }).status, 0);
}

TEST(Cli, PredictSeparableTrainingSetExactly) {
    const temp_dir dir;
    const std::string data = (dir / "sep.txt").string();
    save_libsvm(data, generate_synthetic({ 1, 100, 10, 1.0, 0.0 }));
    ASSERT_EQ(run({ "train", "--data", data, "--solver", "avsf", "--c", "1000", "--epsilon", "0.001", "--model-out", (dir / "m.txt").string() }).status, 0);
    const cli_result r = run({ "predict", "--model", (dir / "m.txt").string(), "--data", data });
    EXPECT_NE(r.out.find("accuracy 1 (100/100)"), std::string::npos) << r.out;
}

TEST(Cli, CompareWritesCsvAndTable) {
    const temp_dir dir;
    const std::string data = (dir / "grid.txt").string();
    save_libsvm(data, generate_synthetic({ 6, 200, 20, 0.3, 0.1 }));
    const std::string csv = (dir / "out.csv").string();
    const cli_result r = run({ "compare", "--data", data, "--c-grid", "0.1,10", "--epsilons", "0.01", "--repeats", "2", "--out", csv });
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("grid, epsilon = 0.01"), std::string::npos);

    std::istringstream lines{ read_file(csv) };
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, csv_header);
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        EXPECT_EQ(line.rfind("grid,", 0), 0u);
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
        ++rows;
    }
    EXPECT_EQ(rows, 4u);

    EXPECT_NE(run({ "compare", "--data", data, "--c-grid", "1,x" }).status, 0);
}

TEST(Cli, ReportedTimeCoversOnlyTheCoreLoop) {
    const dataset data = generate_synthetic({ 8, 2000, 100, 0.1, 0.1 });
    const solver_config config{ 10.0, 0.01 };
    const auto start = std::chrono::steady_clock::now();
    const solve_result r = run_solver(solver_kind::baseline, data, config);
    const double outside = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_GT(r.report.wall_time_seconds, 0.0);
    EXPECT_LE(r.report.wall_time_seconds, outside);
    // the final exact diagnostics are O(l d) each, far below the loop cost of this run
    EXPECT_GE(r.report.wall_time_seconds, 0.5 * outside);
}
