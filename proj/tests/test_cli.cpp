// Drives the command-line binary end to end: golden outputs, exit codes,
// spec-file round trips, and determinism. Takes the binary path and the
// shipped data directory as positional arguments.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
std::string g_data;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs `cmd`, captures the chosen stream, returns the process exit code.
RunResult run(const std::string& args, bool capture_stderr = false) {
    std::string cmd = g_cli + " " + args + (capture_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r;
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + "/" + name;
}

}  // namespace

TEST(Bernoulli, TableGoldens) {
    RunResult r = run("bernoulli 16");
    EXPECT_EQ(r.exit_code, 0);
    auto rows = lines_of(r.out);
    ASSERT_EQ(rows.size(), 17u);
    EXPECT_EQ(rows[0], "0 1");
    EXPECT_EQ(rows[1], "1 -1/2");
    EXPECT_EQ(rows[2], "2 1/6");
    EXPECT_EQ(rows[12], "12 -691/2730");
    EXPECT_EQ(rows[14], "14 7/6");
    EXPECT_EQ(rows[16], "16 -3617/510");
}

TEST(Bernoulli, UsageErrors) {
    EXPECT_EQ(run("bernoulli 31").exit_code, 2);
    EXPECT_EQ(run("bernoulli").exit_code, 2);
    EXPECT_EQ(run("bernoulli -1").exit_code, 2);
}

TEST(Goldberg, FirstCoefficients) {
    RunResult r = run("goldberg 2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("c_xi(1) = 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("c_eta(1) = 1\n"), std::string::npos);
    // two-letter patterns appear with both splits.
    EXPECT_NE(r.out.find("c_xi(1,1) = "), std::string::npos);
    EXPECT_NE(r.out.find("c_xi(2) = "), std::string::npos);
    EXPECT_EQ(run("goldberg 0").exit_code, 2);
    EXPECT_EQ(run("goldberg 13").exit_code, 2);
}

TEST(Bch, SeriesForms) {
    RunResult g = run("bch 2 goldberg");
    EXPECT_EQ(g.exit_code, 0);
    EXPECT_NE(g.out.find("1/2 [XY]\n"), std::string::npos);
    EXPECT_NE(g.out.find("1 X\n"), std::string::npos);
    EXPECT_NE(g.out.find("1 Y\n"), std::string::npos);

    RunResult a = run("bch 2 associative");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_NE(a.out.find("1/2 XY\n"), std::string::npos);
    EXPECT_NE(a.out.find("-1/2 YX\n"), std::string::npos);

    RunResult d = run("bch 3 dynkin");
    EXPECT_EQ(d.exit_code, 0);
    EXPECT_FALSE(d.out.empty());

    EXPECT_EQ(run("bch 2 fourier").exit_code, 2);
    EXPECT_EQ(run("bch 9 associative").exit_code, 2);
    EXPECT_EQ(run("bch 7 goldberg").exit_code, 2);
}

TEST(Star, HeisenbergGenerators) {
    RunResult r = run("star " + g_data + "/heisenberg.json P Q");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "P*Q + (1/2)z*E\n");

    RunResult v = run("star " + g_data + "/heisenberg.json P Q --verify");
    EXPECT_EQ(v.exit_code, 0);
    auto rows = lines_of(v.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "P*Q + (1/2)z*E");
    EXPECT_EQ(rows[1], "3-way agreement: OK");
}

TEST(Star, EvaluatedParameter) {
    RunResult r2 = run("star " + g_data + "/heisenberg.json P Q --z 2");
    EXPECT_EQ(r2.exit_code, 0);
    EXPECT_EQ(r2.out, "P*Q + E\n");
    RunResult rh = run("star " + g_data + "/heisenberg.json P Q --z 1/2");
    EXPECT_EQ(rh.exit_code, 0);
    EXPECT_EQ(rh.out, "P*Q + (1/4)*E\n");
    EXPECT_EQ(run("star " + g_data + "/heisenberg.json P Q --z bogus").exit_code, 2);
}

TEST(Star, ExpressionGrammar) {
    RunResult r =
        run("star " + g_data + "/heisenberg.json '2*P^2 + 1/3*Q' Q --verify");
    EXPECT_EQ(r.exit_code, 0);
    auto rows = lines_of(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "2*P^2*Q + 2z*P*E + (1/3)*Q^2");
    EXPECT_EQ(rows[1], "3-way agreement: OK");

    // abelian spec: plain symmetric product.
    RunResult ab = run("star " + g_data + "/abelian2.json 'x + y' y");
    EXPECT_EQ(ab.exit_code, 0);
    EXPECT_EQ(ab.out, "x*y + y^2\n");
}

TEST(Star, ParseAndValidationErrors) {
    RunResult bad = run("star " + g_data + "/heisenberg.json 'P +' Q", true);
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_NE(bad.out.find("position"), std::string::npos);

    RunResult unknown = run("star " + g_data + "/heisenberg.json R Q", true);
    EXPECT_EQ(unknown.exit_code, 2);
    EXPECT_NE(unknown.out.find("unknown basis label"), std::string::npos);

    EXPECT_EQ(run("star " + g_data + "/missing.json P Q").exit_code, 2);
}

TEST(Star, RejectsInvalidAlgebraFiles) {
    std::string p1 = temp_path("nonjacobi.json");
    {
        std::ofstream f(p1);
        f << R"({"dim": 3, "basis": ["a","b","c"], "brackets": [)"
          << R"({"i":"a","j":"b","result":{"a":"1"}},)"
          << R"({"i":"b","j":"c","result":{"b":"1"}}]})";
    }
    RunResult r1 = run("star " + p1 + " a b", true);
    EXPECT_EQ(r1.exit_code, 2);
    EXPECT_NE(r1.out.find("jacobi"), std::string::npos);

    std::string p2 = temp_path("duplabels.json");
    {
        std::ofstream f(p2);
        f << R"({"dim": 2, "basis": ["a","a"], "brackets": []})";
    }
    RunResult r2 = run("star " + p2 + " a a", true);
    EXPECT_EQ(r2.exit_code, 2);
    EXPECT_NE(r2.out.find("duplicate"), std::string::npos);

    std::string p3 = temp_path("badjson.json");
    {
        std::ofstream f(p3);
        f << "{ not json";
    }
    EXPECT_EQ(run("star " + p3 + " a a").exit_code, 2);
}

TEST(Verify, BchSuite) {
    RunResult r = run("verify bch");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("thompson_sum n=8 PASS\n"), std::string::npos);
    for (const auto& line : lines_of(r.out))
        EXPECT_TRUE(line.size() >= 4 && line.substr(line.size() - 4) == "PASS") << line;
}

TEST(Verify, StarSuiteBothAlgebras) {
    EXPECT_EQ(run("verify star " + g_data + "/so3.json").exit_code, 0);
    EXPECT_EQ(run("verify star " + g_data + "/abelian2.json").exit_code, 0);
}

TEST(Verify, HopfSuite) {
    RunResult r = run("verify hopf " + g_data + "/heisenberg.json");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("antipode-axiom"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, SeminormSuiteWithGrowth) {
    RunResult rh = run("verify seminorm " + g_data + "/heisenberg.json");
    EXPECT_EQ(rh.exit_code, 0) << rh.out;
    EXPECT_NE(rh.out.find("counterexample growth PASS\n"), std::string::npos);
    RunResult rs = run("verify seminorm " + g_data + "/so3.json");
    EXPECT_EQ(rs.exit_code, 0) << rs.out;
    EXPECT_NE(rs.out.find("counterexample growth PASS\n"), std::string::npos);
}

TEST(Verify, AllSuitesDefaultAlgebra) {
    RunResult r = run("verify all");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run("verify bogus").exit_code, 2);
}

TEST(Growth, CsvOutput) {
    std::string out = temp_path("growth.csv");
    RunResult r = run("growth heisenberg --R 0.5 --eps 0.1 --kmax 5 --out " + out);
    EXPECT_EQ(r.exit_code, 0);
    std::ifstream f(out);
    ASSERT_TRUE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    auto rows = lines_of(ss.str());
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "k,value,bound");
    EXPECT_EQ(rows[1].substr(0, 2), "1,");
    EXPECT_EQ(rows[5].substr(0, 2), "5,");

    RunResult s = run("growth so3 --R 0.5 --eps 0.2 --kmax 1");
    EXPECT_EQ(s.exit_code, 0);
    auto srows = lines_of(s.out);
    ASSERT_EQ(srows.size(), 2u);
    EXPECT_EQ(srows[0], "k,value,bound");

    EXPECT_EQ(run("growth heisenberg --R 1.2").exit_code, 2);
    EXPECT_EQ(run("growth torus").exit_code, 2);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
    std::string cmd = "star " + g_data + "/so3.json 'e1^2*e2' 'e2*e3' --verify";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    RunResult v1 = run("verify star " + g_data + "/heisenberg.json --seed 7");
    RunResult v2 = run("verify star " + g_data + "/heisenberg.json --seed 7");
    EXPECT_EQ(v1.out, v2.out);
    EXPECT_EQ(v1.exit_code, 0);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <cli-binary> <data-dir>\n");
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];
    return RUN_ALL_TESTS();
}
