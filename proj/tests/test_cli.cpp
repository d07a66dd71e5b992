#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ilink::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "ilink_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Cli, BuildWritesFileAndPrintsFVector) {
    auto path = (scratch() / "n1_2.cx").string();
    auto r = run({"build", "N1", "--n", "2", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "f-vector: (7, 21, 20)\n");
    std::ifstream in(path);
    EXPECT_EQ(ilink::read_complex(in), ilink::standard_complex(ilink::StandardName::N1, 2));
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST(Cli, BuildMinusMatchesShippedFixture) {
    auto r = run({"build", "N2", "--n", "1", "--minus", "a1^0 a1^1"});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(fx("n2_1_minus_a1^0a1^1.cx"));
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(r.out.substr(0, ss.str().size()), ss.str());
}

TEST(Cli, VkfSeededIsOddAndByteIdentical) {
    auto a = run({"vkf", "SIGMA", "--n", "1", "--seed", "7", "--bound", "1000"});
    auto b = run({"vkf", "SIGMA", "--n", "1", "--seed", "7", "--bound", "1000"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["total_mod2"], 1);
}

TEST(Cli, AuditFixtureReportsWitness) {
    auto r = run({"audit", "N3", "--n", "1", "--config", fx("n3_1.pts"), "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_FALSE(j["witnesses"].empty());
    auto text = run({"audit", "N3", "--n", "1", "--config", fx("n3_1.pts"), "--format", "text"});
    EXPECT_NE(text.out.find("status: PASS"), std::string::npos);
}

TEST(Cli, SeededAuditSearchesForAnEmbedding) {
    auto r = run({"audit", "N2", "--n", "2", "--seed", "3", "--bound", "20", "--restarts", "500"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, CrosscheckAndPairs) {
    EXPECT_EQ(run({"crosscheck", "N1", "--n", "1", "--config", fx("n1_1.pts")}).code, 0);
    auto p = run({"pairs", "N3", "--n", "2", "--format", "text"});
    EXPECT_EQ(std::count(p.out.begin(), p.out.end(), '\n'), 4);
    auto full = run({"pairs", "N3", "--n", "2", "--full", "--format", "text"});
    EXPECT_EQ(std::count(full.out.begin(), full.out.end(), '\n'), 22);
}

TEST(Cli, LinklessExitCodes) {
    EXPECT_EQ(run({"linkless-verify", fx("n3_1_minus_a3a4.cx"), "--n", "1", "--config", fx("n3_1.pts")}).code, 0);
    EXPECT_EQ(run({"linkless-verify", "N3", "--n", "1", "--config", fx("n3_1.pts")}).code, 1);
    EXPECT_EQ(run({"linkless-search", "N1", "--n", "1", "--seed", "1", "--restarts", "50"}).code, 1);
    auto out = (scratch() / "found.pts").string();
    auto r = run({"linkless-search", fx("n1_1_minus_a0.cx"), "--n", "1", "--seed", "1", "--restarts", "50", "--out",
                  out});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run({"linkless-verify", fx("n1_1_minus_a0.cx"), "--n", "1", "--config", out}).code, 0);
}

TEST(Cli, CheckEmbeddingAndLk) {
    EXPECT_EQ(run({"check-embedding", "N1", "--n", "1", "--config", fx("n1_1.pts")}).code, 0);
    EXPECT_EQ(run({"check-embedding", "SIGMA", "--n", "1", "--config", fx("n1_1.pts")}).code, 1);
    auto lk = run({"lk", "N1", "--n", "1", "--config", fx("n1_1.pts"), "--apexes", "5"});
    EXPECT_EQ(lk.code, 0);
    EXPECT_EQ(nlohmann::json::parse(lk.out)["total_mod2"], 1);
}

TEST(Cli, LkHonoursApexEntry) {
    auto path = (scratch() / "apex.pts").string();
    std::ifstream in(fx("n1_1.pts"));
    std::stringstream ss;
    ss << in.rdbuf() << "@apex 37/1 -41/1\n";
    std::ofstream(path) << ss.str();
    auto r = run({"lk", "N1", "--n", "1", "--config", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["total_mod2"], 1);
}

TEST(Cli, SampleIsReproducible) {
    auto a = run({"sample", "JOIN3", "--n", "2", "--seed", "9", "--bound", "50"});
    EXPECT_EQ(a.out, run({"sample", "JOIN3", "--n", "2", "--seed", "9", "--bound", "50"}).out);
    auto cfg = ilink::read_config(a.out);
    EXPECT_EQ(cfg.dimension(), 4);
    EXPECT_EQ(cfg.size(), 9U);
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
    EXPECT_EQ(run({"vkf", "SIGMA", "--bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"audit", "N1", "--n", "1", "--config", "/nonexistent.pts"}).code, 2);
    EXPECT_EQ(run({"vkf", "N1", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"vkf", "SIGMA", "--n", "1", "--format", "xml"}).code, 2);
    auto bad = (scratch() / "bad.pts").string();
    std::ofstream(bad) << "config d=2 seed=manual\na0 1/0 1\n";
    auto r = run({"check-embedding", "SIGMA", "--n", "1", "--config", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DegenerateVkfExitsTwo) {
    auto path = (scratch() / "degenerate.pts").string();
    std::ofstream(path) << "config d=2 seed=manual\na0 0 10\na1 10 3\na2 6 -8\na3 -6 -8\na4 5 13/2\n";
    EXPECT_EQ(run({"vkf", "SIGMA", "--n", "1", "--config", path}).code, 2);
}

TEST(Cli, FixturesSelftestPasses) {
    auto r = run({"fixtures-selftest", "--fixtures", FIXTURES_DIR});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find(" 0 failures"), std::string::npos);
}
