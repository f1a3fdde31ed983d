#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ckfree/graph6.hpp"
#include "ckfree/planar_code.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(CKFREE_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    CliRun r{-1, {}};
    if (!p) return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, p)) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "ckfree_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, LemmaCheck) {
    const CliRun r = run("lemma-check --i-min 2 --i-max 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2,7,7,7,6,6,PASS"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("3,16,14,14,12,12,PASS"), std::string::npos) << r.out;
}

TEST(Cli, VerifyConstruction) {
    const CliRun r = run("verify -n 20 -k 13");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("circumference: 12\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("verdict: C_k-free"), std::string::npos);

    const CliRun j = run("verify -n 20 -k 13 --mode both --json");
    ASSERT_EQ(j.code, 0);
    const auto arr = nlohmann::json::parse(j.out);
    ASSERT_EQ(arr.size(), 2u);
    EXPECT_EQ(arr[0]["circumference"], 12);
    EXPECT_EQ(arr[1]["mode"], "brute");
    EXPECT_EQ(arr[1]["circumference"], 12);
    EXPECT_EQ(arr[0]["verdict"], true);
}

TEST(Cli, VerifyFindsCycle) {
    const auto t2 = scratch("t2.g6");
    ASSERT_EQ(run("gen-t -i 2 -o " + t2.string()).code, 0);
    const CliRun r = run("verify --input " + t2.string() + " -k 7 --mode brute");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("contains C_k"), std::string::npos);
}

TEST(Cli, VerifyInconclusiveUnderTinyBudget) {
    EXPECT_EQ(run("verify -n 40 -k 25 --nodes 3").code, 4);
    EXPECT_EQ(run("verify -n 40 -k 25 --nodes 3 --lemma").code, 0);
}

TEST(Cli, BudgetFromEnvironment) {
    const std::string cmd = "CKFREE_BUDGET_NODES=3 " + std::string(CKFREE_CLI) + " verify -n 40 -k 25 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 4);
}

TEST(Cli, Bounds) {
    const CliRun r = run("bounds --k-min 7 --k-max 14 -n 100");
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "n,k,i,s,exact_edges,thm2_lower,conj1,lan_song_slope,chain_ok");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.rfind(',') + 1), "true") << line;
    }
    EXPECT_EQ(rows, 8);
}

TEST(Cli, GenerateAndReadBack) {
    const auto planar = scratch("h20.pc"), g6 = scratch("h20.g6");
    ASSERT_EQ(run("gen-h -n 20 -k 13 -o " + planar.string()).code, 0);
    ASSERT_EQ(run("gen-h -n 20 -k 13 -o " + g6.string()).code, 0);
    const auto plan = nlohmann::json::parse(slurp(planar.string() + ".plan.json"));
    EXPECT_EQ(plan["s"], 4);
    EXPECT_EQ(plan["i"], 2);
    EXPECT_EQ(plan["edges"], 51);
    EXPECT_EQ(plan["last_block_order"], 5);

    const auto rec = ckfree::decode_planar(slurp(planar));
    EXPECT_EQ(rec.graph.size(), 51u);
    std::string g6_text = slurp(g6);
    EXPECT_EQ(ckfree::decode_graph6(g6_text), rec.graph.abstract());

    // Hubs come from the labels of the planar file; the .g6 file needs them explicitly.
    EXPECT_EQ(run("verify --input " + planar.string() + " -k 13").code, 0);
    EXPECT_EQ(run("verify --input " + g6.string() + " -k 13").code, 2);
    EXPECT_EQ(run("verify --input " + g6.string() + " -k 13 --hubs 0,1").code, 0);
    const CliRun c = run("circumference --input " + g6.string());
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("circumference: 12\n"), std::string::npos);
}

TEST(Cli, GenerateFormats) {
    const CliRun t = run("gen-t -i 1 -f g6");
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "C~\n");
    const CliRun d = run("gen-t -i 2 -f dot");
    EXPECT_EQ(d.out.rfind("graph T2 {", 0), 0u);
    const CliRun p = run("gen-t -i 2");
    EXPECT_EQ(ckfree::decode_planar(p.out).graph.order(), 7u);
}

TEST(Cli, ErrorCodes) {
    EXPECT_EQ(run("gen-h -n 20 -k 6").code, 2);
    EXPECT_EQ(run("gen-h -n 10 -k 25").code, 2);
    EXPECT_EQ(run("gen-t --bogus").code, 2);
    EXPECT_EQ(run("").code, 2);
    const auto bad = scratch("bad.g6");
    std::ofstream(bad) << "C~~";
    EXPECT_EQ(run("circumference --input " + bad.string()).code, 3);
    EXPECT_EQ(run("--help").code, 0);
}
