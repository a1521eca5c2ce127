#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(QNL_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "qnl_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(cli, nested_clique_t3_and_distance) {
    const auto path = scratch("t3.txt");
    ASSERT_EQ(run("graph nested-clique --t 3 --sigma cyclic --out " + path.string()).status, 0);
    EXPECT_EQ(slurp(path),
              "n=9\n011100010\n101010001\n110001100\n100011100\n010101010\n001110001\n001100011\n100010101\n"
              "010001110\n");
    auto d = run("distance " + path.string() + " --kind binary");
    EXPECT_EQ(d.status, 0);
    EXPECT_EQ(d.out.rfind("binary distance 4 (exact)", 0), 0u);
}

TEST(cli, clique_epc_and_apc) {
    const auto path = scratch("k4.txt");
    ASSERT_EQ(run("graph clique --t 4 --out " + path.string()).status, 0);
    EXPECT_EQ(run("distance " + path.string() + " --kind epc").out.rfind("epc distance 4 (exact)", 0), 0u);
    EXPECT_EQ(run("distance " + path.string() + " --kind apc").out.rfind("apc distance 2 (exact)", 0), 0u);
}

TEST(cli, budget_limited_exit_code) {
    const auto path = scratch("t5.txt");
    ASSERT_EQ(run("graph nested-clique --t 5 --out " + path.string()).status, 0);
    auto r = run("distance " + path.string() + " --kind binary --mode bounded --budget 2");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("(bound only)"), std::string::npos);
}

TEST(cli, random_regular_is_deterministic) {
    auto a = run("graph random-regular --n 56 --degree 15 --seed 7");
    auto b = run("graph random-regular --n 56 --degree 15 --seed 7");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("graph random-regular --n 5 --degree 3").status, 2);
}

TEST(cli, verify_suites) {
    auto ok = run("verify epc-db --n 8 --samples 20 --seed 1");
    EXPECT_EQ(ok.status, 0);
    EXPECT_NE(ok.out.find("\"failures\": []"), std::string::npos);
    EXPECT_EQ(run("verify nope").status, 2);
    EXPECT_EQ(run("verify eq322 --n 9").status, 2);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("distance --kind nope x").status, 2);
    EXPECT_EQ(run("distance /nonexistent/file").status, 2);
}

TEST(cli, code_bform_and_convert) {
    const auto code = scratch("code.txt");
    std::ofstream(code) << "n=2 k=2\n10|01\n01|10\n";
    auto b = run("code bform " + code.string());
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(b.out, "# row_swap 1 2\nn=2\n01\n10\n");
    auto gf4 = run("code convert " + code.string() + " --format gf4");
    EXPECT_EQ(gf4.out, "n=2 k=2\nwW\nWw\n");
}

TEST(cli, spectra_dumps) {
    const auto path = scratch("k2.txt");
    ASSERT_EQ(run("graph clique --t 2 --out " + path.string()).status, 0);
    EXPECT_EQ(run("spectra wht " + path.string()).out, "mask,re,im,norm2\n00,2,0,4\n10,2,0,4\n01,2,0,4\n11,-2,0,4\n");
    EXPECT_EQ(run("spectra par " + path.string() + " --set ih").out, "par_ih 2\n");
    auto ihn = run("spectra ihn " + path.string() + " --mu 00 --c 10");
    EXPECT_EQ(ihn.status, 0);
    EXPECT_EQ(ihn.out.rfind("mask,re,im,norm2\n", 0), 0u);
}

TEST(cli, alpha_compare_histogram_sums) {
    const auto path = scratch("k5k5.txt");
    ASSERT_EQ(run("graph nested-clique --t 5 --out " + path.string()).status, 0);
    auto r = run("alpha-compare --graph " + path.string() + " --samples 30 --seed 2 --name K5K5");
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line;
    std::size_t total = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("name,", 0) == 0) continue;
        total += std::stoul(line.substr(line.rfind(',') + 1));
        EXPECT_EQ(line.rfind("K5K5,25,8,5,", 0), 0u);
    }
    EXPECT_EQ(total, 30u);
    EXPECT_EQ(run("alpha-compare --graph " + path.string() + " --samples 30 --seed 2 --name K5K5").out, r.out);
}
