#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string command = std::string(SEQPROOF_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return r;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return std::string(SEQPROOF_TEST_DATA) + "/" + name; }

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / ("seqproof_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Cli, ProveInteractive) {
    const auto r = cli("prove-tqbf --in " + data("mixed3.qdimacs"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("claim: 2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("verdict: accept"), std::string::npos) << r.out;
}

TEST(Cli, FalseFormulaRejected) {
    const auto r = cli("prove-tqbf --in " + data("false2.qdimacs"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("reject"), std::string::npos) << r.out;
}

TEST(Cli, FsTranscriptRoundTripAndTamper) {
    const auto dir = scratch();
    const auto path = (dir / "mixed3.sp").string();
    EXPECT_EQ(cli("prove-tqbf --fs --in " + data("mixed3.qdimacs") + " --out " + path).code, 0);
    EXPECT_EQ(cli("verify-tqbf --in " + data("mixed3.qdimacs") + " --transcript " + path).code, 0);
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(-1, std::ios::end);
        f.put('\x7f');
    }
    EXPECT_EQ(cli("verify-tqbf --in " + data("mixed3.qdimacs") + " --transcript " + path).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(Cli, VdfPipeline) {
    const auto dir = scratch();
    const auto pp = (dir / "pp.bin").string();
    const auto proof = (dir / "proof.bin").string();
    const auto tr = (dir / "vdf.sp").string();
    auto r = cli("vdf setup --lambda 16 --log2t 10 --space 32 --seed 7 --out " + pp);
    ASSERT_EQ(r.code, 0) << r.out;
    r = cli("vdf eval --pp " + pp + " --input 10110");
    EXPECT_NE(r.out.find("y: 3926677954"), std::string::npos) << r.out;
    r = cli("vdf open --pp " + pp + " --input 10110 --challenge 1008 --proof " + proof);
    EXPECT_NE(r.out.find("qt: 2942913358"), std::string::npos) << r.out;
    EXPECT_EQ(cli("vdf verify --pp " + pp + " --input 10110 --output 3926677954 --challenge 1008 --proof " + proof).code, 0);
    EXPECT_EQ(cli("vdf verify --pp " + pp + " --input 10110 --output 3926677955 --challenge 1008 --proof " + proof).code, 1);
    r = cli("vdf eval --fs --pp " + pp + " --input 10110 --transcript " + tr);
    EXPECT_NE(r.out.find("t: 1011"), std::string::npos) << r.out;
    EXPECT_EQ(cli("vdf verify --fs --pp " + pp + " --input 10110 --transcript " + tr).code, 0);
    EXPECT_EQ(cli("vdf attack --pp " + pp + " --input 10110 --seed 3").code, 0);
    EXPECT_EQ(cli("vdf attack --fs --pp " + pp + " --input 10110 --seed 3").code, 0);
    std::filesystem::remove_all(dir);
}

TEST(Cli, SpaceHaltAndMinVars) {
    auto r = cli("spacehalt --machine " + data("m1.tm") + " --input 0010 --space 8");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("halts: yes"), std::string::npos) << r.out;
    r = cli("exp min-vars --T 9");
    EXPECT_NE(r.out.find("n: 3"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("prove-tqbf").code, 2);
    EXPECT_EQ(cli("vdf setup --lambda 16").code, 2);
    EXPECT_EQ(cli("bogus").code, 2);
}
