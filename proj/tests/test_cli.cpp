// Black-box exit-code and format contract tests for the command-line tool.
// The binary path arrives as argv[1] from ctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval ghat closed form") {
    RunResult r = run("eval ghat --a 1 --b 2 --n 2 --t 0.6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.18") != std::string::npos);
    CHECK(r.out.find("\"method\"") != std::string::npos);
}

TEST_CASE("eval pfq log-2 identity") {
    RunResult r = run("eval pfq --upper 1,1 --lower 2 --z -1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.6931471805599") != std::string::npos);
}

TEST_CASE("missing required flag exits 1") {
    RunResult r = run("eval ghat --a 1 --n 2");
    CHECK(r.exit_code == 1);
}

TEST_CASE("domain error exits 2") {
    // t outside (0,1]
    RunResult r = run("eval ghat --a 1 --b 2 --n 1 --t 1.5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify pass and failure exit codes") {
    RunResult ok = run("verify --suite connection --seed 7 --cases 5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"pass\":true") != std::string::npos);
    // an impossible tolerance demonstrates the failure path
    RunResult fail = run("verify --suite connection --seed 7 --cases 3 --suite-tol 1e-16");
    CHECK(fail.exit_code == 3);
    RunResult bad = run("verify --suite nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("determinism: identical flags and seed give identical bytes") {
    RunResult a = run("verify --suite eq29 --seed 11 --cases 4 --output csv");
    RunResult b = run("verify --suite eq29 --seed 11 --cases 4 --output csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("verify --suite eq29 --seed 12 --cases 4 --output csv");
    CHECK(a.out != c.out);
}

TEST_CASE("zeros CSV header contract") {
    RunResult r = run("zeros --a-hat 1 --b 1,1.5 --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("interval_lo,interval_hi,root,fprime,simple", 0) == 0);
    CHECK(r.out.find("4.4934094579") != std::string::npos);
    CHECK(r.out.find("7.7252518369") != std::string::npos);
}

TEST_CASE("zeros --strict exits 2 on hypothesis violation") {
    RunResult r = run("zeros --a-hat 2 --b 0.6,0.7 --strict");
    CHECK(r.exit_code == 2);
    RunResult soft = run("zeros --a-hat 2 --b 0.6,0.7");
    CHECK(soft.exit_code == 0);
    CHECK(soft.out.find("\"in_theorem\":false") != std::string::npos);
}

TEST_CASE("stabilize closed-form chain") {
    RunResult r = run("stabilize --a 1 --b 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"N\":0") != std::string::npos);
}

TEST_CASE("params file schema") {
    std::string path = "/tmp/meijerg_params_test.json";
    {
        std::ofstream out(path);
        out << R"({"a": [[1.0, 0.0]], "b": [[2.0, 0.0]], "n": 2})";
    }
    RunResult r = run("eval ghat --params-file " + path + " --t 0.6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.18") != std::string::npos);
    std::remove(path.c_str());
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-meijerg-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
