#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = std::string(GRASSCLIQUE_BIN) + " " + args + " > " + out_path +
                            " 2> cli_test_stderr.tmp";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

}  // namespace

TEST_CASE("count prints the q-binomial record") {
    const RunResult res = run("count --q 2 --n 6 --k 3");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j.at("grassmannian") == 1395);
    CHECK(j.at("star_size") == 15);
    CHECK(j.at("top_size") == 15);
}

TEST_CASE("analyze emits the full record and exit code 0 on agreement") {
    const RunResult res = run("analyze --q 4 --n 4 --k 2 --matrix '1 1 1 1'");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j.at("classification").at("kind") == "Star");
    CHECK(j.at("classification").at("equals_top") == true);
    CHECK(j.at("agree") == true);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run("analyze --q 2 --n 4 --k 2 --matrix '1 2'").exit_code == 2);
    CHECK(run("analyze --q 4 --n 5 --k 2 --matrix '1 1 1 1'").exit_code == 2);
    CHECK(run("count --q 6 --n 4 --k 2").exit_code == 2);
    CHECK(run("analyze --q 3 --n 4 --k 3 --matrix '1 0 0 1; 0 1 0 1'").exit_code == 2);
}

TEST_CASE("census respects the guard environment variable") {
    const RunResult guarded =
        run("census --q 2 --n 5 --k 3 --out cli_test_census.tmp");
    CHECK(guarded.exit_code == 0);

    setenv("GRASSCLIQUE_GUARD", "10", 1);
    const RunResult refused =
        run("census --q 2 --n 5 --k 3 --out cli_test_census.tmp");
    CHECK(refused.exit_code == 2);
    const RunResult forced =
        run("census --q 2 --n 5 --k 3 --force --out cli_test_census.tmp");
    CHECK(forced.exit_code == 0);
    unsetenv("GRASSCLIQUE_GUARD");

    std::ifstream in("cli_test_census.tmp");
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at("summary").at("mismatches") == 0);
    std::remove("cli_test_census.tmp");
}

TEST_CASE("census csv output") {
    const RunResult res = run("census --q 3 --n 4 --k 2 --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.stdout_text.rfind("s,c,class_sizes,", 0) == 0);
}

TEST_CASE("graph subcommand") {
    const RunResult res = run("graph --q 2 --n 5 --k 3");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j.at("vertices") == 15);
    CHECK(j.at("components") == 1);
}

TEST_CASE("matrix file input") {
    {
        std::ofstream out("cli_test_matrix.tmp");
        out << "1 1 1 1\n";
    }
    const RunResult res = run("analyze --q 4 --n 4 --k 2 --matrix-file cli_test_matrix.tmp");
    CHECK(res.exit_code == 0);
    std::remove("cli_test_matrix.tmp");
    CHECK(run("analyze --q 4 --n 4 --k 2 --matrix-file does_not_exist.tmp").exit_code == 2);
}

TEST_CASE("modulus override") {
    const RunResult res = run("count --q 8 --modulus 1,0,1,1 --n 4 --k 2");
    CHECK(res.exit_code == 0);
    CHECK(run("count --q 8 --modulus 1,1,1,1 --n 4 --k 2").exit_code == 2);
}
