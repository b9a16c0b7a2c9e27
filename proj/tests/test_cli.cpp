// Exercises the installed CLI binary end to end; the path comes from the
// SWKB_CLI_BIN environment variable set by the build.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("SWKB_CLI_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SWKB_CLI_BIN must point at the swkb-lab binary");
    return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv_body(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, body;
    while (std::getline(in, line))
        if (line.rfind("#", 0) != 0) body += line + "\n";
    return body;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("catalog list") {
        const RunResult r = run("catalog list");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("harmonic") != std::string::npos);
        CHECK(r.output.find("perturbed_harmonic") != std::string::npos);
        CHECK(r.output.find("NonConventional") != std::string::npos);
    }

    TEST_CASE("catalog list --json") {
        const RunResult r = run("catalog list --json");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("\"entries\"") != std::string::npos);
        CHECK(r.output.find("\"constraints\"") != std::string::npos);
    }

    TEST_CASE("catalog lookup failure exits 2") {
        CHECK(run("catalog list --name nosuch").exit_code == 2);
    }

    TEST_CASE("verify passes for conventional entries") {
        CHECK(run("verify --potential harmonic --n 0..10").exit_code == 0);
        CHECK(run("verify --potential coulomb --n 0..0").exit_code == 0);
    }

    TEST_CASE("verify fails for the negative control") {
        CHECK(run("verify --potential perturbed_harmonic --n 1..5").exit_code == 1);
    }

    TEST_CASE("verify rejects bad input") {
        CHECK(run("verify --potential nosuch").exit_code == 2);
        CHECK(run("verify --potential morse --set a=1").exit_code == 2);
        CHECK(run("verify --potential harmonic --set omega=abc").exit_code == 2);
    }

    TEST_CASE("si-check exit codes") {
        CHECK(run("si-check --potential harmonic").exit_code == 0);
        CHECK(run("si-check --potential perturbed_harmonic").exit_code == 1);
        CHECK(run("si-check --potential coulomb --x-lo 5 --x-hi 1").exit_code == 2);
        CHECK(run("si-check --potential coulomb --x-lo -3 --x-hi 10").exit_code == 2);
    }

    TEST_CASE("sweep constancy") {
        CHECK(run("sweep --potential harmonic --n 2 --hbar 0.5,1,2").exit_code == 0);
        CHECK(run("sweep --potential harmonic --n 0 --hbar 0.5,1,2").exit_code == 0);
        CHECK(run("sweep --potential perturbed_harmonic --n 2 --hbar 0.5,1,2").exit_code == 1);
    }

    TEST_CASE("spectrum table") {
        const RunResult r = run("spectrum --potential morse");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("5.00000000") != std::string::npos);
        CHECK(r.output.find("8.00000000") != std::string::npos);
    }

    TEST_CASE("oracle-compare misconfigurations") {
        CHECK(run("oracle-compare --potential harmonic --eigen-count 0").exit_code == 2);
        const RunResult r = run(
            "oracle-compare --potential morse --eigen-count 3 --box-lo -2 --box-hi 6 "
            "--grid-points 2000");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("enlarging the box") != std::string::npos);
    }

    TEST_CASE("csv reports are deterministic below the header") {
        // the second run fans out across a different thread count; the
        // reduce order must not depend on the schedule
        const std::string path1 = "cli_test_run1.csv";
        const std::string path2 = "cli_test_run2.csv";
        CHECK(run("verify --potential harmonic --n 0..4 --csv " + path1).exit_code == 0);
        CHECK(run("verify --potential harmonic --n 0..4 --csv " + path2,
                  "SWKB_LAB_THREADS=3 ")
                  .exit_code == 0);
        const std::string b1 = csv_body(slurp(path1));
        const std::string b2 = csv_body(slurp(path2));
        CHECK(!b1.empty());
        CHECK(b1 == b2);
        CHECK(b1.find("name,class,n,E_n,x1,x2,integral,residual,converged") != std::string::npos);
        std::remove(path1.c_str());
        std::remove(path2.c_str());
    }

    TEST_CASE("plot data samples the integrand") {
        const std::string path = "cli_test_plot.csv";
        CHECK(run("verify --potential harmonic --n 2..2 --plot-data " + path).exit_code == 0);
        const std::string body = csv_body(slurp(path));
        CHECK(body.find("n,x,integrand") != std::string::npos);
        CHECK(std::count(body.begin(), body.end(), '\n') > 500);
        std::remove(path.c_str());
    }
}
