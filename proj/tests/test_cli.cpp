// Drives the built CLI binary end to end: output, formats, exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(GWCYCLE_CLI_PATH) +
                      " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("gw-fourpoint prints the quoted value") {
    auto r = run("gw-fourpoint --space Q3 --degree 2 --insertions L0,L0,L1,L1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("gw-npoint with json output") {
    auto r = run("gw-npoint --space Q5 --degree 1 --insertions H1,H5,H4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"value\":\"4\"}\n");
}

TEST_CASE("class emits the documented JSON schema") {
    auto r = run("class --space Q3 --degree 2 --insertions H3,H3,H2,H1,H1 --n 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"n\":5") != std::string::npos);
    CHECK(r.out.find("\"basis\":[\"d13\"") != std::string::npos);
    auto csv = run("class --space Q3 --degree 2 --insertions H3,H3,H2,H1,H1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("basis,coeff\n", 0) == 0);
}

TEST_CASE("qh-mult human output") {
    auto r = run("qh-mult --space Q3 -a H3 -b H3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4") != std::string::npos);
    CHECK(r.out.find("q^2") != std::string::npos);
}

TEST_CASE("fcurve-deg runs") {
    auto r = run("fcurve-deg --space Q6 --degree 2 --insertions H1,H6,Xi1,Xi1,Xi1,Xi1 "
                 "--fcurve 'F{3|4|5|1,2,6}'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("nef-check on a computed class") {
    auto r = run("nef-check --space Q5 --degree 4 --insertions H1,H5,H5,H5,H5,H5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"nef\":true") != std::string::npos);
}

TEST_CASE("exit codes distinguish parse and domain errors") {
    auto parse_err = run("gw-fourpoint --space Q3 --degree 2");
    CHECK(parse_err.exit_code == 2); // missing required flag
    auto domain_err = run("gw-fourpoint --space Q3 --degree 2 --insertions H3,H3,H2");
    CHECK(domain_err.exit_code == 1); // three insertions
    auto bad_class = run("gw-npoint --space Q3 --degree 1 --insertions H7,H3,H2");
    CHECK(bad_class.exit_code == 1);
    auto bad_space = run("gw-npoint --space Z3 --degree 1 --insertions H1,H2,H3");
    CHECK(bad_space.exit_code == 2);
    auto unknown_flag = run("gw-npoint --bogus 1");
    CHECK(unknown_flag.exit_code == 2);
}

TEST_CASE("pushforward subcommand") {
    auto r = run("pushforward --space P3 --degree 2 --insertions H2,H2,H2,H2,H2,H2,H1 "
                 "--forget 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("basis,coeff\n", 0) == 0);
}

TEST_CASE("nef-check accepts a user ray table") {
    std::string path = "/tmp/gwcycle_test_rays.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"n\":6,\"rays\":{\"R1\":[1,0,1,1,0,1,1,0,1,0,0,0,2,0,0,0]}}", f);
        fclose(f);
    }
    auto r = run("nef-check --space Q5 --degree 4 --insertions H1,H5,H5,H5,H5,H5 --rays " + path +
                 " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"R1\":\"64\"") != std::string::npos);
    // Same through the environment variable.
    auto env = run("nef-check --space Q5 --degree 4 --insertions H1,H5,H5,H5,H5,H5 --format json",
                   "GWCYCLE_RAYS=" + path);
    CHECK(env.exit_code == 0);
    CHECK(env.out.find("\"R1\":\"64\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("threads flag preserves results") {
    auto seq = run("class --space Q5 --degree 4 --insertions H2,H4,H5,H5,H5,H5 --format csv");
    auto par = run("--threads 4 class --space Q5 --degree 4 --insertions H2,H4,H5,H5,H5,H5 "
                   "--format csv");
    CHECK(seq.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(seq.out == par.out);
}

TEST_CASE("verify prints one line per check") {
    auto r = run("verify");
    CHECK((r.exit_code == 0 || r.exit_code == 1));
    CHECK(r.out.find("criterion 1") != std::string::npos);
    CHECK(r.out.find("criterion 10") != std::string::npos);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}
