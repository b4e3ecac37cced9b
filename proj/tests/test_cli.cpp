#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_app.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = 0;
    std::string out;
};

RunResult run_capture(const std::vector<std::string>& args) {
    std::stringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    RunResult result;
    result.exit_code = hpdcover::cli::run(args);
    std::cout.rdbuf(old);
    result.out = captured.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cli: bracket prints the pinned line") {
    const auto r = run_capture({"bracket", "--alpha", "0.1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.850000 <= inf C <= 0.859091; legacy 0.818182\n");
}

TEST_CASE("cli: constants echo the worked example") {
    const auto r = run_capture({"constants", "--family", "normal", "--alpha", "0.1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d1 = 1.6448536269514715") != std::string::npos);
    CHECK(r.out.find("2d0 = 2.670355472237873") != std::string::npos);
    CHECK(r.out.find("a = 0") != std::string::npos);
}

TEST_CASE("cli: interval prints endpoints and posterior mass") {
    const auto r = run_capture(
        {"interval", "--family", "laplace", "--alpha", "0.05", "--x", "-3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("l = 0\n") != std::string::npos);
    CHECK(r.out.find("u = 2.995732273553") != std::string::npos);
    CHECK(r.out.find("posterior_mass = 0.95") != std::string::npos);
}

TEST_CASE("cli: curve writes the CSV schema with the Laplace jump rows") {
    const auto path = temp_file("hpdcover_cli_curve.csv");
    const auto r = run_capture({"curve", "--family", "laplace", "--alpha", "0.05",
                                "--theta-max", "10", "--points", "400", "--out",
                                path.string()});
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("theta,coverage,region,side\n", 0) == 0);
    CHECK(csv.find(",left\n") != std::string::npos);
    CHECK(csv.find(",right\n") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("cli: identical arguments produce byte-identical output") {
    const auto a = temp_file("hpdcover_cli_rep_a.csv");
    const auto b = temp_file("hpdcover_cli_rep_b.csv");
    const std::vector<std::string> args_a{"curve", "--family", "normal", "--alpha", "0.1",
                                          "--points", "150", "--out", a.string()};
    std::vector<std::string> args_b = args_a;
    args_b.back() = b.string();
    CHECK(run_capture(args_a).exit_code == 0);
    // Worker count must not show in the output: points stay ordered by theta.
    setenv("HPDCOVER_THREADS", "3", 1);
    CHECK(run_capture(args_b).exit_code == 0);
    unsetenv("HPDCOVER_THREADS");
    CHECK(slurp(a) == slurp(b));
    fs::remove(a);
    fs::remove(b);

    const auto mc1 = run_capture({"mc", "--family", "laplace", "--alpha", "0.1",
                                  "--theta", "2.0", "--n", "20000", "--seed", "9"});
    setenv("HPDCOVER_THREADS", "2", 1);  // counter-based draws: chunking-proof
    const auto mc2 = run_capture({"mc", "--family", "laplace", "--alpha", "0.1",
                                  "--theta", "2.0", "--n", "20000", "--seed", "9"});
    unsetenv("HPDCOVER_THREADS");
    CHECK(mc1.exit_code == 0);
    CHECK(mc1.out == mc2.out);
}

TEST_CASE("cli: mc reports the deviation from the exact value") {
    const auto r = run_capture({"mc", "--family", "normal", "--alpha", "0.1", "--theta",
                                "1.0", "--n", "50000", "--seed", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mean = ") != std::string::npos);
    CHECK(r.out.find("std_error = ") != std::string::npos);
    CHECK(r.out.find("exact = ") != std::string::npos);
    CHECK(r.out.find("deviation_sigmas = ") != std::string::npos);
}

TEST_CASE("cli: audit passes for the shipped logconcave families") {
    for (const char* fam : {"normal", "laplace", "polyexp"}) {
        const auto r = run_capture({"audit", "--family", fam, "--alpha", "0.1",
                                    "--points", "120"});
        INFO(fam, "\n", r.out);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("audit_overall = pass") != std::string::npos);
    }
    // The normal report pins the minimum near 0.859 at theta near 2.67.
    const auto r = run_capture({"audit", "--family", "normal", "--alpha", "0.1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("audited_min = 0.859") != std::string::npos);
    CHECK(r.out.find("audited_argmin = 2.670") != std::string::npos);
}

TEST_CASE("cli: audit can emit a JSON report") {
    const auto path = temp_file("hpdcover_cli_audit.json");
    const auto r = run_capture({"audit", "--family", "normal", "--alpha", "0.05",
                                "--points", "80", "--out", path.string()});
    CHECK(r.exit_code == 0);
    const std::string json = slurp(path);
    CHECK(json.find("\"audits\"") != std::string::npos);
    CHECK(json.find("\"new_lower_bound\"") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_capture({"bogus-subcommand"}).exit_code == 2);
    CHECK(run_capture({"interval", "--family", "normal"}).exit_code == 2);  // missing --x
    CHECK(run_capture({"constants", "--family", "cauchy"}).exit_code == 2);
    CHECK(run_capture({"constants", "--family", "normal", "--alpha", "2.0"}).exit_code == 2);
    // Student-t: interval is refused without the override, allowed with it;
    // the tail limit diverges, which is a numeric failure.
    CHECK(run_capture({"interval", "--family", "student:3", "--alpha", "0.05", "--x",
                       "-10"}).exit_code == 2);
    CHECK(run_capture({"interval", "--family", "student:3", "--alpha", "0.05", "--x",
                       "-10", "--allow-nonlogconcave"}).exit_code == 0);
    CHECK(run_capture({"constants", "--family", "student:3", "--alpha", "0.05"}).exit_code ==
          3);
}
