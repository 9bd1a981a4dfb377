#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "erl/realize.hpp"
#include "erl/serialize.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run(const std::string& args) {
    std::string cmd = std::string(RELREAL_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("gen prints the paper listings") {
    CommandResult r = run("gen --name s3_fix --terms 15");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,3,1,3,1,9,1,3,1,3,1,9,1,3,1\n");
}

TEST_CASE("transform renders exact fractions") {
    CommandResult r = run("transform --dir orb --terms 1,2,3,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1/2") != std::string::npos);
}

TEST_CASE("orb piped into fix reproduces the input") {
    CommandResult r = run("transform --dir orb --terms 2,4,8,16,32,64 | " +
                          std::string(RELREAL_BINARY) + " transform --dir fix --terms -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2,4,8,16,32,64\n");
}

TEST_CASE("check exit codes encode the verdict") {
    CHECK(run("check --mode relative --terms 0,-2,0,-2,0,-8").exit_code == 0);
    CHECK(run("check --mode exact --terms 1,2,3,4").exit_code == 1);
    CHECK(run("check --mode exact --terms not,a,sequence").exit_code == 2);
    CHECK(run("check --mode bogus --terms 1").exit_code == 2);
    CommandResult r = run("check --mode exact --terms 1,2,3,4");
    CHECK(r.output.find("rejected") != std::string::npos);
    CHECK(r.output.find("1/2") != std::string::npos);
}

TEST_CASE("decompose prints the sparse table") {
    CommandResult r = run("decompose --orb -1,1,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a[1,2] = 1") != std::string::npos);
    CHECK(r.output.find("coefficients: -1,1,0,0") != std::string::npos);
    CHECK(run("decompose --terms 0,1").exit_code == 1);
}

TEST_CASE("realize emits a verifiable serialized triple") {
    std::string path = temp_path("relreal_cli_triple.json");
    CommandResult r = run("realize --terms -1,1,-1,1,-1,1 --horizon 6 --emit " + path + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("equivariant: pass") != std::string::npos);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    erl::RealizationTriple triple = erl::parse_triple(text);
    CHECK(erl::verify_factor(triple).all_pass());
    std::remove(path.c_str());
}

TEST_CASE("classify reads b-files") {
    std::string path = temp_path("relreal_cli_bfile.txt");
    {
        std::ofstream out(path);
        out << "# mersenne counts\n";
        for (int n = 1; n <= 10; ++n) {
            out << n << " " << ((1L << n) - 1) << "\n";
        }
    }
    CommandResult r = run("classify --bfile " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("exactly-realizable") != std::string::npos);

    {
        std::ofstream out(path);
        out << "1 0\n2 1\n";
    }
    CHECK(run("classify --bfile " + path).exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("gen --name s3_fix").exit_code == 2);
    CHECK(run("classify --bfile /no/such/file").exit_code == 2);
    CHECK(run("gen --name penrose_diff_fix --terms 99").exit_code == 2);
}
