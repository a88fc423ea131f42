// End-to-end runs of the command-line tool against temporary files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pminor/io.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using testutil::sk;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("pminor_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    std::string cmd = std::string(PMINOR_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + (work_dir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

fs::path write_matrix(const std::string& name, const pminor::SkewMatrix& a) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    pminor::write_skew_matrix(out, a);
    return p;
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

const pminor::SkewMatrix kCyclic = sk(4, {1, 1, 1, 1, -1, 1});
const pminor::SkewMatrix kTransitive = sk(4, {1, 1, 1, 1, 1, 1});

}  // namespace

TEST_CASE("pm emits minors with decimal string values") {
    fs::path a = write_matrix("cyc.mat", kCyclic);
    RunResult r = run("pm --order 4 " + a.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["order"] == 4);
    REQUIRE(j["minors"].size() == 1);
    CHECK(j["minors"][0]["subset"] == json({1, 2, 3, 4}));
    CHECK(j["minors"][0]["value"] == "9");

    RunResult all = run("pm " + a.string());
    REQUIRE(all.exit_code == 0);
    CHECK(json::parse(all.out)["fingerprints"].size() == 5);
}

TEST_CASE("clans lists trivial flags") {
    fs::path z = write_matrix("zero3.mat", sk(3, {0, 0, 0}));
    RunResult r = run("clans " + z.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["clans"].size() == 8);
    int trivial = 0;
    for (const auto& c : j["clans"]) trivial += c["trivial"] == true;
    CHECK(trivial == 5);  // empty, full, three singletons
}

TEST_CASE("invert of the full set emits the negated matrix") {
    fs::path a = write_matrix("cyc2.mat", kCyclic);
    RunResult r = run("invert --subset 1,2,3,4 " + a.string());
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    CHECK(pminor::read_skew_matrix(in) == kCyclic.negated());

    RunResult bad = run("invert --subset 1,2 " + a.string() +
                        " --require-clan");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("equiv and verify round trip through certificate files") {
    fs::path a = write_matrix("a.mat", kCyclic);
    RunResult same = run("equiv " + a.string() + " " + a.string());
    REQUIRE(same.exit_code == 0);
    json sj = json::parse(same.out);
    CHECK(sj["status"] == "EQUIVALENT");
    CHECK(sj["certificate"]["steps"].empty());

    fs::path b = write_matrix("nega.mat", kCyclic.negated());
    RunResult neg = run("equiv " + a.string() + " " + b.string());
    REQUIRE(neg.exit_code == 0);
    json nj = json::parse(neg.out);
    REQUIRE(nj["status"] == "EQUIVALENT");
    fs::path cert = write_file("cert.json", nj["certificate"].dump());
    RunResult ver = run("verify " + a.string() + " " + cert.string() + " " +
                        b.string());
    REQUIRE(ver.exit_code == 0);
    CHECK(json::parse(ver.out)["valid"] == true);

    fs::path t = write_matrix("trans.mat", kTransitive);
    RunResult diff = run("equiv " + a.string() + " " + t.string());
    REQUIRE(diff.exit_code == 0);
    json dj = json::parse(diff.out);
    CHECK(dj["status"] == "NOT_EQUIVALENT");
    CHECK(dj["witness"]["subset"] == json({1, 2, 3, 4}));
    CHECK(dj["witness"]["minor_a"] == "9");
    CHECK(dj["witness"]["minor_b"] == "1");
}

TEST_CASE("similar reports witnesses and none") {
    fs::path a = write_matrix("s_a.mat", kCyclic);
    fs::path b = write_matrix("s_b.mat", kCyclic.negated());
    RunResult r = run("similar " + a.string() + " " + b.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["transposed"] == true);

    pminor::SkewMatrix block = sk(2, {1});
    std::vector<pminor::Int> ones{pminor::Int(1), pminor::Int(1)};
    auto [ca, cb] = pminor::rank_one_coupled_pair(block, block, ones, ones);
    fs::path fa = write_matrix("c_a.mat", ca);
    fs::path fb = write_matrix("c_b.mat", cb);
    RunResult none = run("similar " + fa.string() + " " + fb.string());
    REQUIRE(none.exit_code == 0);
    CHECK(none.out == "none\n");
}

TEST_CASE("loewy and triples subcommands") {
    pminor::SkewMatrix block = sk(2, {1});
    std::vector<pminor::Int> ones{pminor::Int(1), pminor::Int(1)};
    auto [ca, cb] = pminor::rank_one_coupled_pair(block, block, ones, ones);
    fs::path fa = write_matrix("l_a.mat", ca);
    RunResult lw = run("loewy " + fa.string());
    REQUIRE(lw.exit_code == 0);
    json lj = json::parse(lw.out);
    CHECK(lj["holds"] == false);
    CHECK(lj["witness"] == json({1, 2}));

    fs::path a = write_matrix("t_a.mat", kCyclic);
    fs::path t = write_matrix("t_b.mat", kTransitive);
    RunResult tr = run("triples " + a.string() + " " + t.string() + " --json");
    REQUIRE(tr.exit_code == 0);
    json tj = json::parse(tr.out);
    CHECK(tj["first_mismatch"] == json({2, 3, 4}));
}

TEST_CASE("scan summarises groups and orbits") {
    RunResult r = run("scan --n 3 --entries pm1 --exhaustive");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 8);
    CHECK(j["complete"] == true);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("input errors exit with code 1") {
    fs::path bad = write_file("bad.mat", "2\n0 1\n1 0\n");
    CHECK(run("pm --order 2 " + bad.string()).exit_code == 1);
    CHECK(run("clans " + (work_dir() / "missing.mat").string()).exit_code ==
          1);
    fs::path garbled = write_file("garbled.mat", "2\n0 x\n-1 0\n");
    CHECK(run("pm " + garbled.string()).exit_code == 1);
}
