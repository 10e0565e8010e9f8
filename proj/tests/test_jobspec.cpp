#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agcodes/jobspec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace agcodes;
namespace fs = std::filesystem;

namespace {

const char* kRank2Spec =
    "# interleaved demo over GF(5)\n"
    "rank: 2\n"
    "field: 5\n"
    "divisor: 1*(x) + 1*(x + 4) + 1*(x + 3) + 1*(x + 2) + 1*(x + 1)\n"
    "place: (inf); matrix: [[1/x^2, 0], [0, 1/x^2]]\n";

const char* kRank1Spec =
    "rank: 1\n"
    "field: 5\n"
    "divisor: 1*(x) + 1*(x + 4) + 1*(x + 3) + 1*(x + 2) + 1*(x + 1)\n"
    "place: (inf); matrix: [[1/x^2]]\n";

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("a spec file parses into the expected objects") {
    JobSpec spec = parse_jobspec(kRank2Spec);
    CHECK(spec.rank == 2);
    CHECK(spec.F->size() == 5);
    CHECK(spec.D.degree() == 5);
    CHECK(spec.g.rank() == 2);
    CHECK(degree(spec.g) == 4);
    CHECK(spec.g.support().size() == 1);
    CHECK(spec.g.support()[0].is_infinity());
}

TEST_CASE("printing and reparsing a spec is the identity") {
    JobSpec spec = parse_jobspec(kRank2Spec);
    std::string text = print_jobspec(spec);
    JobSpec back = parse_jobspec(text);
    CHECK(print_jobspec(back) == text);
    CHECK(back.D == spec.D);
    CHECK(back.g == spec.g);
}

TEST_CASE("parse errors carry the offending line") {
    CHECK_THROWS_AS(parse_jobspec("field: 5\ndivisor: 1*(x)\n"), parse_error);
    try {
        parse_jobspec("rank: 2\nfield: 5\ndivisor: 1*(x)\nplace: (inf); matrix: [[1/x]]\n");
        FAIL("row-count mismatch not caught");
    } catch (const parse_error& e) {
        CHECK(e.line() == 4);
    }
    try {
        parse_jobspec("rank: 1\nfield: 5\nwidth: 3\n");
        FAIL("unknown key not caught");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("width") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_jobspec("rank: 1\nfield: 5\ndivisor: 1*(x)\nnocolon\n"), parse_error);
}

TEST_CASE("the code driver writes generator and report files") {
    // the directory is deliberately absent: the driver must create it
    fs::path dir = fs::temp_directory_path() / "agcodes_jobspec_code" / "nested";
    fs::remove_all(dir.parent_path());
    JobSpec spec = parse_jobspec(kRank1Spec);
    RunOptions opt;
    opt.out_dir = dir.string();
    std::ostringstream log;
    int rc = run_code(spec, opt, log);
    CHECK(rc == 0);
    std::string gen = slurp(dir / "generator.txt");
    CHECK(gen.rfind("5 3 5 1 5\n", 0) == 0);
    std::string rep = slurp(dir / "report.txt");
    CHECK(rep.find("k: 3") != std::string::npos);
    CHECK(rep.find("violations: 0") != std::string::npos);
    fs::remove_all(dir.parent_path());
}

TEST_CASE("the audit driver signals violations through the exit code") {
    RunOptions opt;
    std::ostringstream log;
    CHECK(run_audit(parse_jobspec(kRank1Spec), opt, log) == 0);
    std::ostringstream log2;
    CHECK(run_audit(parse_jobspec(kRank2Spec), opt, log2) == 2);
    CHECK(log2.str().find("violations: 2") != std::string::npos);
    CHECK(log2.str().find("check.distance_floor: fail") != std::string::npos);
}

TEST_CASE("the cohomology driver reports the dimension identities") {
    RunOptions opt;
    std::ostringstream log;
    int rc = run_rr(parse_jobspec(kRank2Spec), opt, log);
    CHECK(rc == 0);
    std::string out = log.str();
    CHECK(out.find("degree: 4") != std::string::npos);
    CHECK(out.find("h0: 6") != std::string::npos);
    CHECK(out.find("h1: 0") != std::string::npos);
    CHECK(out.find("chi: 6") != std::string::npos);
    CHECK(out.find("splitting_type: 2 2") != std::string::npos);
    CHECK(out.find("semistable: true") != std::string::npos);
    CHECK(out.find("orders.(inf): 2 2") != std::string::npos);
}

TEST_CASE("the calibration driver prints one table per field and rank") {
    RunOptions opt;
    opt.qs = {2};
    opt.rs = {1, 2};
    std::ostringstream log;
    CHECK(run_beta(opt, log) == 0);
    std::string out = log.str();
    CHECK(out.find("matches: s-residue/positive-odd-parts") != std::string::npos);
    CHECK(out.find("no listed convention matches the semistable mass") != std::string::npos);
}

TEST_CASE("the selftest battery passes") {
    RunOptions opt;
    std::ostringstream log;
    CHECK(run_selftest(opt, log) == 0);
    CHECK(log.str().find("[FAIL]") == std::string::npos);
    CHECK(log.str().find("[ok]") != std::string::npos);
}
