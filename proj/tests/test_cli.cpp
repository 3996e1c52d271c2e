#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cycdom/domset_io.hpp"

using namespace cycdom;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cycdom");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "cycdom_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

using Catch::Matchers::ContainsSubstring;

}  // namespace

TEST_CASE("compute reports exact values with provenance") {
    Run r = run({"compute", "5", "3"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("exact 6 (theorem2-case-i)"));

    r = run({"compute", "4", "8"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("exact 12 (theorem4-c4)"));

    r = run({"compute", "3", "3"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("exact 3 (exact-bruteforce)"));
}

TEST_CASE("compute falls back to an interval when the budget is too small") {
    Run r = run({"compute", "11", "4", "--budget-bits", "3"});
    CHECK(r.code == 2);
    CHECK_THAT(r.out, ContainsSubstring("interval [17, 22]"));

    r = run({"compute", "11", "4", "--budget-bits", "4"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("exact 17 (exact-dp)"));
}

TEST_CASE("compute rejects invalid instances") {
    Run r = run({"compute", "1", "3"});
    CHECK(r.code == 1);
    CHECK_THAT(r.err, ContainsSubstring("error"));
    CHECK(run({"compute", "x", "3"}).code == 1);
    CHECK(run({"compute"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("certificates written by compute and construct verify") {
    const auto cert = scratch("c53.domset");
    Run r = run({"compute", "5", "3", "--certificate", cert.string()});
    REQUIRE(r.code == 0);
    r = run({"verify", cert.string()});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("dominating, size 6"));

    for (auto [m, n] : {std::pair{6, 7}, {7, 5}, {4, 4}, {2, 9}}) {
        const auto p = scratch("c" + std::to_string(m) + "_" + std::to_string(n) + ".domset");
        REQUIRE(run({"compute", std::to_string(m), std::to_string(n), "--certificate", p.string()}).code == 0);
        CHECK(run({"verify", p.string()}).code == 0);
    }

    const auto built = scratch("built.domset");
    r = run({"construct", "8", "7", "-o", built.string()});
    CHECK(r.code == 0);
    r = run({"verify", built.string()});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("size 21"));
}

TEST_CASE("verify reports undominated vertices and parse errors") {
    const auto bad = scratch("bad.domset");
    write(bad, "# domset v1\nm 5\nn 3\ncol 0: 0 2\ncol 1:\ncol 2: 2 4\n");
    Run r = run({"verify", bad.string()});
    CHECK(r.code == 3);
    CHECK_THAT(r.out, ContainsSubstring("undominated vertex ("));

    const auto broken = scratch("broken.domset");
    write(broken, "# domset v0\nm 5\nn 3\n");
    r = run({"verify", broken.string()});
    CHECK(r.code == 1);
    CHECK_THAT(r.err, ContainsSubstring("line 1"));

    CHECK(run({"verify", scratch("missing.domset").string()}).code == 1);
}

TEST_CASE("construct writes domset text to stdout") {
    Run r = run({"construct", "5", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "# domset v1\nm 5\nn 3\ncol 0: 0 2\ncol 1: 1 3\ncol 2: 2 4\n");

    r = run({"construct", "5", "3", "--word", "+1,-2"});
    CHECK(r.code == 0);
    CHECK(read_set(r.out).size() == 6);

    r = run({"construct", "8", "3", "--word", "-2,-2"});
    CHECK(r.code == 3);
    CHECK_THAT(r.err, ContainsSubstring("not dominating"));

    CHECK(run({"construct", "6", "4"}).code == 1);
    CHECK(run({"construct", "5", "3", "--word", "+1"}).code == 1);
}

TEST_CASE("bounds prints every bound") {
    const Run r = run({"bounds", "11", "4"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("lower 17 (strict-lb-case-iii)"));
    CHECK_THAT(r.out, ContainsSubstring("upper 22"));
    CHECK_THAT(r.out, ContainsSubstring("known none"));
    CHECK_THAT(r.out, ContainsSubstring("case open-d-i"));
}

TEST_CASE("table emits one deterministic CSV row per instance") {
    Run r = run({"table", "--m-range", "2..4", "--n-range", "2..3"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,n,m_mod3,n_mod3,case,lower,upper,exact,method,ms");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // exact column (8th field) is filled
        int commas = 0;
        std::size_t pos = 0;
        for (; pos < line.size() && commas < 7; ++pos) commas += line[pos] == ',';
        CHECK(line[pos] != ',');
    }
    CHECK(rows == 6);

    r = run({"table", "--m-range", "5..5", "--n-range", "3..3"});
    CHECK_THAT(r.out, ContainsSubstring("5,3,2,0,solved,6,6,6,theorem2-case-i,\n"));

    r = run({"table", "--m-range", "12..12", "--n-range", "7..7", "--budget-bits", "3"});
    CHECK_THAT(r.out, ContainsSubstring("12,7,0,1,open-a,"));

    const Run a = run({"table", "--m-range", "2..7", "--n-range", "2..7", "--threads", "3"});
    const Run b = run({"table", "--m-range", "2..7", "--n-range", "2..7", "--threads", "1"});
    CHECK(a.out == b.out);

    CHECK(run({"table", "--m-range", "4..2", "--n-range", "2..3"}).code == 1);
    CHECK(run({"table", "--m-range", "1..2", "--n-range", "2..3"}).code == 1);
    CHECK(run({"table", "--m-range", "2-3", "--n-range", "2..3"}).code == 1);
    CHECK(run({"table", "--m-range", "2..3", "--n-range", "2..3", "--format", "json"}).code == 1);
}

TEST_CASE("conjecture finds the first counterexample at k = 3") {
    Run r = run({"conjecture", "--k-max", "4"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("k=2 m=6 n=4: conjectured 10, actual 10, dp 10: agree"));
    CHECK_THAT(r.out, ContainsSubstring("k=3 m=9 n=4: conjectured 15, actual 14, dp 14: COUNTEREXAMPLE"));
    CHECK_THAT(r.out, ContainsSubstring("first counterexample k=3 (conjectured 15, actual 14)"));

    r = run({"conjecture", "--k-max", "8", "--no-dp"});
    CHECK_THAT(r.out, ContainsSubstring("k=8 m=24 n=4: conjectured 40, actual 36: COUNTEREXAMPLE"));

    CHECK(run({"conjecture", "--k-max", "1"}).code == 1);
}

TEST_CASE("the installed binary uses the same exit codes") {
    const std::string tool = CYCDOM_TOOL_PATH;
    CHECK(WEXITSTATUS(std::system((tool + " compute 5 3 > /dev/null").c_str())) == 0);
    CHECK(WEXITSTATUS(std::system((tool + " compute 11 4 --budget-bits 3 > /dev/null").c_str())) == 2);
    CHECK(WEXITSTATUS(std::system((tool + " compute 1 1 > /dev/null 2>&1").c_str())) == 1);
}
