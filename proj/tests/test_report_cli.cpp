#include <catch2/catch_amalgamated.hpp>

#include <goppa/cli.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace goppa;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int n = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("structured build document is the frozen golden at l=2") {
    CliResult r = run({"build", "--l", "2", "--seed", "1", "--format",
                       "structured"});
    REQUIRE(r.exit_code == 0);
    const std::string golden =
        "schema_version 1\n"
        "l 2\n"
        "seed 1\n"
        "field 2 19\n"
        "param A 5\n"
        "param beta3 1\n"
        "param C 1\n"
        "param beta8 12\n"
        "param R 7\n"
        "param V 11\n"
        "param beta9 8\n"
        "param B 6\n"
        "draws 4\n"
        "c_zero_gap 1\n"
        "code L1 1 13 2 7 exact\n"
        "code L1s 1 12 1 12 exact\n"
        "code L2 2 12 1 12 exact\n"
        "code L3 3 12 1 12 exact\n"
        "code L3s 3 11 0 - none\n"
        "code L4 4 12 1 11 exact\n"
        "code L4s 4 11 1 11 exact\n"
        "code L5 5 11 1 11 exact\n"
        "code L6 6 11 1 11 exact\n"
        "code L7 7 11 1 11 exact\n"
        "end\n";
    REQUIRE(r.out == golden);
}

TEST_CASE("identical invocations emit byte-identical structured output") {
    std::vector<std::string> args = {"verify", "--l",     "3",
                                     "--seed", "3",       "--format",
                                     "structured"};
    CliResult a = run(args);
    CliResult b = run(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(contains(a.out, "code L7 7 55 16 19 exact"));
    REQUIRE(count_lines_starting(a.out, "check ") == 32);
    REQUIRE(count_lines_starting(a.out, "check redundant_row_L1s pass") == 1);
    REQUIRE(count_lines_starting(a.out, "qc_witness ") == 5);
    REQUIRE(count_lines_starting(a.out, " fail") == 0);
}

TEST_CASE("build reports the headline parameters at l=3") {
    CliResult r = run({"build", "--l", "3", "--seed", "1"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "L7"));
    REQUIRE(contains(r.out, "55    16    19 exact"));
    REQUIRE(contains(r.out, "57    17    15 exact"));
}

TEST_CASE("verify passes and reports every check at l=2") {
    CliResult r = run({"verify", "--l", "2", "--seed", "7"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "checks: 32/32 passed"));
    REQUIRE(contains(r.out, "pass block_identity"));
    REQUIRE(contains(r.out, "pass distance_L2_equals_min_even_L5"));
    REQUIRE_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("distance command covers exact, bound and none cases") {
    CliResult exact = run({"distance", "--l", "3", "--code", "7"});
    REQUIRE(exact.exit_code == 0);
    REQUIRE(contains(exact.out, "d 19 exact"));
    REQUIRE(contains(exact.out, "enumerated 65535"));

    CliResult bound = run({"distance", "--l", "4", "--code", "7"});
    REQUIRE(bound.exit_code == 1);
    REQUIRE(contains(bound.out, "d 35 bound"));

    CliResult none = run({"distance", "--l", "2", "--code", "3s"});
    REQUIRE(none.exit_code == 0);
    REQUIRE(contains(none.out, "d - none"));

    CliResult structured = run(
        {"distance", "--l", "3", "--code", "7", "--format", "structured"});
    REQUIRE(structured.exit_code == 0);
    REQUIRE(contains(structured.out, "code L7 7 55 16 19 exact"));
    REQUIRE(contains(structured.out, "witness_weight 19"));
    REQUIRE(count_lines_starting(structured.out, "witness_support ") == 1);
}

TEST_CASE("export formats") {
    CliResult mt = run(
        {"export", "--l", "2", "--code", "7", "--format", "matrix-text"});
    REQUIRE(mt.exit_code == 0);
    auto f = std::make_shared<Field>(2);
    Chain ch = build_chain(f, 1);
    REQUIRE(mt.out == ch.code(CodeId::L7).h_bin().to_text());
    std::istringstream is(mt.out);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        REQUIRE(line.size() == ch.code(CodeId::L7).n());
        for (char c : line) REQUIRE((c == '0' || c == '1'));
        ++rows;
    }
    REQUIRE(rows == static_cast<int>(ch.code(CodeId::L7).h_bin().rows()));

    CliResult st = run(
        {"export", "--l", "2", "--code", "7", "--format", "structured"});
    REQUIRE(st.exit_code == 0);
    REQUIRE(contains(st.out, "goppa_poly 1 0 0 0 0 6"));
    REQUIRE(count_lines_starting(st.out, "h_field_row ") ==
            ch.code(CodeId::L7).g().degree());
    REQUIRE(count_lines_starting(st.out, "locations ") == 1);

    CliResult rt = run({"export", "--l", "2", "--code", "7"});
    REQUIRE(rt.exit_code == 0);
    REQUIRE(contains(rt.out, "design_distance=11"));
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"conjure", "--l", "2"}).exit_code == 2);
    REQUIRE(run({"build"}).exit_code == 2);
    REQUIRE(run({"build", "--l", "9"}).exit_code == 2);
    REQUIRE(run({"build", "--l", "2", "--bogus"}).exit_code == 2);
    REQUIRE(run({"distance", "--l", "2"}).exit_code == 2);
    REQUIRE(run({"distance", "--l", "2", "--code", "8"}).exit_code == 2);
    REQUIRE(run({"build", "--l", "2", "--format", "yaml"}).exit_code == 2);
    REQUIRE(run({"build", "--l", "2", "--format", "matrix-text"}).exit_code ==
            2);
    REQUIRE(run({"build", "--l", "2", "--cap", "99"}).exit_code == 2);
    CliResult r = run({"conjure"});
    REQUIRE(contains(r.err, "Usage"));
}

TEST_CASE("help exits cleanly") {
    CliResult r = run({"--help"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "build"));
    REQUIRE(contains(r.out, "verify"));
}

TEST_CASE("--out writes the document to a file") {
    std::string path = "/tmp/goppa_cli_out_test.txt";
    std::remove(path.c_str());
    CliResult direct = run({"build", "--l", "2", "--format", "structured"});
    CliResult filed = run(
        {"build", "--l", "2", "--format", "structured", "--out", path});
    REQUIRE(filed.exit_code == 0);
    REQUIRE(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    REQUIRE(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("report text marks failing checks") {
    auto f = std::make_shared<Field>(2);
    Chain ch = build_chain(f, 1);
    Report rep = build_report(ch, 28, true);
    rep.checks.push_back({"synthetic_failure", false});
    std::string st = to_structured_text(rep);
    REQUIRE(contains(st, "check synthetic_failure fail"));
    std::string rt = to_report_text(rep);
    REQUIRE(contains(rt, "FAIL synthetic_failure"));
    REQUIRE(contains(rt, "32/33 passed"));
}

TEST_CASE("bound rows appear in build output above the cap") {
    CliResult r = run({"build", "--l", "4", "--format", "structured"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "code L7 7 239 123 35 bound"));
    REQUIRE(contains(r.out, "code L1 1 241 124 31 bound"));
}
