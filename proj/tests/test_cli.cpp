#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dirfuzz/cli.hpp"
#include "dirfuzz/io.hpp"
#include "support/fixtures.hpp"

using namespace dirfuzz;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixtures::fixture_path(name); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("validate command") {
    auto ok = run({"validate", fx("demo3.fza")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "command: validate\nresult: ok\n");

    auto missing = run({"validate", fx("no_such_file.fza")});
    CHECK(missing.code == 1);
    CHECK(missing.out.empty());
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("to-nfa matches the golden skeleton byte for byte") {
    auto r = run({"to-nfa", fx("demo3.fza")});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fx("demo3_tonfa.golden")));

    auto out_path = temp_file("dirfuzz_tonfa_test.nfa");
    auto r2 = run({"to-nfa", fx("demo3.fza"), "-o", out_path.string()});
    CHECK(r2.code == 0);
    CHECK(slurp(out_path.string()) == r.out);
    std::filesystem::remove(out_path);
}

TEST_CASE("check-word command and exit codes") {
    auto yes = run({"check-word", "--mode", "d3", "--word", "x x", fx("demo3.fza")});
    CHECK(yes.code == 0);
    CHECK(yes.out ==
          "command: check-word\nmode: d3\nword: x x\nresult: true\n");

    auto no = run({"check-word", "--mode", "d3", "--word", "x x y", fx("demo3.fza")});
    CHECK(no.code == 0);
    CHECK(no.out.find("result: false") != std::string::npos);

    auto tau = run({"check-word", "--mode", "d3", "--word", "x x", "--tau", "7/20",
                    fx("demo3.fza")});
    CHECK(tau.code == 0);
    CHECK(tau.out.find("tau: 7/20") != std::string::npos);
    CHECK(tau.out.find("result: false") != std::string::npos);

    CHECK(run({"check-word", "--mode", "d9", "--word", "x", fx("demo3.fza")}).code == 1);
    CHECK(run({"check-word", "--mode", "d3", "--word", "q", fx("demo3.fza")}).code == 1);
    CHECK(run({"check-word", "--mode", "d3", "--word", "x", "--tau", "9/8",
               fx("demo3.fza")}).code == 1);
}

TEST_CASE("check-word runs on nfa files without --tau") {
    auto nfa_path = temp_file("dirfuzz_cli_demo.nfa");
    {
        auto r = run({"to-nfa", fx("demo3.fza"), "-o", nfa_path.string()});
        REQUIRE(r.code == 0);
    }
    auto ok = run({"check-word", "--mode", "d3", "--word", "x x", nfa_path.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("result: true") != std::string::npos);

    CHECK(run({"check-word", "--mode", "d3", "--word", "x", "--tau", "1/4",
               nfa_path.string()}).code == 1);
    CHECK(run({"to-nfa", nfa_path.string()}).code == 1);  // needs fza input
    std::filesystem::remove(nfa_path);
}

TEST_CASE("directable and shortest reports") {
    auto r = run({"directable", "--mode", "d3", fx("demo3.fza")});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "command: directable\nmode: d3\nresult: true\nwitness: x x\n"
          "length: 2\nexplored: 5\ntruncated: false\n");

    auto s = run({"shortest", "--mode", "d1", fx("demo3.fza")});
    CHECK(s.code == 0);
    CHECK(s.out.find("result: false") != std::string::npos);
    CHECK(s.out.find("truncated: false") != std::string::npos);

    auto capped = run({"shortest", "--mode", "d3", "--cap", "1", fx("demo3.fza")});
    CHECK(capped.code == 3);
    CHECK(capped.out.find("truncated: true") != std::string::npos);

    auto eps = run({"shortest", "--mode", "d2", fx("chain_funnel.fza")});
    CHECK(eps.code == 0);
    CHECK(eps.out.find("witness: x x") != std::string::npos);
}

TEST_CASE("d3-test exit codes") {
    auto ok = run({"d3-test", fx("chain_funnel.fza")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "command: d3-test\nresult: true\npops: 3\n");

    auto incomplete = run({"d3-test", fx("merge_trap.fza")});
    CHECK(incomplete.code == 2);
    CHECK(incomplete.out ==
          "command: d3-test\nerror: incomplete\nstate: a\nletter: y\n");
}

TEST_CASE("product command") {
    auto mismatch = run({"product", fx("demo3.fza"), fx("merge_trap.fza")});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.out.find("error: alphabet-mismatch") != std::string::npos);

    auto out_path = temp_file("dirfuzz_product_test.fza");
    auto ok = run({"product", fx("d1drop_f.fza"), fx("d1drop_g.fza"), "-o",
                   out_path.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("output:") != std::string::npos);
    auto parsed = parse_automaton(slurp(out_path.string()));
    CHECK(parsed.fuzzy().state_count() == 4);
    CHECK(parsed.fuzzy().state_name(0) == "(a,1)");
    std::filesystem::remove(out_path);
}

TEST_CASE("quotient command") {
    auto bad = run({"quotient", fx("demo3.fza"), "--partition", "a|b c"});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("error: not-congruence") != std::string::npos);

    auto ok = run({"quotient", fx("chain_funnel.fza"), "--partition", "a b c"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("states: [a,b,c]") != std::string::npos);

    CHECK(run({"quotient", fx("demo3.fza"), "--partition", "a|b"}).code == 1);
    CHECK(run({"quotient", fx("demo3.fza"), "--partition", "a|b c|zz"}).code == 1);
}

TEST_CASE("subautomaton command") {
    auto ok = run({"subautomaton", fx("demo3.fza"), "--states", "b c"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("states: b c") != std::string::npos);

    auto open = run({"subautomaton", fx("demo3.fza"), "--states", "a"});
    CHECK(open.code == 2);
    CHECK(open.out ==
          "command: subautomaton\nerror: not-closed\nstate: a\nletter: x\nescapes: b\n");

    CHECK(run({"subautomaton", fx("demo3.fza"), "--states", "zz"}).code == 1);
}

TEST_CASE("oracle command") {
    auto r = run({"oracle", "--mode", "d3", "--max-len", "2", fx("demo3.fza")});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "command: oracle\nmode: d3\nmax-len: 2\ncount: 1\nword: x x\n");

    auto none = run({"oracle", "--mode", "d3", "--max-len", "6", fx("merge_trap.fza")});
    CHECK(none.code == 0);
    CHECK(none.out.find("count: 0") != std::string::npos);

    auto blown = run({"oracle", "--mode", "d3", "--max-len", "64", fx("demo3.fza")});
    CHECK(blown.code == 3);
    CHECK(blown.out.find("error: budget-exceeded") != std::string::npos);
}

TEST_CASE("random command is deterministic") {
    std::vector<std::string> args{"random", "--seed", "42", "--states", "4",
                                  "--letters", "2", "--density", "1/2", "--complete"};
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    auto parsed = parse_automaton(first.out);
    CHECK(is_complete(parsed.fuzzy()));

    auto dense = run({"random", "--seed", "1", "--states", "3", "--letters", "2",
                      "--density", "1"});
    CHECK(parse_automaton(dense.out).fuzzy().transitions().size() == 18);  // 3*3*2

    CHECK(run({"random", "--seed", "1", "--states", "0", "--letters", "1"}).code == 1);
    CHECK(run({"random", "--seed", "1", "--states", "2", "--letters", "1",
               "--density", "0"}).code == 1);
}

TEST_CASE("identical invocations produce identical reports") {
    std::vector<std::string> args{"directable", "--mode", "d2", fx("demo3.fza")};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"check-word", fx("demo3.fza")}).code == 1);  // missing required flags
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("dirfuzz") != std::string::npos);
}
