#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dirfuzz/algebra.hpp"
#include "dirfuzz/errors.hpp"
#include "dirfuzz/io.hpp"
#include "dirfuzz/random_gen.hpp"
#include "support/fixtures.hpp"

using namespace dirfuzz;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int error_line(const std::string& text) {
    try {
        parse_automaton(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("parsing the bundled demo file") {
    auto parsed = parse_automaton(slurp(fixtures::fixture_path("demo3.fza")));
    REQUIRE(parsed.is_fuzzy());
    CHECK(parsed.fuzzy() == fixtures::demo3());
    CHECK(parsed.fuzzy().weight(0, 0, 1) == Rational(3, 10));  // "0.3" parsed exactly
}

TEST_CASE("weights accept decimals, fractions, and 1") {
    auto parsed = parse_automaton(
        "fza v1\nstates: a b\nalphabet: x\na x b 0.125\nb x b 3/4\nb x a 1\n");
    const auto& f = parsed.fuzzy();
    CHECK(f.weight(0, 0, 1) == Rational(1, 8));
    CHECK(f.weight(1, 0, 1) == Rational(3, 4));
    CHECK(f.weight(1, 0, 0) == Rational(1));
}

TEST_CASE("comments and blank lines are ignored") {
    auto parsed = parse_automaton(
        "# demo\nfza v1\n\nstates: a b  # two states\nalphabet: x\n\na x b 1/2\n");
    CHECK(parsed.fuzzy().state_count() == 2);
    CHECK(parsed.fuzzy().transitions().size() == 1);
}

TEST_CASE("nfa files parse into relations") {
    auto parsed = parse_automaton("nfa v1\nstates: p q\nalphabet: x\np x q\nq x q\np x p\n");
    REQUIRE_FALSE(parsed.is_fuzzy());
    const Nfa& n = parsed.nfa();
    CHECK(n.successors(0, 0).count() == 2);
    CHECK(n.successors(1, 0).count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("") == 1);
    CHECK(error_line("fzz v9\n") == 1);
    CHECK(error_line("fza v1\nstates: a\n") == 2);  // missing alphabet line
    CHECK(error_line("fza v1\nstates: a a\nalphabet: x\n") == 2);
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x a\n") == 4);  // missing weight
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x b 1/2\n") == 4);  // unknown state
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na y a 1/2\n") == 4);  // unknown letter
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x a 1.5\n") == 4);  // out of range
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x a 0\n") == 4);    // zero weight
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x a 1/0\n") == 4);  // malformed
    CHECK(error_line("fza v1\nstates: a\nalphabet: x\na x a 0.5\na x a 1/2\n") == 5);
    CHECK(error_line("nfa v1\nstates: a\nalphabet: x\na x a 0.5\n") == 4);  // stray weight
}

TEST_CASE("duplicate transitions are rejected even when spelled differently") {
    std::string text = "fza v1\nstates: a b\nalphabet: x\na x b 0.30\na x b 3/10\n";
    CHECK_THROWS_AS(parse_automaton(text), ParseError);
}

TEST_CASE("canonical writing") {
    auto f = fixtures::demo3();
    std::string text = write_automaton(f);
    CHECK(text.find("a x b 3/10") != std::string::npos);  // decimal re-emitted reduced
    CHECK(text.find("0.3") == std::string::npos);
    CHECK(parse_automaton(text).fuzzy() == f);
}

TEST_CASE("round trips reproduce the automaton exactly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = random_automaton(seed, 1 + seed % 6, 1 + seed % 3,
                                  Rational(1 + seed % 4, 4), seed % 2 == 0);
        CHECK(parse_automaton(write_automaton(f)).fuzzy() == f);
        Nfa n = to_nfa(f);
        CHECK(parse_automaton(write_automaton(n)).nfa() == n);
    }
}

TEST_CASE("pair and block state names survive the file format") {
    FuzzyAutomaton p = direct_product(fixtures::d1drop_left(), fixtures::d1drop_right());
    CHECK(parse_automaton(write_automaton(p)).fuzzy() == p);
    CHECK(write_automaton(p).find("(a,1)") != std::string::npos);

    FuzzyAutomaton q = quotient(fixtures::chain_funnel(), Partition::single_block(3));
    CHECK(parse_automaton(write_automaton(q)).fuzzy() == q);
    CHECK(write_automaton(q).find("[a,b,c]") != std::string::npos);
}
