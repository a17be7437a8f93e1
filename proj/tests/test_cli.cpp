#include "cli.h"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

namespace {

struct Result {
    int         code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(LPBN_TEST_DIR) + "/data/" + name; }

Result run(std::vector<std::string> args, const std::string& stdinText = {}, const char* budgetEnv = nullptr) {
    std::istringstream in(stdinText);
    std::ostringstream out, err;
    int                code = lpbn::cli::run(args, in, out, err, budgetEnv);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream      f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze") {
    auto p2 = run({"analyze", data("ex2_p2.lp")});
    CHECK(p2.code == 0);
    CHECK(contains(p2.out, "SingleNegCycle: fired"));
    CHECK(contains(p2.out, "stable models: exactly 0"));

    auto empty = run({"analyze", data("empty.lp"), "--solve"});
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "stable models: exactly 1"));
    CHECK(contains(empty.out, "\n{}\n"));

    auto ex1 = run({"analyze", data("ex1.lp"), "--solve"});
    CHECK(contains(ex1.out, "\n{a}\n"));
}

TEST_CASE("JSON reports match the golden files") {
    for (std::string name : {"ex1", "ex2_p1", "ex2_p2", "ex3"}) {
        auto r = run({"analyze", data(name + ".lp"), "--format", "json", "--solve"});
        CHECK(r.code == 0);
        CHECK(r.out == slurp(std::string(LPBN_TEST_DIR) + "/golden/" + name + ".json"));
    }
}

TEST_CASE("solve") {
    CHECK(run({"solve", data("ex3.lp")}).out == "{b}\n{a,c}\n");
    CHECK(run({"solve", data("ex2_p1.lp"), "--method", "lfp"}).out == "{b}\n{a,c}\n");
    CHECK(run({"solve", data("ex2_p1.lp"), "--method", "bruteforce"}).out == "{b}\n{a,c}\n");
    CHECK(run({"solve", data("empty.lp")}).out == "{}\n");
    CHECK(run({"solve", data("ex2_p2.lp")}).out.empty());
    CHECK(run({"solve", data("ex3.lp"), "--format", "json"}).out == "[\"{b}\",\"{a,c}\"]\n");
}

TEST_CASE("stdin input") {
    auto r = run({"solve", "-"}, "a :- not b. b :- not a.");
    CHECK(r.code == 0);
    CHECK(r.out == "{b}\n{a}\n");
}

TEST_CASE("supported, fixpoints and lfp") {
    CHECK(run({"supported", data("ex1.lp")}).out == "{a}\n{a,b,c}\n");
    CHECK(run({"supported", data("ex1.lp"), "--completion"}).out == "a <-> b | !b\nb <-> c\nc <-> b\n");
    CHECK(run({"fixpoints", data("ex1.lp")}).out == "100\n111\n");
    CHECK(run({"fixpoints", data("ex1.lp"), "--network"}).out == "a = b | !b\nb = c\nc = b\n");
    CHECK(run({"lfp", data("ex2_p1.lp")}).out == "a :- not b.\nb :- not c.\nc :- not b.\n");
}

TEST_CASE("export") {
    auto dg = run({"export", data("ex1.lp"), "--graph", "dg"}).out;
    CHECK(dg ==
          "digraph dg {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"b\" -> \"a\";\n"
          "  \"b\" -> \"a\" [style=dashed, label=\"-\"];\n  \"b\" -> \"c\";\n  \"c\" -> \"b\";\n}\n");

    auto ig = run({"export", data("ex1.lp"), "--graph", "ig"}).out;
    CHECK(ig ==
          "// influence graph: semantic\ndigraph ig {\n  \"a\";\n  \"b\";\n  \"c\";\n"
          "  \"b\" -> \"c\";\n  \"c\" -> \"b\";\n}\n");

    auto syn = run({"export", data("ex1.lp"), "--graph", "ig", "--ig-mode", "syntactic"}).out;
    CHECK(contains(syn, "// influence graph: syntactic (approximate)"));

    CHECK(contains(run({"export", data("ex1.lp"), "--graph", "ig", "--ig-cap", "0"}).out, "support cap exceeded"));
    CHECK(run({"export", data("empty.lp")}).out == "digraph dg {\n}\n");
}

TEST_CASE("oracle") {
    CHECK(run({"oracle", "stable", data("ex2_p1.lp")}).out == "{b}\n{a,c}\n");
    CHECK(run({"oracle", "supported", data("ex1.lp")}).out == "{a}\n{a,b,c}\n");
    CHECK(run({"oracle", "fixpoints", data("ex3.lp")}).out == "010\n101\n");
    CHECK(run({"oracle", "cycles", data("ex3.lp")}).out == "(a,b,a) +\n(b,c,b) +\n");
    auto capped = run({"oracle", "cycles", data("ex3.lp"), "--cycle-cap", "1"});
    CHECK(capped.code == 2);
    CHECK(capped.out == "(a,b,a) +\n");
}

TEST_CASE("exit statuses") {
    CHECK(run({"analyze", data("missing.lp")}).code == 1);
    auto bad = run({"solve", "-"}, "a :- .");
    CHECK(bad.code == 1);
    CHECK(bad.err == "<stdin>:1:6: expected atom\n");
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate", data("ex1.lp")}).code == 1);
    CHECK(run({"solve", data("ex1.lp"), "--method", "sat"}).code == 1);
    CHECK(run({"analyze", data("ex1.lp"), "--cycle-budget", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    auto partial = run({"solve", data("ex3.lp"), "--search-budget", "1"});
    CHECK(partial.code == 2);
    CHECK(contains(partial.err, "partial"));
    CHECK(run({"lfp", data("ex2_p1.lp"), "--lfp-budget", "1"}).code == 2);
    CHECK(run({"analyze", data("ex3.lp"), "--solve", "--search-budget", "1"}).code == 2);
}

TEST_CASE("budget environment variable") {
    CHECK(run({"solve", data("ex3.lp")}, {}, "1").code == 2);
    CHECK(run({"solve", data("ex3.lp"), "--search-budget", "1000"}, {}, "1").code == 0);
    CHECK(run({"solve", data("ex3.lp")}, {}, "1000").code == 0);
    CHECK(run({"solve", data("ex3.lp")}, {}, "zero").code == 1);
    CHECK(run({"solve", data("ex3.lp")}, {}, "0").code == 1);
}
