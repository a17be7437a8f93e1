#include "generators.h"

#include <lpbn/fixpoint.h>
#include <lpbn/oracle.h>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace lpbn;
using lpbn::testing::Rng;

namespace {
const char* const p1 = "a :- not b. b :- not c. c :- a.";
const char* const p2 = "a :- b. b :- not c. c :- a.";

// a=0, b=1, c=2
QuasiRule q(Atom head, std::vector<Atom> nbody = {}) { return {head, std::move(nbody)}; }
} // namespace

TEST_CASE("one step of the transformation") {
    auto p = parseProgram(p1);
    auto first = tpTransform(p, {});
    CHECK(first == QuasiProgram{q(0, {1}), q(1, {2})});
    auto second = tpTransform(p, first);
    CHECK(second == QuasiProgram{q(0, {1}), q(1, {2}), q(2, {1})});

    CHECK(tpTransform(parseProgram("a."), {q(0, {0})}) == QuasiProgram{q(0)});
}

TEST_CASE("least fixpoints") {
    CHECK(leastFixpoint(parseProgram(p1)) == QuasiProgram{q(0, {1}), q(1, {2}), q(2, {1})});
    CHECK(leastFixpoint(parseProgram(p2)) == QuasiProgram{q(0, {2}), q(1, {2}), q(2, {2})});
    CHECK(leastFixpoint(parseProgram("a :- b. b.")) == QuasiProgram{q(0), q(1)});
    CHECK(leastFixpoint(parseProgram("a :- b. b :- a.")).empty());
}

TEST_CASE("resolution merges repeated negative literals") {
    auto lfp = leastFixpoint(parseProgram("a :- b, c. b :- not d. c :- not d."));
    CHECK(lfp.contains(q(0, {3})));
}

TEST_CASE("lfp budget") {
    // Each of x0..x5 has two quasi-rules, so the head a resolves 2^6 ways.
    std::string text = "a :- x0, x1, x2, x3, x4, x5.\n";
    for (int k = 0; k < 6; ++k) {
        auto x = "x" + std::to_string(k);
        text += x + " :- not y" + std::to_string(k) + ". " + x + " :- not z" + std::to_string(k) + ".\n";
    }
    auto p = parseProgram(text);
    CHECK(leastFixpoint(p).size() == 64 + 12);
    CHECK_THROWS_AS(leastFixpoint(p, 50), BudgetExhausted);
    CHECK_THROWS_AS(stableViaLfp(p, 50), BudgetExhausted);
}

TEST_CASE("lfp as a program") {
    auto p   = parseProgram(p2);
    auto out = toProgram(p.atoms(), leastFixpoint(p));
    CHECK(printProgram(out) == "a :- not c.\nb :- not c.\nc :- not c.\n");
    CHECK(out.atomCount() == 3);
}

TEST_CASE("stable models through the least fixpoint") {
    auto s1 = stableViaLfp(parseProgram(p1));
    CHECK(s1 == std::vector<Interpretation>{Interpretation::fromBits("010"), Interpretation::fromBits("101")});
    CHECK(stableViaLfp(parseProgram(p2)).empty());
    CHECK(stableViaLfp(parseProgram("a :- b. a :- not b. b :- c. c :- b.")) ==
          std::vector<Interpretation>{Interpretation::fromBits("100")});
    CHECK(stableViaLfp(Program{}) == std::vector<Interpretation>{Interpretation(0)});
}

TEST_CASE("lfp properties on random programs") {
    Rng rng(41);
    for (int k = 0; k < 300; ++k) {
        auto p = testing::randomProgram(rng);
        REQUIRE(stableViaLfp(p) == oracle::enumerateStable(p));

        QuasiProgram prev;
        for (;;) {
            auto next = tpTransform(p, prev);
            REQUIRE(std::ranges::includes(next, prev));
            if (next == prev) {
                break;
            }
            prev = std::move(next);
        }
        REQUIRE(prev == leastFixpoint(p));
    }
}

TEST_CASE("negative-cycle freedom carries over to the least fixpoint") {
    Rng rng(43);
    for (int k = 0; k < 200; ++k) {
        auto p = testing::randomBalancedProgram(rng);
        REQUIRE(hasNegativeCycle(dependenceGraph(p)).kind == CycleAnswer::no);
        auto lfp = toProgram(p.atoms(), leastFixpoint(p));
        REQUIRE(hasNegativeCycle(dependenceGraph(lfp)).kind == CycleAnswer::no);
    }
}

TEST_CASE("locally stratified programs have an acyclic lfp graph and one model") {
    Rng rng(47);
    for (int k = 0; k < 200; ++k) {
        auto p = testing::randomLayeredProgram(rng);
        REQUIRE(isLocallyStratified(p));
        auto lfp = toProgram(p.atoms(), leastFixpoint(p));
        REQUIRE(isAcyclic(dependenceGraph(lfp)));
        REQUIRE(stableViaLfp(p).size() == 1);
    }
}
