#include "generators.h"

#include <lpbn/oracle.h>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace lpbn;
using lpbn::testing::Rng;

namespace {
std::vector<std::string> bits(const std::vector<Interpretation>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) {
        out.push_back(x.bitString());
    }
    return out;
}
} // namespace

TEST_CASE("stable models by definition") {
    CHECK(bits(oracle::enumerateStable(parseProgram("a :- not b. b :- not c. c :- a."))) ==
          std::vector<std::string>{"010", "101"});
    CHECK(oracle::enumerateStable(parseProgram("a :- b. b :- not c. c :- a.")).empty());
    CHECK(bits(oracle::enumerateStable(parseProgram("a."))) == std::vector<std::string>{"1"});
}

TEST_CASE("supported models by definition") {
    CHECK(bits(oracle::enumerateSupported(parseProgram("a :- b. a :- not b. b :- c. c :- b."))) ==
          std::vector<std::string>{"100", "111"});
    CHECK(oracle::enumerateSupported(parseProgram("a :- not a.")).empty());
    CHECK(bits(oracle::enumerateSupported(Program{})) == std::vector<std::string>{""});
}

TEST_CASE("fixed points by scanning") {
    CHECK(bits(oracle::enumerateFixedPoints(encode(parseProgram("a :- b. a :- not b. b :- c. c :- b.")))) ==
          std::vector<std::string>{"100", "111"});
    CHECK(bits(oracle::enumerateFixedPoints(encode(parseProgram("a :- not b. b :- not a. b :- not c. c :- not b.")))) ==
          std::vector<std::string>{"010", "101"});
    CHECK(bits(oracle::enumerateFixedPoints(BooleanNetwork(std::vector<DnfFunction>(2), {}))) ==
          std::vector<std::string>{"00"});
}

TEST_CASE("size cap") {
    auto p = testing::emptyProgram(oracle::maxAtoms + 1);
    CHECK_THROWS_AS(oracle::enumerateStable(p), oracle::SizeCapExceeded);
    CHECK_THROWS_AS(oracle::enumerateSupported(p), oracle::SizeCapExceeded);
    CHECK_THROWS_AS(oracle::enumerateFixedPoints(encode(p)), oracle::SizeCapExceeded);
}

TEST_CASE("signed cycle enumeration") {
    auto fig2a = oracle::enumerateSignedCycles(dependenceGraph(parseProgram("a :- not b. b :- not c. c :- a.")));
    REQUIRE(fig2a.cycles.size() == 1);
    CHECK(fig2a.cycles[0].vertices == std::vector<Atom>{0, 2, 1, 0});
    CHECK(fig2a.cycles[0].sign() == Sign::plus);

    auto fig1a = oracle::enumerateSignedCycles(dependenceGraph(parseProgram("a :- b. a :- not b. b :- c. c :- b.")));
    REQUIRE(fig1a.cycles.size() == 1);
    CHECK(fig1a.cycles[0].vertices == std::vector<Atom>{1, 2, 1});
    CHECK(fig1a.cycles[0].sign() == Sign::plus);

    CHECK(oracle::enumerateSignedCycles(SignedDigraph(3, {{0, 1, Sign::plus}, {1, 2, Sign::minus}})).cycles.empty());

    // Opposite-sign parallel arcs give one entry per sign choice.
    auto parallel = oracle::enumerateSignedCycles(
        SignedDigraph(2, {{0, 1, Sign::plus}, {0, 1, Sign::minus}, {1, 0, Sign::plus}}));
    CHECK(parallel.cycles.size() == 2);

    auto capped = oracle::enumerateSignedCycles(
        SignedDigraph(2, {{0, 1, Sign::plus}, {0, 1, Sign::minus}, {1, 0, Sign::plus}}), 1);
    CHECK(capped.truncated);
    CHECK(capped.cycles.size() == 1);
}

TEST_CASE("oracle consistency on random programs") {
    Rng rng(53);
    for (int k = 0; k < 300; ++k) {
        auto p         = testing::randomProgram(rng, 10, 14);
        auto supported = oracle::enumerateSupported(p);
        REQUIRE(supported == oracle::enumerateFixedPoints(encode(p)));
        for (const auto& m : oracle::enumerateStable(p)) {
            REQUIRE(std::ranges::binary_search(supported, m));
        }
    }
}
