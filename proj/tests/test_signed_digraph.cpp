#include "generators.h"

#include <lpbn/oracle.h>
#include <lpbn/signed_digraph.h>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace lpbn;
using lpbn::testing::Rng;

namespace {
constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

// Vertex ids a=0, b=1, c=2 throughout.
SignedDigraph figure1a() { return dependenceGraph(parseProgram("a :- b. a :- not b. b :- c. c :- b.")); }
SignedDigraph figure2a() { return dependenceGraph(parseProgram("a :- not b. b :- not c. c :- a.")); }
SignedDigraph figure2b() { return dependenceGraph(parseProgram("a :- b. b :- not c. c :- a.")); }

std::vector<Arc> arcsOf(const SignedDigraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

// Two negative triangles sharing vertex 0: 0->1->2->0 and 0->3->4->0, one
// negative arc each. Their concatenation is a positive closed walk but not
// a cycle.
SignedDigraph bowtie() {
    return SignedDigraph(5, {{0, 1, M}, {1, 2, P}, {2, 0, P}, {0, 3, M}, {3, 4, P}, {4, 0, P}});
}
} // namespace

TEST_CASE("sign algebra") {
    CHECK((P * P) == P);
    CHECK((M * M) == P);
    CHECK((P * M) == M);
    CHECK(flip(P) == M);
}

TEST_CASE("graph construction sorts and deduplicates arcs") {
    SignedDigraph g(2, {{1, 0, P}, {0, 1, M}, {1, 0, P}, {0, 1, P}});
    CHECK(arcsOf(g) == std::vector<Arc>{{0, 1, P}, {0, 1, M}, {1, 0, P}});
    CHECK(g.arcCount(P) == 2);
    CHECK(g.arcCount(M) == 1);
    CHECK(g.hasArc({0, 1, M}));
    CHECK_FALSE(g.hasArc({1, 0, M}));
}

TEST_CASE("dependence graphs of the worked examples") {
    CHECK(arcsOf(figure1a()) == std::vector<Arc>{{1, 0, P}, {1, 0, M}, {1, 2, P}, {2, 1, P}});
    CHECK(arcsOf(figure2a()) == std::vector<Arc>{{0, 2, P}, {1, 0, M}, {2, 1, M}});
    CHECK(dependenceGraph(Program{}).vertexCount() == 0);

    auto pdg1 = positiveDependenceGraph(parseProgram("a :- b. a :- not b. b :- c. c :- b."));
    CHECK(arcsOf(pdg1) == std::vector<Arc>{{1, 0, P}, {1, 2, P}, {2, 1, P}});
    CHECK(positiveDependenceGraph(parseProgram("a :- not b. b :- not a. b :- not c. c :- not b.")).arcs().empty());

    auto pos = parseProgram("a :- b, c. c :- a.");
    CHECK(arcsOf(positiveDependenceGraph(pos)) == arcsOf(dependenceGraph(pos)));
}

TEST_CASE("strongly connected components") {
    CHECK(stronglyConnectedComponents(figure1a()) == std::vector<std::vector<Atom>>{{0}, {1, 2}});
    CHECK(stronglyConnectedComponents(figure2a()) == std::vector<std::vector<Atom>>{{0, 1, 2}});
    CHECK(stronglyConnectedComponents(SignedDigraph(2)).size() == 2);
    CHECK(isStronglyConnected(figure2a()));
    CHECK_FALSE(isStronglyConnected(figure1a()));
}

TEST_CASE("negative cycle detection") {
    auto neg = hasNegativeCycle(figure2b());
    REQUIRE(neg.kind == CycleAnswer::yes);
    CHECK(neg.witness->sign() == M);
    CHECK(neg.witness->length() == 3);
    CHECK(neg.witness->isValidIn(figure2b()));

    CHECK(hasNegativeCycle(figure2a()).kind == CycleAnswer::no);
    CHECK(hasNegativeCycle(SignedDigraph(1, {{0, 0, P}})).kind == CycleAnswer::no);

    auto loop = hasNegativeCycle(SignedDigraph(1, {{0, 0, M}}));
    REQUIRE(loop.kind == CycleAnswer::yes);
    CHECK(loop.witness->vertices == std::vector<Atom>{0, 0});
}

TEST_CASE("positive cycle detection") {
    auto pos = hasPositiveCycle(figure2a());
    REQUIRE(pos.kind == CycleAnswer::yes);
    CHECK(pos.witness->sign() == P);
    CHECK(pos.witness->isValidIn(figure2a()));
    CHECK(pos.witness->length() == 3);

    CHECK(hasPositiveCycle(figure2b()).kind == CycleAnswer::no);
    CHECK(hasPositiveCycle(SignedDigraph(3, {{0, 1, P}, {1, 2, M}})).kind == CycleAnswer::no);

    auto b = bowtie();
    CHECK(hasPositiveCycle(b).kind == CycleAnswer::no);
    CHECK(hasNegativeCycle(b).kind == CycleAnswer::yes);
}

TEST_CASE("positive cycle search reports unknown when the budget runs out") {
    // Six negative triangles through one hub: unbalanced, and every simple
    // cycle is negative, so the search has to enumerate all six.
    std::vector<Arc> arcs;
    const Atom       k = 6;
    for (Atom t = 0; t < k; ++t) {
        Atom hub = 0, x = 1 + 2 * t, y = 2 + 2 * t;
        arcs.push_back({hub, x, M});
        arcs.push_back({x, y, P});
        arcs.push_back({y, hub, P});
    }
    SignedDigraph g(1 + 2 * k, arcs);
    CHECK(hasPositiveCycle(g, 1'000).kind == CycleAnswer::no);
    CHECK(hasPositiveCycle(g, 2).kind == CycleAnswer::unknown);
}

TEST_CASE("sign-definiteness") {
    CHECK_FALSE(isSignDefinite(figure1a()));
    CHECK(isSignDefinite(figure2a()));
    CHECK(isSignDefinite(SignedDigraph{}));
    CHECK(isSignDefinite(SignedDigraph(1, {{0, 0, P}, {0, 0, M}})));
}

TEST_CASE("local stratification") {
    CHECK(isLocallyStratified(parseProgram("a :- b. a :- not b. b :- c. c :- b.")));
    CHECK_FALSE(isLocallyStratified(parseProgram("a :- not b. b :- not c. c :- a.")));
    CHECK(isLocallyStratified(parseProgram("a :- b. b :- a. c :- a.")));
    CHECK_FALSE(isLocallyStratified(parseProgram("a :- not a.")));
}

TEST_CASE("positive feedback vertex set") {
    auto f2a = positiveFeedbackVertexSet(figure2a());
    CHECK(f2a.vertices.size() == 1);
    CHECK_FALSE(f2a.acyclicFallback);
    CHECK(positiveFeedbackVertexSet(SignedDigraph(3, {{0, 1, P}, {1, 2, M}})).vertices.empty());
    CHECK(positiveFeedbackVertexSet(figure2b()).vertices.empty());

    auto fallback = positiveFeedbackVertexSet(figure2a(), 0);
    CHECK(isAcyclic(figure2a().withoutVertices(fallback.vertices)));
}

TEST_CASE("balance bipartition") {
    auto ex3 = dependenceGraph(parseProgram("a :- not b. b :- not a. b :- not c. c :- not b."));
    auto r3  = balanceBipartition(ex3);
    REQUIRE(std::holds_alternative<Bipartition>(r3));
    CHECK(std::get<Bipartition>(r3).plus == std::vector<Atom>{0, 2});
    CHECK(std::get<Bipartition>(r3).minus == std::vector<Atom>{1});

    auto r2 = balanceBipartition(figure2a());
    REQUIRE(std::holds_alternative<Bipartition>(r2));
    CHECK(std::get<Bipartition>(r2).plus == std::vector<Atom>{0, 2});

    auto two = balanceBipartition(SignedDigraph(2, {{0, 1, P}, {1, 0, P}}));
    REQUIRE(std::holds_alternative<Bipartition>(two));
    CHECK(std::get<Bipartition>(two).plus == std::vector<Atom>{0, 1});
    CHECK(std::get<Bipartition>(two).minus.empty());

    CHECK(std::holds_alternative<std::string>(balanceBipartition(figure1a())));
    CHECK(std::holds_alternative<std::string>(balanceBipartition(figure2b())));
    CHECK(std::holds_alternative<std::string>(balanceBipartition(SignedDigraph(1))));
}

TEST_CASE("single cycle") {
    CHECK(singleCycleSign(figure2a()) == P);
    CHECK(singleCycleSign(figure2b()) == M);
    CHECK_FALSE(singleCycleSign(figure1a()));
    CHECK_FALSE(singleCycleSign(SignedDigraph{}));
    CHECK(singleCycleSign(SignedDigraph(1, {{0, 0, M}})) == M);
    CHECK_FALSE(singleCycleSign(SignedDigraph(2, {{0, 1, P}, {0, 1, M}, {1, 0, P}})));
}

TEST_CASE("DOT export") {
    auto g = SignedDigraph(2, {{0, 1, M}, {1, 0, P}}, {"x", "y"});
    CHECK(toDot(g, "g", "note") ==
          "// note\ndigraph g {\n  \"x\";\n  \"y\";\n  \"x\" -> \"y\" [style=dashed, label=\"-\"];\n  \"y\" -> \"x\";\n}\n");
    CHECK(toDot(SignedDigraph{}) == "digraph G {\n}\n");
}

TEST_CASE("cycle queries agree with exhaustive enumeration") {
    Rng rng(2024);
    for (int k = 0; k < 400; ++k) {
        auto g    = testing::randomDigraph(rng);
        auto list = oracle::enumerateSignedCycles(g);
        REQUIRE_FALSE(list.truncated);
        bool anyNeg = std::ranges::any_of(list.cycles, [](const CycleWitness& c) { return c.sign() == M; });
        bool anyPos = std::ranges::any_of(list.cycles, [](const CycleWitness& c) { return c.sign() == P; });

        auto neg = hasNegativeCycle(g);
        REQUIRE(neg.kind == (anyNeg ? CycleAnswer::yes : CycleAnswer::no));
        if (anyNeg) {
            REQUIRE(neg.witness->isValidIn(g));
            REQUIRE(neg.witness->sign() == M);
        }
        auto pos = hasPositiveCycle(g);
        REQUIRE(pos.kind != CycleAnswer::unknown);
        REQUIRE(pos.kind == (anyPos ? CycleAnswer::yes : CycleAnswer::no));
        if (anyPos) {
            REQUIRE(pos.witness->isValidIn(g));
            REQUIRE(pos.witness->sign() == P);
        }
        REQUIRE(isAcyclic(g) == list.cycles.empty());
    }
}

TEST_CASE("graph invariants on random inputs") {
    Rng rng(99);
    for (int k = 0; k < 300; ++k) {
        auto g   = testing::randomDigraph(rng);
        auto fvs = positiveFeedbackVertexSet(g);
        REQUIRE(hasPositiveCycle(g.withoutVertices(fvs.vertices)).kind == CycleAnswer::no);

        if (auto split = balanceBipartition(g); std::holds_alternative<Bipartition>(split)) {
            const auto&       b = std::get<Bipartition>(split);
            std::vector<bool> inPlus(g.vertexCount(), false);
            for (Atom v : b.plus) {
                inPlus[v] = true;
            }
            for (const auto& a : g.arcs()) {
                REQUIRE((inPlus[a.source] == inPlus[a.target]) == (a.sign == P));
            }
        }
        if (auto s = singleCycleSign(g)) {
            REQUIRE((g.arcCount(M) % 2 == 1) == (*s == M));
        }

        auto p = testing::randomProgram(rng);
        auto d = dependenceGraph(p);
        REQUIRE(positiveDependenceGraph(p).isSubgraphOf(d));
        REQUIRE(positiveDependenceGraph(p).vertexCount() == d.vertexCount());
        if (isLocallyStratified(p)) {
            REQUIRE(hasNegativeCycle(d).kind == CycleAnswer::no);
        }
    }
}

TEST_CASE("the two-triangle bowtie is not mistaken for a positive cycle") {
    auto b    = bowtie();
    auto list = oracle::enumerateSignedCycles(b);
    REQUIRE(list.cycles.size() == 2);
    CHECK(list.cycles[0].sign() == M);
    CHECK(list.cycles[1].sign() == M);
    CHECK(hasPositiveCycle(b).kind == CycleAnswer::no);
    CHECK(positiveFeedbackVertexSet(b).vertices.empty());
}
