// Signed directed graphs and the cycle-sign structure computed on them.
#pragma once

#include <lpbn/program.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lpbn {

enum class Sign : std::uint8_t { plus, minus };

constexpr Sign operator*(Sign lhs, Sign rhs) { return lhs == rhs ? Sign::plus : Sign::minus; }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char signChar(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct Arc {
    Atom source = 0;
    Atom target = 0;
    Sign sign   = Sign::plus;
    auto operator<=>(const Arc&) const = default;
};

/// Vertices are 0..n-1. Arcs are kept sorted and duplicate free; (u,v,+) and
/// (u,v,-) may coexist and self-loops are allowed.
class SignedDigraph {
public:
    struct Edge {
        Atom vertex;
        Sign sign;
    };

    SignedDigraph() = default;
    explicit SignedDigraph(std::size_t vertexCount, std::vector<std::string> names = {});
    SignedDigraph(std::size_t vertexCount, std::vector<Arc> arcs, std::vector<std::string> names = {});

    [[nodiscard]] std::size_t              vertexCount() const { return out_.size(); }
    [[nodiscard]] std::span<const Arc>     arcs() const { return arcs_; }
    [[nodiscard]] std::span<const Edge>    successors(Atom v) const { return out_[v]; }
    [[nodiscard]] std::span<const Edge>    predecessors(Atom v) const { return in_[v]; }
    [[nodiscard]] bool                     hasArc(const Arc& a) const;
    [[nodiscard]] std::size_t              arcCount(Sign s) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] std::string              vertexName(Atom v) const;

    /// Same vertex ids; every arc incident to a vertex in `removed` is dropped.
    [[nodiscard]] SignedDigraph withoutVertices(std::span<const Atom> removed) const;
    /// Keeps only arcs of sign `s`.
    [[nodiscard]] SignedDigraph restrictedTo(Sign s) const;
    /// True if every arc of this graph is an arc of `other` (same vertex count).
    [[nodiscard]] bool isSubgraphOf(const SignedDigraph& other) const;

private:
    std::vector<Arc>               arcs_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
    std::vector<std::string>       names_;
};

/// A simple cycle: vertices[0] == vertices.back(), signs[k] labels the arc
/// vertices[k] -> vertices[k+1].
struct CycleWitness {
    std::vector<Atom> vertices;
    std::vector<Sign> signs;

    [[nodiscard]] std::size_t length() const { return signs.size(); }
    [[nodiscard]] Sign        sign() const;
    /// Checks closure, simplicity and that every recorded arc exists in `g`.
    [[nodiscard]] bool isValidIn(const SignedDigraph& g) const;
    auto operator<=>(const CycleWitness&) const = default;
};

/// Result of a cycle query. `unknown` means a search budget ran out.
struct CycleAnswer {
    enum Kind : std::uint8_t { no, yes, unknown };
    Kind                        kind = no;
    std::optional<CycleWitness> witness;

    static CycleAnswer none() { return {no, std::nullopt}; }
    static CycleAnswer found(CycleWitness w) { return {yes, std::move(w)}; }
    static CycleAnswer exhausted() { return {unknown, std::nullopt}; }
};

const char* toString(CycleAnswer::Kind k);

inline constexpr std::uint64_t defaultCycleBudget = 1'000'000;

SignedDigraph dependenceGraph(const Program& p);
SignedDigraph positiveDependenceGraph(const Program& p);

/// Tarjan; components in reverse topological order of the condensation
/// (sinks first), vertices ascending within each component.
std::vector<std::vector<Atom>> stronglyConnectedComponents(const SignedDigraph& g);
/// Component index per vertex, consistent with stronglyConnectedComponents.
std::vector<std::size_t> componentIndex(const SignedDigraph& g);

bool isAcyclic(const SignedDigraph& g);
bool isStronglyConnected(const SignedDigraph& g);
/// Some simple cycle of `g`, if any.
std::optional<CycleWitness> findCycle(const SignedDigraph& g);

/// Exact; never answers unknown.
CycleAnswer hasNegativeCycle(const SignedDigraph& g);
/// Exact whenever the answer is yes or no; `budget` bounds the number of
/// simple cycles enumerated in the last resort search.
CycleAnswer hasPositiveCycle(const SignedDigraph& g, std::uint64_t budget = defaultCycleBudget);

/// No pair of distinct vertices joined by arcs of both signs.
bool isSignDefinite(const SignedDigraph& g);
/// No negative arc of dg(p) lies on a cycle.
bool isLocallyStratified(const Program& p);

struct FeedbackSet {
    std::vector<Atom> vertices;
    /// The positive cycle search ran out of budget and the set was completed
    /// to a full feedback vertex set instead.
    bool acyclicFallback = false;
};
/// Greedy: while a positive cycle remains, remove its vertex of largest
/// total degree (ties to the smaller id).
FeedbackSet positiveFeedbackVertexSet(const SignedDigraph& g, std::uint64_t budget = defaultCycleBudget);

struct Bipartition {
    std::vector<Atom> plus;  // contains the smallest vertex
    std::vector<Atom> minus;
};
/// Reason string when the preconditions (strongly connected, at least one
/// arc, no negative cycle) do not hold.
using BipartitionResult = std::variant<Bipartition, std::string>;
BipartitionResult balanceBipartition(const SignedDigraph& g);

/// The sign of the cycle if `g` is exactly one simple cycle through all of
/// its (at least one) vertices.
std::optional<Sign> singleCycleSign(const SignedDigraph& g);

/// Graphviz rendering: positive arcs solid, negative arcs dashed with label "-".
std::string toDot(const SignedDigraph& g, std::string_view graphName = "G", std::string_view comment = {});

} // namespace lpbn
