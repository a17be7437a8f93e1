// Boolean-network encoding of a program: one DNF update function per atom,
// synchronous steps, fixed points, influence graphs and Clark completion.
#pragma once

#include <lpbn/program.h>
#include <lpbn/signed_digraph.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbn {

struct Term {
    std::vector<Atom> positive;
    std::vector<Atom> negative;

    /// An atom occurring in both literal sets makes the term unsatisfiable.
    [[nodiscard]] bool contradictory() const;
    [[nodiscard]] bool holds(const State& s) const;
    auto operator<=>(const Term&) const = default;
};

/// A disjunction of terms. No terms is constant 0; a term without literals
/// is constant 1. Terms are kept as written, never simplified.
struct DnfFunction {
    std::vector<Term> terms;

    [[nodiscard]] bool              evaluate(const State& s) const;
    /// Atoms occurring in some term, ascending.
    [[nodiscard]] std::vector<Atom> support() const;
    auto operator<=>(const DnfFunction&) const = default;
};

class BooleanNetwork {
public:
    BooleanNetwork() = default;
    BooleanNetwork(std::vector<DnfFunction> functions, std::vector<std::string> names);

    [[nodiscard]] std::size_t        variableCount() const { return functions_.size(); }
    [[nodiscard]] const DnfFunction& function(Atom v) const { return functions_.at(v); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] std::string        variableName(Atom v) const;

    [[nodiscard]] bool  evaluate(Atom v, const State& s) const { return function(v).evaluate(s); }
    [[nodiscard]] State step(const State& s) const;
    [[nodiscard]] bool  isFixedPoint(const State& s) const;
    /// "b | !b", "c", "0", "1", "a & !c | d".
    [[nodiscard]] std::string formatFunction(Atom v) const;

private:
    std::vector<DnfFunction> functions_;
    std::vector<std::string> names_;
};

/// f_v is the disjunction of the body formulas of the rules with head v; 0
/// for atoms heading no rule.
BooleanNetwork encode(const Program& p);

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, std::vector<State> partial = {})
        : std::runtime_error(what)
        , partial_(std::move(partial)) {}
    /// Results found before the budget ran out; not known to be complete.
    [[nodiscard]] const std::vector<State>& partial() const { return partial_; }

private:
    std::vector<State> partial_;
};

inline constexpr std::uint64_t defaultSearchBudget = 10'000'000;

/// All fixed points, sorted by bit string. Backtracks over variables in
/// ascending order (0 before 1) with propagation of v <-> f_v. `budget`
/// bounds the number of search nodes; throws BudgetExhausted.
std::vector<State> fixedPoints(const BooleanNetwork& f, std::uint64_t budget = defaultSearchBudget);

enum class InfluenceMode : std::uint8_t { semantic, syntactic };

inline constexpr std::size_t defaultSupportCap = 24;

class SupportCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// semantic: exact, by brute force over the support of each function;
/// throws SupportCapExceeded if some support is larger than `supportCap`.
/// syntactic: (u,v,+) iff u occurs positively in f_v, dually for -.
SignedDigraph influenceGraph(const BooleanNetwork& f, InfluenceMode mode, std::size_t supportCap = defaultSupportCap);

struct InfluenceGraph {
    SignedDigraph graph;
    /// True when the syntactic over-approximation had to be used.
    bool approximate = false;
};
/// Semantic influence graph, falling back to the syntactic one past the cap.
InfluenceGraph influenceGraphWithFallback(const BooleanNetwork& f, std::size_t supportCap = defaultSupportCap);

/// One equivalence `atom <-> rhs` per atom; right-hand sides equal encode(p).
struct CompletionFormula {
    std::vector<DnfFunction> rhs;
    std::vector<std::string> names;

    [[nodiscard]] bool        satisfiedBy(const State& s) const;
    [[nodiscard]] std::string format() const;
};

CompletionFormula clarkCompletion(const Program& p);

} // namespace lpbn
