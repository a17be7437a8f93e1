// Static verdicts on the number of stable models, derived from the
// signed-cycle structure of the dependence graph, plus exact solving.
#pragma once

#include <lpbn/boolean_network.h>
#include <lpbn/fixpoint.h>
#include <lpbn/program.h>
#include <lpbn/signed_digraph.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lpbn {

/// [lo, hi] with hi == nullopt meaning unbounded.
struct CountInterval {
    std::uint64_t                lo = 0;
    std::optional<std::uint64_t> hi;

    static CountInterval exactly(std::uint64_t n) { return {n, n}; }
    static CountInterval atLeast(std::uint64_t n) { return {n, std::nullopt}; }
    static CountInterval between(std::uint64_t lo, std::uint64_t hi) { return {lo, hi}; }
    /// [0, 2^k], unbounded once 2^k no longer fits.
    static CountInterval upToPowerOfTwo(std::size_t k);

    [[nodiscard]] bool          empty() const { return hi && *hi < lo; }
    [[nodiscard]] bool          contains(std::uint64_t n) const { return n >= lo && (!hi || n <= *hi); }
    [[nodiscard]] CountInterval intersect(const CountInterval& other) const;
    /// "exactly 2", "at least 1", "between 0 and 4"
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const CountInterval&, const CountInterval&) = default;
};

enum class TheoremTag : std::uint8_t {
    fages,
    acyclic,
    singlePosCycle,
    singleNegCycle,
    noPosCycle,
    noPosCycleNoFact,
    pfvsBound,
    noNegCycle,
    locallyStratified,
    complementaryPair,
};

enum class VerdictStatus : std::uint8_t { fired, notApplicable, unknown };

const char* toString(TheoremTag t);
const char* toString(VerdictStatus s);

struct Verdict {
    TheoremTag                   tag;
    VerdictStatus                status = VerdictStatus::notApplicable;
    /// Present only when fired and the theorem bounds the count.
    std::optional<CountInterval> interval;
    /// Stable models the theorem exhibits.
    std::vector<Interpretation>  models;
    /// Cycles used as evidence, or refuting the precondition.
    std::vector<CycleWitness>    cycles;
    /// Feedback vertex set for PfvsBound.
    std::vector<Atom>            vertices;
    std::optional<Bipartition>   bipartition;
    std::string                  note;
};

enum class SolveMethod : std::uint8_t { fixedpointFilter, lfp, bruteforce };

const char*                toString(SolveMethod m);
std::optional<SolveMethod> parseSolveMethod(std::string_view name);

struct Budgets {
    std::uint64_t cycles = defaultCycleBudget;
    std::uint64_t search = defaultSearchBudget;
    std::uint64_t lfp    = defaultLfpBudget;
};

struct Solution {
    SolveMethod                 method = SolveMethod::fixedpointFilter;
    std::vector<Interpretation> models;
    /// Fixed points examined before filtering (fixedpoint-filter only).
    std::size_t                 candidates = 0;
    /// The program is tight, so every fixed point is stable and the
    /// stability check was skipped.
    bool                        filterSkipped = false;
    /// False if a budget ran out; `models` is then a partial list.
    bool                        complete = true;
};

/// Stable models of `p`, sorted by bit string. Never throws on budget
/// exhaustion; inspect Solution::complete instead.
Solution solve(const Program& p, SolveMethod method, const Budgets& budgets = {});

struct ComplementaryPair {
    Interpretation first;  // the class of the smallest atom
    Interpretation second;
};
/// Two complementary stable models built from the balance bipartition of
/// dg(p) without enumeration, or the reason it does not apply.
std::variant<ComplementaryPair, std::string> constructComplementaryPair(const Program& p);

/// A verdict or solver result contradicts another; always an implementation bug.
class SoundnessFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct AnalysisOptions {
    bool        solve    = false;
    SolveMethod method   = SolveMethod::fixedpointFilter;
    std::size_t solveCap = 20;
    Budgets     budgets;
};

struct ProgramStats {
    std::size_t atoms         = 0;
    std::size_t rules         = 0;
    std::size_t facts         = 0;
    std::size_t headlessAtoms = 0;
    bool        positive      = true;
};

struct GraphStats {
    std::size_t vertices      = 0;
    std::size_t positiveArcs  = 0;
    std::size_t negativeArcs  = 0;
    std::size_t sccs          = 0;
    /// Smallest number of distinct predecessors over all vertices.
    std::size_t minInDegree   = 0;
    bool        signDefinite  = true;
    bool        pdgAcyclic    = true;
};

struct AnalysisReport {
    std::vector<std::string> atomNames;
    ProgramStats             program;
    GraphStats               graph;
    /// pdg(P) is acyclic, so stable and supported models coincide.
    bool                     tight = false;
    std::vector<Verdict>     verdicts;
    CountInterval            combined;
    std::optional<Solution>  exact;
    /// Set when exact solving was requested but skipped.
    std::string              exactNote;

    [[nodiscard]] const Verdict* find(TheoremTag t) const;
    /// Some verdict is unknown or the exact solve ran out of budget.
    [[nodiscard]] bool budgetExhausted() const;
};

/// Evaluates every verdict and intersects their intervals. Throws
/// SoundnessFailure on any internal contradiction.
AnalysisReport analyze(const Program& p, const AnalysisOptions& options = {});

/// Stable JSON rendering with a fixed key order (see docs/report-format.md).
std::string toJson(const AnalysisReport& report, int indent = 2);
std::string toHuman(const AnalysisReport& report);

} // namespace lpbn
