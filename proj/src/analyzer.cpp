#include <lpbn/analyzer.h>
#include <lpbn/oracle.h>

#include <algorithm>

namespace lpbn {

/////////////////////////////////////////////////////////////////////////////////////////
// CountInterval
/////////////////////////////////////////////////////////////////////////////////////////
CountInterval CountInterval::upToPowerOfTwo(std::size_t k) {
    if (k >= 64) {
        return atLeast(0);
    }
    return between(0, std::uint64_t{1} << k);
}

CountInterval CountInterval::intersect(const CountInterval& other) const {
    CountInterval out{std::max(lo, other.lo), hi};
    if (other.hi && (!out.hi || *other.hi < *out.hi)) {
        out.hi = other.hi;
    }
    return out;
}

std::string CountInterval::describe() const {
    if (!hi) {
        return "at least " + std::to_string(lo);
    }
    if (*hi == lo) {
        return "exactly " + std::to_string(lo);
    }
    return "between " + std::to_string(lo) + " and " + std::to_string(*hi);
}

/////////////////////////////////////////////////////////////////////////////////////////
// Names
/////////////////////////////////////////////////////////////////////////////////////////
const char* toString(TheoremTag t) {
    switch (t) {
        case TheoremTag::fages            : return "Fages";
        case TheoremTag::acyclic          : return "Acyclic";
        case TheoremTag::singlePosCycle   : return "SinglePosCycle";
        case TheoremTag::singleNegCycle   : return "SingleNegCycle";
        case TheoremTag::noPosCycle       : return "NoPosCycle";
        case TheoremTag::noPosCycleNoFact : return "NoPosCycleNoFact";
        case TheoremTag::pfvsBound        : return "PfvsBound";
        case TheoremTag::noNegCycle       : return "NoNegCycle";
        case TheoremTag::locallyStratified: return "LocallyStratified";
        case TheoremTag::complementaryPair: return "ComplementaryPair";
    }
    return "?";
}

const char* toString(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::fired        : return "fired";
        case VerdictStatus::notApplicable: return "not-applicable";
        case VerdictStatus::unknown      : return "unknown";
    }
    return "?";
}

const char* toString(SolveMethod m) {
    switch (m) {
        case SolveMethod::fixedpointFilter: return "fixedpoint-filter";
        case SolveMethod::lfp             : return "lfp";
        case SolveMethod::bruteforce      : return "bruteforce";
    }
    return "?";
}

std::optional<SolveMethod> parseSolveMethod(std::string_view name) {
    for (auto m : {SolveMethod::fixedpointFilter, SolveMethod::lfp, SolveMethod::bruteforce}) {
        if (name == toString(m)) {
            return m;
        }
    }
    return std::nullopt;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solving
/////////////////////////////////////////////////////////////////////////////////////////
Solution solve(const Program& p, SolveMethod method, const Budgets& budgets) {
    Solution out;
    out.method = method;
    switch (method) {
        case SolveMethod::fixedpointFilter: {
            const bool tight = isAcyclic(positiveDependenceGraph(p));
            auto       keep  = [&](std::vector<State> states) {
                out.candidates    = states.size();
                out.filterSkipped = tight;
                if (!tight) {
                    std::erase_if(states, [&](const State& s) { return !isStableModel(p, s); });
                }
                return states;
            };
            try {
                out.models = keep(fixedPoints(encode(p), budgets.search));
            }
            catch (const BudgetExhausted& e) {
                out.models   = keep(e.partial());
                out.complete = false;
            }
            break;
        }
        case SolveMethod::lfp:
            try {
                out.models = stableViaLfp(p, budgets.lfp, budgets.search);
            }
            catch (const BudgetExhausted& e) {
                out.models = e.partial();
                std::erase_if(out.models, [&](const State& s) { return !isStableModel(p, s); });
                out.complete = false;
            }
            break;
        case SolveMethod::bruteforce:
            try {
                out.models = oracle::enumerateStable(p);
            }
            catch (const oracle::SizeCapExceeded&) {
                out.complete = false;
            }
            break;
    }
    return out;
}

std::variant<ComplementaryPair, std::string> constructComplementaryPair(const Program& p) {
    // Facts would make some update function constant and break the
    // complementary fixed-point construction.
    if (p.hasFact()) {
        return std::string("program has a fact");
    }
    if (!isAcyclic(positiveDependenceGraph(p))) {
        return std::string("positive dependence graph has a cycle");
    }
    auto dg = dependenceGraph(p);
    if (hasNegativeCycle(dg).kind == CycleAnswer::yes) {
        return std::string("dependence graph has a negative cycle");
    }
    auto split = balanceBipartition(dg);
    if (auto* reason = std::get_if<std::string>(&split)) {
        return "dependence graph: " + *reason;
    }
    const auto&       classes = std::get<Bipartition>(split);
    ComplementaryPair out{Interpretation(p.atomCount(), classes.plus), Interpretation(p.atomCount(), classes.minus)};
    if (!isStableModel(p, out.first) || !isStableModel(p, out.second)) {
        throw SoundnessFailure("complementary pair from the balance bipartition is not stable");
    }
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// analyze
/////////////////////////////////////////////////////////////////////////////////////////
const Verdict* AnalysisReport::find(TheoremTag t) const {
    auto it = std::ranges::find(verdicts, t, &Verdict::tag);
    return it == verdicts.end() ? nullptr : &*it;
}

bool AnalysisReport::budgetExhausted() const {
    return std::ranges::any_of(verdicts, [](const Verdict& v) { return v.status == VerdictStatus::unknown; }) ||
           (exact && !exact->complete);
}

namespace {
Verdict fired(TheoremTag tag, std::optional<CountInterval> interval) {
    return {tag, VerdictStatus::fired, interval, {}, {}, {}, std::nullopt, {}};
}
Verdict notApplicable(TheoremTag tag, std::string note = {}) {
    Verdict v{tag, VerdictStatus::notApplicable, std::nullopt, {}, {}, {}, std::nullopt, std::move(note)};
    return v;
}
Verdict unknown(TheoremTag tag, std::string note) {
    return {tag, VerdictStatus::unknown, std::nullopt, {}, {}, {}, std::nullopt, std::move(note)};
}

ProgramStats programStats(const Program& p) {
    ProgramStats s;
    s.atoms    = p.atomCount();
    s.rules    = p.rules().size();
    s.facts    = p.factCount();
    s.positive = p.isPositive();
    std::vector<bool> headed(p.atomCount(), false);
    for (const auto& r : p.rules()) {
        headed[r.head] = true;
    }
    s.headlessAtoms = static_cast<std::size_t>(std::ranges::count(headed, false));
    return s;
}

GraphStats graphStats(const SignedDigraph& dg, bool pdgAcyclic) {
    GraphStats s;
    s.vertices     = dg.vertexCount();
    s.positiveArcs = dg.arcCount(Sign::plus);
    s.negativeArcs = dg.arcCount(Sign::minus);
    s.sccs         = stronglyConnectedComponents(dg).size();
    s.signDefinite = isSignDefinite(dg);
    s.pdgAcyclic   = pdgAcyclic;
    for (Atom v = 0; v < dg.vertexCount(); ++v) {
        std::vector<Atom> preds;
        for (const auto& e : dg.predecessors(v)) {
            preds.push_back(e.vertex);
        }
        std::ranges::sort(preds);
        auto distinct = static_cast<std::size_t>(std::unique(preds.begin(), preds.end()) - preds.begin());
        s.minInDegree = v == 0 ? distinct : std::min(s.minInDegree, distinct);
    }
    return s;
}
} // namespace

AnalysisReport analyze(const Program& p, const AnalysisOptions& options) {
    AnalysisReport report;
    report.atomNames = p.atoms().names();

    const auto n          = p.atomCount();
    const auto dg         = dependenceGraph(p);
    const bool pdgAcyclic = isAcyclic(dg.restrictedTo(Sign::plus));
    const bool hasFact    = p.hasFact();
    report.program        = programStats(p);
    report.graph          = graphStats(dg, pdgAcyclic);
    report.tight          = pdgAcyclic;
    auto& verdicts        = report.verdicts;

    // Tightness: stable = supported.
    verdicts.push_back(pdgAcyclic ? fired(TheoremTag::fages, std::nullopt)
                                  : notApplicable(TheoremTag::fages, "positive dependence graph has a cycle"));
    if (!pdgAcyclic) {
        verdicts.back().cycles.push_back(*findCycle(dg.restrictedTo(Sign::plus)));
    }

    // Acyclic dependence graph: exactly one.
    verdicts.push_back(isAcyclic(dg) ? fired(TheoremTag::acyclic, CountInterval::exactly(1))
                                     : notApplicable(TheoremTag::acyclic, "dependence graph has a cycle"));

    // Dependence graph is one cycle.
    const auto single = singleCycleSign(dg);
    if (single && !hasFact) {
        auto cycle = *findCycle(dg);
        if (*single == Sign::plus) {
            Verdict v;
            if (dg.arcCount(Sign::minus) > 0) {
                v = fired(TheoremTag::singlePosCycle, CountInterval::exactly(2));
            }
            else {
                v = fired(TheoremTag::singlePosCycle, CountInterval::exactly(1));
                v.models.emplace_back(n);
            }
            v.cycles.push_back(cycle);
            verdicts.push_back(std::move(v));
            verdicts.push_back(notApplicable(TheoremTag::singleNegCycle, "the cycle is positive"));
        }
        else {
            verdicts.push_back(notApplicable(TheoremTag::singlePosCycle, "the cycle is negative"));
            auto v = fired(TheoremTag::singleNegCycle, CountInterval::exactly(0));
            v.cycles.push_back(cycle);
            verdicts.push_back(std::move(v));
        }
    }
    else {
        std::string why = single ? "program has a fact" : "dependence graph is not a single cycle";
        verdicts.push_back(notApplicable(TheoremTag::singlePosCycle, why));
        verdicts.push_back(notApplicable(TheoremTag::singleNegCycle, why));
    }

    // No positive cycle: at most one; none at all without facts when every atom is headed.
    const auto positive = hasPositiveCycle(dg, options.budgets.cycles);
    switch (positive.kind) {
        case CycleAnswer::no: {
            verdicts.push_back(fired(TheoremTag::noPosCycle, CountInterval::between(0, 1)));
            if (n == 0) {
                verdicts.push_back(notApplicable(TheoremTag::noPosCycleNoFact, "program has no atoms"));
            }
            else if (hasFact) {
                verdicts.push_back(notApplicable(TheoremTag::noPosCycleNoFact, "program has a fact"));
            }
            else if (!p.allAtomsHeaded()) {
                verdicts.push_back(notApplicable(TheoremTag::noPosCycleNoFact, "some atom heads no rule"));
            }
            else {
                verdicts.push_back(fired(TheoremTag::noPosCycleNoFact, CountInterval::exactly(0)));
            }
            break;
        }
        case CycleAnswer::yes: {
            auto v = notApplicable(TheoremTag::noPosCycle, "dependence graph has a positive cycle");
            v.cycles.push_back(*positive.witness);
            verdicts.push_back(std::move(v));
            verdicts.push_back(notApplicable(TheoremTag::noPosCycleNoFact, "dependence graph has a positive cycle"));
            break;
        }
        case CycleAnswer::unknown:
            verdicts.push_back(unknown(TheoremTag::noPosCycle, "positive cycle search budget exhausted"));
            verdicts.push_back(unknown(TheoremTag::noPosCycleNoFact, "positive cycle search budget exhausted"));
            break;
    }

    // Positive feedback vertex set bound.
    {
        auto fvs = positiveFeedbackVertexSet(dg, options.budgets.cycles);
        auto v   = fired(TheoremTag::pfvsBound, CountInterval::upToPowerOfTwo(fvs.vertices.size()));
        v.vertices = fvs.vertices;
        if (fvs.acyclicFallback) {
            v.note = "positive cycle search budget exhausted; set hits every cycle";
        }
        verdicts.push_back(std::move(v));
    }

    // No negative cycle: at least one.
    const auto negative = hasNegativeCycle(dg);
    if (negative.kind == CycleAnswer::no) {
        verdicts.push_back(fired(TheoremTag::noNegCycle, CountInterval::atLeast(1)));
    }
    else {
        auto v = notApplicable(TheoremTag::noNegCycle, "dependence graph has a negative cycle");
        v.cycles.push_back(*negative.witness);
        verdicts.push_back(std::move(v));
    }

    verdicts.push_back(isLocallyStratified(p)
                           ? fired(TheoremTag::locallyStratified, CountInterval::exactly(1))
                           : notApplicable(TheoremTag::locallyStratified, "a negative arc lies on a cycle"));

    // Strongly connected, balanced, tight: two complementary models.
    auto pair = constructComplementaryPair(p);
    if (auto* models = std::get_if<ComplementaryPair>(&pair)) {
        auto v = fired(TheoremTag::complementaryPair, CountInterval::exactly(2));
        v.models      = {models->first, models->second};
        v.bipartition = std::get<Bipartition>(balanceBipartition(dg));
        verdicts.push_back(std::move(v));
    }
    else {
        verdicts.push_back(notApplicable(TheoremTag::complementaryPair, std::get<std::string>(pair)));
    }

    report.combined = CountInterval::atLeast(0);
    for (const auto& v : verdicts) {
        if (v.status == VerdictStatus::fired && v.interval) {
            report.combined = report.combined.intersect(*v.interval);
        }
    }
    if (report.combined.empty()) {
        throw SoundnessFailure("verdict intervals have an empty intersection");
    }

    if (options.solve) {
        if (n > options.solveCap) {
            report.exactNote = std::to_string(n) + " atoms exceed the exact-solve cap of " +
                               std::to_string(options.solveCap);
        }
        else {
            report.exact = solve(p, options.method, options.budgets);
            const auto& models = report.exact->models;
            if (report.exact->complete && !report.combined.contains(models.size())) {
                throw SoundnessFailure("exact model count " + std::to_string(models.size()) +
                                       " outside the derived interval");
            }
            for (const auto& v : verdicts) {
                for (const auto& m : v.models) {
                    if (report.exact->complete && !std::ranges::binary_search(models, m)) {
                        throw SoundnessFailure(std::string("model exhibited by ") + toString(v.tag) +
                                               " is missing from the exact solution");
                    }
                }
            }
        }
    }
    return report;
}

} // namespace lpbn
