// Least fixpoint of a program over quasi-interpretations (rules with purely
// negative bodies), and stable models as supported models of that fixpoint.
#pragma once

#include <lpbn/boolean_network.h>
#include <lpbn/program.h>

#include <cstdint>
#include <set>
#include <vector>

namespace lpbn {

/// `head :- not nbody.`
struct QuasiRule {
    Atom              head = 0;
    std::vector<Atom> nbody; // sorted, duplicate free
    auto              operator<=>(const QuasiRule&) const = default;
};

using QuasiProgram = std::set<QuasiRule>;

inline constexpr std::uint64_t defaultLfpBudget = 100'000;

/// Resolves every rule of `p` against quasi-rules of `q` for each positive
/// body atom. Throws BudgetExhausted if more than `budget` candidate
/// resolvents would be produced.
QuasiProgram tpTransform(const Program& p, const QuasiProgram& q, std::uint64_t budget = defaultLfpBudget);

/// Iterates tpTransform from the empty set to its fixpoint. `budget` bounds
/// the number of quasi-rules.
QuasiProgram leastFixpoint(const Program& p, std::uint64_t budget = defaultLfpBudget);

/// The quasi-rules as a program over the atom table of `source`.
Program toProgram(const AtomTable& atoms, const QuasiProgram& q);

/// Fixed points of the encoding of lfp(p), which are the stable models of p.
std::vector<Interpretation> stableViaLfp(const Program& p, std::uint64_t lfpBudget = defaultLfpBudget,
                                         std::uint64_t searchBudget = defaultSearchBudget);

} // namespace lpbn
