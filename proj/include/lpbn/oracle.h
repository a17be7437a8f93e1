// Brute-force ground truth for small instances. Nothing here shares code
// with the search procedures it is used to check.
#pragma once

#include <lpbn/boolean_network.h>
#include <lpbn/program.h>
#include <lpbn/signed_digraph.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lpbn::oracle {

inline constexpr std::size_t maxAtoms = 22;

class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scans all 2^n interpretations; throws SizeCapExceeded above maxAtoms.
std::vector<Interpretation> enumerateStable(const Program& p);
std::vector<Interpretation> enumerateSupported(const Program& p);
std::vector<State>          enumerateFixedPoints(const BooleanNetwork& f);

struct CycleList {
    std::vector<CycleWitness> cycles;
    /// The cap was hit; `cycles` is a prefix of the full list.
    bool truncated = false;
};

/// Every simple cycle (one entry per choice of parallel arc signs), each
/// starting at its smallest vertex, sorted lexicographically.
CycleList enumerateSignedCycles(const SignedDigraph& g, std::size_t cap = 1'000'000);

} // namespace lpbn::oracle
