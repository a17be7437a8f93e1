#include <lpbn/boolean_network.h>

#include <algorithm>
#include <sstream>

namespace lpbn {

bool Term::contradictory() const {
    // Both lists are sorted.
    auto p = positive.begin();
    auto n = negative.begin();
    while (p != positive.end() && n != negative.end()) {
        if (*p == *n) {
            return true;
        }
        *p < *n ? ++p : ++n;
    }
    return false;
}

bool Term::holds(const State& s) const {
    return std::ranges::all_of(positive, [&](Atom a) { return s.contains(a); }) &&
           std::ranges::none_of(negative, [&](Atom a) { return s.contains(a); });
}

bool DnfFunction::evaluate(const State& s) const {
    return std::ranges::any_of(terms, [&](const Term& t) { return t.holds(s); });
}

std::vector<Atom> DnfFunction::support() const {
    std::vector<Atom> out;
    for (const auto& t : terms) {
        out.insert(out.end(), t.positive.begin(), t.positive.end());
        out.insert(out.end(), t.negative.begin(), t.negative.end());
    }
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BooleanNetwork::BooleanNetwork(std::vector<DnfFunction> functions, std::vector<std::string> names)
    : functions_(std::move(functions))
    , names_(std::move(names)) {}

std::string BooleanNetwork::variableName(Atom v) const {
    return v < names_.size() ? names_[v] : std::to_string(v);
}

State BooleanNetwork::step(const State& s) const {
    State next(variableCount());
    for (Atom v = 0; v < variableCount(); ++v) {
        next.set(v, evaluate(v, s));
    }
    return next;
}

bool BooleanNetwork::isFixedPoint(const State& s) const {
    for (Atom v = 0; v < variableCount(); ++v) {
        if (evaluate(v, s) != s.contains(v)) {
            return false;
        }
    }
    return true;
}

namespace {
std::string formatDnf(const DnfFunction& fn, const std::vector<std::string>& names) {
    if (fn.terms.empty()) {
        return "0";
    }
    std::ostringstream out;
    const char*        or_ = "";
    for (const auto& t : fn.terms) {
        out << std::exchange(or_, " | ");
        if (t.positive.empty() && t.negative.empty()) {
            out << "1";
            continue;
        }
        // Literals in atom id order, a positive literal before its negation.
        const char* and_ = "";
        auto        p    = t.positive.begin();
        auto        n    = t.negative.begin();
        while (p != t.positive.end() || n != t.negative.end()) {
            out << std::exchange(and_, " & ");
            if (n == t.negative.end() || (p != t.positive.end() && *p <= *n)) {
                out << names.at(*p++);
            }
            else {
                out << '!' << names.at(*n++);
            }
        }
    }
    return out.str();
}

std::vector<DnfFunction> encodeFunctions(const Program& p) {
    std::vector<DnfFunction> fns(p.atomCount());
    for (const auto& r : p.rules()) {
        fns[r.head].terms.push_back({r.pbody, r.nbody});
    }
    return fns;
}
} // namespace

std::string BooleanNetwork::formatFunction(Atom v) const { return formatDnf(function(v), names_); }

BooleanNetwork encode(const Program& p) { return {encodeFunctions(p), p.atoms().names()}; }

SignedDigraph influenceGraph(const BooleanNetwork& f, InfluenceMode mode, std::size_t supportCap) {
    std::vector<Arc> arcs;
    for (Atom v = 0; v < f.variableCount(); ++v) {
        const auto& fn = f.function(v);
        if (mode == InfluenceMode::syntactic) {
            for (const auto& t : fn.terms) {
                for (Atom u : t.positive) {
                    arcs.push_back({u, v, Sign::plus});
                }
                for (Atom u : t.negative) {
                    arcs.push_back({u, v, Sign::minus});
                }
            }
            continue;
        }
        auto support = fn.support();
        if (support.size() > supportCap) {
            throw SupportCapExceeded("support of f_" + f.variableName(v) + " has " + std::to_string(support.size()) +
                                     " variables, cap is " + std::to_string(supportCap));
        }
        // Terms as bit masks over the local support indices.
        auto local = [&](Atom a) {
            return std::uint64_t{1} << static_cast<std::uint64_t>(std::ranges::lower_bound(support, a) - support.begin());
        };
        std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
        for (const auto& t : fn.terms) {
            if (t.contradictory()) {
                continue;
            }
            std::uint64_t pos = 0, neg = 0;
            for (Atom a : t.positive) {
                pos |= local(a);
            }
            for (Atom a : t.negative) {
                neg |= local(a);
            }
            masks.emplace_back(pos, neg);
        }
        const std::uint64_t  states = std::uint64_t{1} << support.size();
        std::vector<uint8_t> value(states, 0);
        for (std::uint64_t x = 0; x < states; ++x) {
            value[x] = std::ranges::any_of(masks, [x](const auto& m) {
                return (x & m.first) == m.first && (x & m.second) == 0;
            });
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            bool                inc = false, dec = false;
            for (std::uint64_t x = 0; x < states && !(inc && dec); ++x) {
                if ((x & bit) != 0) {
                    continue;
                }
                inc = inc || value[x] < value[x | bit];
                dec = dec || value[x] > value[x | bit];
            }
            if (inc) {
                arcs.push_back({support[i], v, Sign::plus});
            }
            if (dec) {
                arcs.push_back({support[i], v, Sign::minus});
            }
        }
    }
    return {f.variableCount(), std::move(arcs), f.names()};
}

InfluenceGraph influenceGraphWithFallback(const BooleanNetwork& f, std::size_t supportCap) {
    try {
        return {influenceGraph(f, InfluenceMode::semantic, supportCap), false};
    }
    catch (const SupportCapExceeded&) {
        return {influenceGraph(f, InfluenceMode::syntactic), true};
    }
}

bool CompletionFormula::satisfiedBy(const State& s) const {
    for (Atom a = 0; a < rhs.size(); ++a) {
        if (rhs[a].evaluate(s) != s.contains(a)) {
            return false;
        }
    }
    return true;
}

std::string CompletionFormula::format() const {
    std::ostringstream out;
    for (Atom a = 0; a < rhs.size(); ++a) {
        out << names.at(a) << " <-> " << formatDnf(rhs[a], names) << '\n';
    }
    return out.str();
}

CompletionFormula clarkCompletion(const Program& p) { return {encodeFunctions(p), p.atoms().names()}; }

} // namespace lpbn
