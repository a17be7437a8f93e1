#include <lpbn/oracle.h>

#include <algorithm>
#include <string>

namespace lpbn::oracle {

namespace {
template <typename Keep>
std::vector<Interpretation> scan(std::size_t n, Keep keep) {
    if (n > maxAtoms) {
        throw SizeCapExceeded("brute force is limited to " + std::to_string(maxAtoms) + " atoms, got " +
                              std::to_string(n));
    }
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto i = Interpretation::fromMask(n, mask);
        if (keep(i)) {
            out.push_back(std::move(i));
        }
    }
    std::ranges::sort(out);
    return out;
}

// Direct transcription of the definitions: materialize the reduct and run
// naive rounds of the immediate-consequence step.
bool stableByDefinition(const Program& p, const Interpretation& i) {
    std::vector<const Rule*> kept;
    for (const auto& r : p.rules()) {
        if (std::ranges::none_of(r.nbody, [&](Atom a) { return i.contains(a); })) {
            kept.push_back(&r);
        }
    }
    Interpretation model(p.atomCount());
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule* r : kept) {
            if (!model.contains(r->head) && std::ranges::all_of(r->pbody, [&](Atom a) { return model.contains(a); })) {
                model.set(r->head);
                changed = true;
            }
        }
    }
    return model == i;
}

bool supportedByDefinition(const Program& p, const Interpretation& i) {
    auto bodyTrue = [&](const Rule& r) {
        return std::ranges::all_of(r.pbody, [&](Atom a) { return i.contains(a); }) &&
               std::ranges::none_of(r.nbody, [&](Atom a) { return i.contains(a); });
    };
    for (const auto& r : p.rules()) {
        if (bodyTrue(r) && !i.contains(r.head)) {
            return false;
        }
    }
    for (Atom a = 0; a < p.atomCount(); ++a) {
        if (i.contains(a) &&
            std::ranges::none_of(p.rules(), [&](const Rule& r) { return r.head == a && bodyTrue(r); })) {
            return false;
        }
    }
    return true;
}

class CycleCollector {
public:
    CycleCollector(const SignedDigraph& g, std::size_t cap) : g_(g), cap_(cap), onPath_(g.vertexCount(), false) {}

    CycleList run() {
        for (Atom s = 0; s < g_.vertexCount() && !out_.truncated; ++s) {
            start_ = s;
            path_  = {s};
            onPath_[s] = true;
            extend(s);
            onPath_[s] = false;
        }
        std::ranges::sort(out_.cycles);
        return std::move(out_);
    }

private:
    // Plain DFS over simple paths from start_ through larger vertices only.
    void extend(Atom v) {
        for (const auto& e : g_.successors(v)) {
            if (out_.truncated) {
                return;
            }
            if (e.vertex == start_) {
                if (out_.cycles.size() == cap_) {
                    out_.truncated = true;
                    return;
                }
                CycleWitness w{path_, signs_};
                w.vertices.push_back(start_);
                w.signs.push_back(e.sign);
                out_.cycles.push_back(std::move(w));
            }
            else if (e.vertex > start_ && !onPath_[e.vertex]) {
                onPath_[e.vertex] = true;
                path_.push_back(e.vertex);
                signs_.push_back(e.sign);
                extend(e.vertex);
                signs_.pop_back();
                path_.pop_back();
                onPath_[e.vertex] = false;
            }
        }
    }

    const SignedDigraph& g_;
    std::size_t          cap_;
    Atom                 start_ = 0;
    std::vector<Atom>    path_;
    std::vector<Sign>    signs_;
    std::vector<bool>    onPath_;
    CycleList            out_;
};
} // namespace

std::vector<Interpretation> enumerateStable(const Program& p) {
    return scan(p.atomCount(), [&](const Interpretation& i) { return stableByDefinition(p, i); });
}

std::vector<Interpretation> enumerateSupported(const Program& p) {
    return scan(p.atomCount(), [&](const Interpretation& i) { return supportedByDefinition(p, i); });
}

std::vector<State> enumerateFixedPoints(const BooleanNetwork& f) {
    return scan(f.variableCount(), [&](const State& s) {
        for (Atom v = 0; v < f.variableCount(); ++v) {
            if (f.function(v).evaluate(s) != s.contains(v)) {
                return false;
            }
        }
        return true;
    });
}

CycleList enumerateSignedCycles(const SignedDigraph& g, std::size_t cap) { return CycleCollector(g, cap).run(); }

} // namespace lpbn::oracle
