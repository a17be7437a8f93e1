// Cycle-sign detection: exact negative cycles through the parity-doubled
// graph, positive cycles through balance checks and bounded enumeration.
#include <lpbn/signed_digraph.h>

#include "graph_util.h"

#include <algorithm>
#include <deque>

namespace lpbn {

namespace {
/// Repeatedly splits a closed walk at a repeated vertex and keeps the part of
/// odd negative-arc parity until the walk is a simple cycle.
CycleWitness reduceToSimpleOddCycle(std::vector<Atom> walk, std::vector<Sign> signs) {
    for (;;) {
        const std::size_t len = signs.size();
        std::vector<std::size_t> firstSeen(*std::ranges::max_element(walk) + 1, SIZE_MAX);
        std::size_t i = SIZE_MAX, j = SIZE_MAX;
        for (std::size_t k = 0; k < len; ++k) {
            if (firstSeen[walk[k]] != SIZE_MAX) {
                i = firstSeen[walk[k]];
                j = k;
                break;
            }
            firstSeen[walk[k]] = k;
        }
        if (j == SIZE_MAX) {
            return {std::move(walk), std::move(signs)};
        }
        // inner = walk[i..j], outer = walk[0..i] + walk[j+1..len]
        std::vector<Atom> innerWalk(walk.begin() + i, walk.begin() + j + 1);
        std::vector<Sign> innerSigns(signs.begin() + i, signs.begin() + j);
        CycleWitness      inner{innerWalk, innerSigns};
        if (inner.sign() == Sign::minus) {
            walk  = std::move(innerWalk);
            signs = std::move(innerSigns);
        }
        else {
            std::vector<Atom> outerWalk(walk.begin(), walk.begin() + i + 1);
            outerWalk.insert(outerWalk.end(), walk.begin() + j + 1, walk.end());
            std::vector<Sign> outerSigns(signs.begin(), signs.begin() + i);
            outerSigns.insert(outerSigns.end(), signs.begin() + j, signs.end());
            walk  = std::move(outerWalk);
            signs = std::move(outerSigns);
        }
    }
}

/// Arcs whose endpoints both lie in the vertex set `inside`.
bool internalArc(const std::vector<bool>& inside, Atom u, Atom v) { return inside[u] && inside[v]; }

/// Two-coloring of one component consistent with arc signs; false if some
/// closed walk inside it is negative.
bool componentBalanced(const SignedDigraph& g, const std::vector<Atom>& comp, const std::vector<bool>& inside) {
    std::vector<int> color(g.vertexCount(), -1);
    std::deque<Atom> queue{comp.front()};
    color[comp.front()] = 0;
    while (!queue.empty()) {
        Atom v = queue.front();
        queue.pop_front();
        auto visit = [&](const SignedDigraph::Edge& e) {
            if (!internalArc(inside, v, e.vertex)) {
                return true;
            }
            int want = e.sign == Sign::plus ? color[v] : 1 - color[v];
            if (color[e.vertex] == -1) {
                color[e.vertex] = want;
                queue.push_back(e.vertex);
                return true;
            }
            return color[e.vertex] == want;
        };
        for (const auto& e : g.successors(v)) {
            if (!visit(e)) {
                return false;
            }
        }
        for (const auto& e : g.predecessors(v)) {
            if (!visit(e)) {
                return false;
            }
        }
    }
    return true;
}

/// Johnson's circuit enumeration restricted to one component, tracking the
/// negative-arc parity of the current path. Stops at the first positive
/// circuit or when `budget` circuits have been produced.
class PositiveCircuitSearch {
public:
    PositiveCircuitSearch(const SignedDigraph& g, std::uint64_t& budget)
        : g_(g)
        , budget_(budget)
        , blocked_(g.vertexCount(), false)
        , blockMap_(g.vertexCount())
        , allowed_(g.vertexCount(), false) {}

    CycleAnswer run(const std::vector<Atom>& comp) {
        for (Atom s : comp) {
            for (Atom v : comp) {
                allowed_[v] = v >= s;
                blocked_[v] = false;
                blockMap_[v].clear();
            }
            auto res = circuitsFrom(s);
            if (res.kind != CycleAnswer::no) {
                return res;
            }
        }
        return CycleAnswer::none();
    }

private:
    struct Frame {
        Atom        v;
        std::size_t edge  = 0;
        bool        found = false;
    };

    void unblock(Atom u) {
        std::vector<Atom> todo{u};
        blocked_[u] = false;
        while (!todo.empty()) {
            Atom x = todo.back();
            todo.pop_back();
            for (Atom w : blockMap_[x]) {
                if (blocked_[w]) {
                    blocked_[w] = false;
                    todo.push_back(w);
                }
            }
            blockMap_[x].clear();
        }
    }

    CycleAnswer circuitsFrom(Atom s) {
        std::vector<Frame> stack{{s}};
        std::vector<Sign>  pathSigns;
        std::vector<Sign>  parity{Sign::plus};
        blocked_[s] = true;
        while (!stack.empty()) {
            auto& fr    = stack.back();
            auto  succs = g_.successors(fr.v);
            if (fr.edge < succs.size()) {
                const auto& e = succs[fr.edge++];
                if (!allowed_[e.vertex]) {
                    continue;
                }
                if (e.vertex == s) {
                    fr.found = true;
                    if (budget_ == 0) {
                        return CycleAnswer::exhausted();
                    }
                    --budget_;
                    if (parity.back() * e.sign == Sign::plus) {
                        CycleWitness w;
                        for (const auto& f : stack) {
                            w.vertices.push_back(f.v);
                        }
                        w.vertices.push_back(s);
                        w.signs = pathSigns;
                        w.signs.push_back(e.sign);
                        return CycleAnswer::found(std::move(w));
                    }
                }
                else if (!blocked_[e.vertex]) {
                    blocked_[e.vertex] = true;
                    pathSigns.push_back(e.sign);
                    parity.push_back(parity.back() * e.sign);
                    stack.push_back({e.vertex});
                }
                continue;
            }
            Frame done = fr;
            stack.pop_back();
            if (done.found) {
                unblock(done.v);
            }
            else {
                for (const auto& e : succs) {
                    if (allowed_[e.vertex] && std::ranges::find(blockMap_[e.vertex], done.v) == blockMap_[e.vertex].end()) {
                        blockMap_[e.vertex].push_back(done.v);
                    }
                }
            }
            if (!stack.empty()) {
                stack.back().found = stack.back().found || done.found;
                pathSigns.pop_back();
                parity.pop_back();
            }
        }
        return CycleAnswer::none();
    }

    const SignedDigraph&           g_;
    std::uint64_t&                 budget_;
    std::vector<bool>              blocked_;
    std::vector<std::vector<Atom>> blockMap_;
    std::vector<bool>              allowed_;
};
} // namespace

CycleAnswer hasNegativeCycle(const SignedDigraph& g) {
    // Vertex 2v carries even parity, 2v+1 odd parity.
    const auto        n = g.vertexCount();
    detail::Adjacency doubled(2 * n);
    for (const auto& a : g.arcs()) {
        auto odd = a.sign == Sign::minus ? 1u : 0u;
        doubled[2 * a.source].push_back(2 * a.target + odd);
        doubled[2 * a.source + 1].push_back(2 * a.target + (1u - odd));
    }
    auto                       sccs = detail::tarjan(doubled);
    std::vector<std::size_t>   comp(2 * n);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        for (auto x : sccs[c]) {
            comp[x] = c;
        }
    }
    for (Atom v = 0; v < n; ++v) {
        if (comp[2 * v] != comp[2 * v + 1]) {
            continue;
        }
        auto              path = detail::shortestPath(doubled, 2 * v, 2 * v + 1);
        std::vector<Atom> walk;
        std::vector<Sign> signs;
        for (std::size_t k = 0; k < path.size(); ++k) {
            walk.push_back(path[k] / 2);
            if (k + 1 < path.size()) {
                signs.push_back(((path[k] ^ path[k + 1]) & 1u) != 0 ? Sign::minus : Sign::plus);
            }
        }
        return CycleAnswer::found(reduceToSimpleOddCycle(std::move(walk), std::move(signs)));
    }
    return CycleAnswer::none();
}

CycleAnswer hasPositiveCycle(const SignedDigraph& g, std::uint64_t budget) {
    auto sccs = stronglyConnectedComponents(g);
    std::vector<bool>              inside(g.vertexCount(), false);
    std::vector<std::vector<Atom>> unbalanced;
    for (const auto& comp : sccs) {
        for (Atom v : comp) {
            inside[v] = true;
        }
        bool hasArc = std::ranges::any_of(comp, [&](Atom v) {
            return std::ranges::any_of(g.successors(v), [&](const auto& e) { return inside[e.vertex]; });
        });
        if (hasArc) {
            if (componentBalanced(g, comp, inside)) {
                // Every cycle of a balanced component is positive.
                std::vector<Atom> others;
                for (Atom v = 0; v < g.vertexCount(); ++v) {
                    if (!inside[v]) {
                        others.push_back(v);
                    }
                }
                return CycleAnswer::found(*findCycle(g.withoutVertices(others)));
            }
            unbalanced.push_back(comp);
        }
        for (Atom v : comp) {
            inside[v] = false;
        }
    }
    for (const auto& comp : unbalanced) {
        PositiveCircuitSearch search(g, budget);
        auto                  res = search.run(comp);
        if (res.kind != CycleAnswer::no) {
            return res;
        }
    }
    return CycleAnswer::none();
}

FeedbackSet positiveFeedbackVertexSet(const SignedDigraph& g, std::uint64_t budget) {
    FeedbackSet   out;
    SignedDigraph rest = g;
    auto removeMaxDegree = [&](const CycleWitness& cycle) {
        Atom        best       = cycle.vertices.front();
        std::size_t bestDegree = 0;
        for (std::size_t k = 0; k + 1 < cycle.vertices.size(); ++k) {
            Atom        v      = cycle.vertices[k];
            std::size_t degree = rest.successors(v).size() + rest.predecessors(v).size();
            if (degree > bestDegree || (degree == bestDegree && v < best)) {
                best       = v;
                bestDegree = degree;
            }
        }
        out.vertices.push_back(best);
        rest = rest.withoutVertices(std::span<const Atom>(&best, 1));
    };
    for (;;) {
        auto res = hasPositiveCycle(rest, budget);
        if (res.kind == CycleAnswer::no) {
            break;
        }
        if (res.kind == CycleAnswer::unknown) {
            // A feedback vertex set hits every cycle, positive ones included.
            out.acyclicFallback = true;
            while (auto cycle = findCycle(rest)) {
                removeMaxDegree(*cycle);
            }
            break;
        }
        removeMaxDegree(*res.witness);
    }
    std::ranges::sort(out.vertices);
    return out;
}

} // namespace lpbn
