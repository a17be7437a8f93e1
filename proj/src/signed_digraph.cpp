#include <lpbn/signed_digraph.h>

#include "graph_util.h"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lpbn {

/////////////////////////////////////////////////////////////////////////////////////////
// detail
/////////////////////////////////////////////////////////////////////////////////////////
namespace detail {
std::vector<std::vector<std::uint32_t>> tarjan(const Adjacency& adj) {
    constexpr auto unvisited = UINT32_MAX;
    const auto     n         = static_cast<std::uint32_t>(adj.size());
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool>          onStack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> sccs;
    std::uint32_t                           next = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t   edge;
    };
    std::vector<Frame> call;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = next++;
        stack.push_back(root);
        onStack[root] = true;
        while (!call.empty()) {
            auto& fr = call.back();
            if (fr.edge < adj[fr.v].size()) {
                auto w = adj[fr.v][fr.edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    onStack[w] = true;
                    call.push_back({w, 0});
                }
                else if (onStack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            auto v = fr.v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<std::uint32_t> scc;
                std::uint32_t              w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    scc.push_back(w);
                } while (w != v);
                std::ranges::sort(scc);
                sccs.push_back(std::move(scc));
            }
        }
    }
    return sccs;
}

std::vector<std::uint32_t> shortestPath(const Adjacency& adj, std::uint32_t from, std::uint32_t to,
                                        const std::vector<bool>* allowed) {
    constexpr auto none = UINT32_MAX;
    std::vector<std::uint32_t> parent(adj.size(), none);
    std::deque<std::uint32_t>  queue{from};
    parent[from] = from;
    bool reached = false;
    // `from == to` asks for a non-trivial closed path, so `to` is only
    // recognised when reached through an arc.
    while (!queue.empty() && !reached) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v]) {
            if (allowed != nullptr && !(*allowed)[w]) {
                continue;
            }
            if (w == to) {
                if (to == from) {
                    std::vector<std::uint32_t> path{w};
                    for (auto x = v; x != from; x = parent[x]) {
                        path.push_back(x);
                    }
                    path.push_back(from);
                    std::ranges::reverse(path);
                    return path;
                }
                parent[w] = v;
                reached   = true;
                break;
            }
            if (parent[w] == none) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (!reached) {
        return {};
    }
    std::vector<std::uint32_t> path;
    for (auto x = to; x != from; x = parent[x]) {
        path.push_back(x);
    }
    path.push_back(from);
    std::ranges::reverse(path);
    return path;
}
} // namespace detail

/////////////////////////////////////////////////////////////////////////////////////////
// SignedDigraph
/////////////////////////////////////////////////////////////////////////////////////////
SignedDigraph::SignedDigraph(std::size_t vertexCount, std::vector<std::string> names)
    : SignedDigraph(vertexCount, {}, std::move(names)) {}

SignedDigraph::SignedDigraph(std::size_t vertexCount, std::vector<Arc> arcs, std::vector<std::string> names)
    : arcs_(std::move(arcs))
    , out_(vertexCount)
    , in_(vertexCount)
    , names_(std::move(names)) {
    std::ranges::sort(arcs_);
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const auto& a : arcs_) {
        if (a.source >= vertexCount || a.target >= vertexCount) {
            throw std::out_of_range("arc endpoint outside the vertex range");
        }
        out_[a.source].push_back({a.target, a.sign});
        in_[a.target].push_back({a.source, a.sign});
    }
}

bool SignedDigraph::hasArc(const Arc& a) const { return std::ranges::binary_search(arcs_, a); }

std::size_t SignedDigraph::arcCount(Sign s) const {
    return static_cast<std::size_t>(std::ranges::count(arcs_, s, &Arc::sign));
}

std::string SignedDigraph::vertexName(Atom v) const {
    return v < names_.size() ? names_[v] : std::to_string(v);
}

SignedDigraph SignedDigraph::withoutVertices(std::span<const Atom> removed) const {
    std::vector<bool> gone(vertexCount(), false);
    for (Atom v : removed) {
        gone.at(v) = true;
    }
    std::vector<Arc> kept;
    std::ranges::copy_if(arcs_, std::back_inserter(kept), [&](const Arc& a) { return !gone[a.source] && !gone[a.target]; });
    return {vertexCount(), std::move(kept), names_};
}

SignedDigraph SignedDigraph::restrictedTo(Sign s) const {
    std::vector<Arc> kept;
    std::ranges::copy_if(arcs_, std::back_inserter(kept), [s](const Arc& a) { return a.sign == s; });
    return {vertexCount(), std::move(kept), names_};
}

bool SignedDigraph::isSubgraphOf(const SignedDigraph& other) const {
    return vertexCount() == other.vertexCount() &&
           std::ranges::all_of(arcs_, [&](const Arc& a) { return other.hasArc(a); });
}

/////////////////////////////////////////////////////////////////////////////////////////
// CycleWitness
/////////////////////////////////////////////////////////////////////////////////////////
Sign CycleWitness::sign() const {
    Sign s = Sign::plus;
    for (Sign x : signs) {
        s = s * x;
    }
    return s;
}

bool CycleWitness::isValidIn(const SignedDigraph& g) const {
    if (signs.empty() || vertices.size() != signs.size() + 1 || vertices.front() != vertices.back()) {
        return false;
    }
    std::vector<Atom> inner(vertices.begin(), vertices.end() - 1);
    std::ranges::sort(inner);
    if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) {
        return false;
    }
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (vertices[k] >= g.vertexCount() || !g.hasArc({vertices[k], vertices[k + 1], signs[k]})) {
            return false;
        }
    }
    return true;
}

const char* toString(CycleAnswer::Kind k) {
    switch (k) {
        case CycleAnswer::yes    : return "yes";
        case CycleAnswer::no     : return "no";
        case CycleAnswer::unknown: return "unknown";
    }
    return "unknown";
}

/////////////////////////////////////////////////////////////////////////////////////////
// Construction from programs
/////////////////////////////////////////////////////////////////////////////////////////
SignedDigraph dependenceGraph(const Program& p) {
    std::vector<Arc> arcs;
    for (const auto& r : p.rules()) {
        for (Atom u : r.pbody) {
            arcs.push_back({u, r.head, Sign::plus});
        }
        for (Atom u : r.nbody) {
            arcs.push_back({u, r.head, Sign::minus});
        }
    }
    return {p.atomCount(), std::move(arcs), p.atoms().names()};
}

SignedDigraph positiveDependenceGraph(const Program& p) { return dependenceGraph(p).restrictedTo(Sign::plus); }

/////////////////////////////////////////////////////////////////////////////////////////
// Structure
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
detail::Adjacency plainAdjacency(const SignedDigraph& g) {
    detail::Adjacency adj(g.vertexCount());
    for (const auto& a : g.arcs()) {
        adj[a.source].push_back(a.target);
    }
    return adj;
}
} // namespace

std::vector<std::vector<Atom>> stronglyConnectedComponents(const SignedDigraph& g) {
    return detail::tarjan(plainAdjacency(g));
}

std::vector<std::size_t> componentIndex(const SignedDigraph& g) {
    std::vector<std::size_t> idx(g.vertexCount(), 0);
    auto                     sccs = stronglyConnectedComponents(g);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        for (Atom v : sccs[c]) {
            idx[v] = c;
        }
    }
    return idx;
}

bool isAcyclic(const SignedDigraph& g) {
    auto comp = componentIndex(g);
    return std::ranges::none_of(g.arcs(), [&](const Arc& a) { return comp[a.source] == comp[a.target]; });
}

bool isStronglyConnected(const SignedDigraph& g) {
    return g.vertexCount() > 0 && stronglyConnectedComponents(g).size() == 1;
}

std::optional<CycleWitness> findCycle(const SignedDigraph& g) {
    auto comp = componentIndex(g);
    auto it   = std::ranges::find_if(g.arcs(), [&](const Arc& a) { return comp[a.source] == comp[a.target]; });
    if (it == g.arcs().end()) {
        return std::nullopt;
    }
    std::vector<bool> allowed(g.vertexCount());
    for (std::size_t v = 0; v < g.vertexCount(); ++v) {
        allowed[v] = comp[v] == comp[it->source];
    }
    CycleWitness w;
    if (it->source == it->target) {
        w.vertices = {it->source, it->source};
        w.signs    = {it->sign};
        return w;
    }
    // Close the arc with a shortest (hence simple) path back to its source.
    auto back  = detail::shortestPath(plainAdjacency(g), it->target, it->source, &allowed);
    w.vertices = {it->source};
    w.vertices.insert(w.vertices.end(), back.begin(), back.end());
    w.signs.push_back(it->sign);
    for (std::size_t k = 0; k + 1 < back.size(); ++k) {
        Sign s = g.hasArc({back[k], back[k + 1], Sign::plus}) ? Sign::plus : Sign::minus;
        w.signs.push_back(s);
    }
    return w;
}

bool isSignDefinite(const SignedDigraph& g) {
    auto arcs = g.arcs();
    for (std::size_t k = 1; k < arcs.size(); ++k) {
        const auto& a = arcs[k - 1];
        const auto& b = arcs[k];
        if (a.source == b.source && a.target == b.target && a.source != a.target) {
            return false;
        }
    }
    return true;
}

bool isLocallyStratified(const Program& p) {
    auto g    = dependenceGraph(p);
    auto comp = componentIndex(g);
    return std::ranges::none_of(g.arcs(), [&](const Arc& a) {
        return a.sign == Sign::minus && comp[a.source] == comp[a.target];
    });
}

BipartitionResult balanceBipartition(const SignedDigraph& g) {
    if (g.arcs().empty()) {
        return std::string("graph has no arc");
    }
    if (!isStronglyConnected(g)) {
        return std::string("graph is not strongly connected");
    }
    // Color 0 is the class of vertex 0. Positive arcs keep the color,
    // negative arcs flip it; traversal ignores arc direction.
    std::vector<int>  color(g.vertexCount(), -1);
    std::deque<Atom>  queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        Atom v = queue.front();
        queue.pop_front();
        auto visit = [&](const SignedDigraph::Edge& e) {
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
                return std::string("graph has a negative cycle");
            }
        }
        for (const auto& e : g.predecessors(v)) {
            if (!visit(e)) {
                return std::string("graph has a negative cycle");
            }
        }
    }
    Bipartition out;
    for (Atom v = 0; v < g.vertexCount(); ++v) {
        (color[v] == 0 ? out.plus : out.minus).push_back(v);
    }
    return out;
}

std::optional<Sign> singleCycleSign(const SignedDigraph& g) {
    if (g.vertexCount() == 0) {
        return std::nullopt;
    }
    for (Atom v = 0; v < g.vertexCount(); ++v) {
        if (g.successors(v).size() != 1 || g.predecessors(v).size() != 1) {
            return std::nullopt;
        }
    }
    if (!isStronglyConnected(g)) {
        return std::nullopt;
    }
    Sign s = Sign::plus;
    for (const auto& a : g.arcs()) {
        s = s * a.sign;
    }
    return s;
}

std::string toDot(const SignedDigraph& g, std::string_view graphName, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        out << "// " << comment << '\n';
    }
    out << "digraph " << graphName << " {\n";
    for (Atom v = 0; v < g.vertexCount(); ++v) {
        out << "  \"" << g.vertexName(v) << "\";\n";
    }
    for (const auto& a : g.arcs()) {
        out << "  \"" << g.vertexName(a.source) << "\" -> \"" << g.vertexName(a.target) << "\"";
        if (a.sign == Sign::minus) {
            out << " [style=dashed, label=\"-\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace lpbn
