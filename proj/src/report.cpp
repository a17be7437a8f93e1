#include <lpbn/analyzer.h>

#include <json.hpp>

#include <sstream>

namespace lpbn {

namespace {
using Json = nlohmann::ordered_json;

std::string atomSet(const std::vector<std::string>& names, const Interpretation& i) {
    std::string out = "{";
    bool        first = true;
    for (Atom a : i.atoms()) {
        out += first ? "" : ",";
        out += names[a];
        first = false;
    }
    return out + "}";
}

Json nameList(const std::vector<std::string>& names, const std::vector<Atom>& atoms) {
    Json out = Json::array();
    for (Atom a : atoms) {
        out.push_back(names[a]);
    }
    return out;
}

Json intervalJson(const CountInterval& c) {
    Json out;
    out["lo"] = c.lo;
    out["hi"] = c.hi ? Json(*c.hi) : Json(nullptr);
    return out;
}

std::string signString(const CycleWitness& w) {
    std::string s;
    for (Sign x : w.signs) {
        s += signChar(x);
    }
    return s;
}

Json cycleJson(const std::vector<std::string>& names, const CycleWitness& w) {
    Json out;
    out["vertices"] = nameList(names, w.vertices);
    out["arcs"]     = signString(w);
    out["sign"]     = std::string(1, signChar(w.sign()));
    return out;
}

Json modelList(const std::vector<std::string>& names, const std::vector<Interpretation>& models) {
    Json out = Json::array();
    for (const auto& m : models) {
        out.push_back(atomSet(names, m));
    }
    return out;
}

std::string cycleText(const std::vector<std::string>& names, const CycleWitness& w) {
    std::string out;
    for (std::size_t k = 0; k < w.signs.size(); ++k) {
        out += names[w.vertices[k]];
        out += w.signs[k] == Sign::plus ? " -(+)-> " : " -(-)-> ";
    }
    return out + names[w.vertices.back()];
}
} // namespace

std::string toJson(const AnalysisReport& r, int indent) {
    const auto& names = r.atomNames;
    Json        out;
    out["atoms"] = names;

    Json program;
    program["atoms"]          = r.program.atoms;
    program["rules"]          = r.program.rules;
    program["facts"]          = r.program.facts;
    program["headless_atoms"] = r.program.headlessAtoms;
    program["positive"]       = r.program.positive;
    out["program"]            = program;

    Json graph;
    graph["vertices"]      = r.graph.vertices;
    graph["positive_arcs"] = r.graph.positiveArcs;
    graph["negative_arcs"] = r.graph.negativeArcs;
    graph["sccs"]          = r.graph.sccs;
    graph["min_in_degree"] = r.graph.minInDegree;
    graph["sign_definite"] = r.graph.signDefinite;
    graph["pdg_acyclic"]   = r.graph.pdgAcyclic;
    out["graph"]           = graph;

    out["tight"] = r.tight;

    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json j;
        j["tag"]      = toString(v.tag);
        j["status"]   = toString(v.status);
        j["interval"] = v.interval ? intervalJson(*v.interval) : Json(nullptr);
        j["models"]   = modelList(names, v.models);
        Json cycles   = Json::array();
        for (const auto& c : v.cycles) {
            cycles.push_back(cycleJson(names, c));
        }
        j["cycles"]   = cycles;
        j["vertices"] = nameList(names, v.vertices);
        if (v.bipartition) {
            Json b;
            b["plus"]        = nameList(names, v.bipartition->plus);
            b["minus"]       = nameList(names, v.bipartition->minus);
            j["bipartition"] = b;
        }
        else {
            j["bipartition"] = nullptr;
        }
        j["note"] = v.note;
        verdicts.push_back(j);
    }
    out["verdicts"] = verdicts;

    out["combined"] = intervalJson(r.combined);
    out["summary"]  = r.combined.describe();

    if (r.exact) {
        Json e;
        e["method"]         = toString(r.exact->method);
        e["complete"]       = r.exact->complete;
        e["candidates"]     = r.exact->candidates;
        e["filter_skipped"] = r.exact->filterSkipped;
        e["count"]          = r.exact->models.size();
        e["models"]         = modelList(names, r.exact->models);
        out["exact"]        = e;
    }
    else {
        out["exact"] = nullptr;
    }
    out["exact_note"] = r.exactNote;
    return out.dump(indent) + "\n";
}

std::string toHuman(const AnalysisReport& r) {
    const auto&        names = r.atomNames;
    std::ostringstream out;
    out << "program: " << r.program.atoms << " atoms, " << r.program.rules << " rules, " << r.program.facts
        << " facts, " << r.program.headlessAtoms << " headless atoms" << (r.program.positive ? ", positive" : "")
        << "\n";
    out << "graph: " << r.graph.vertices << " vertices, " << r.graph.positiveArcs << " positive arcs, "
        << r.graph.negativeArcs << " negative arcs, " << r.graph.sccs << " SCCs, min in-degree "
        << r.graph.minInDegree << (r.graph.signDefinite ? ", sign-definite" : "") << "\n";
    out << "tight: " << (r.tight ? "yes (stable = supported)" : "no") << "\n";
    out << "verdicts:\n";
    for (const auto& v : r.verdicts) {
        out << "  " << toString(v.tag) << ": " << toString(v.status);
        if (v.interval) {
            out << ", " << v.interval->describe();
        }
        if (!v.note.empty()) {
            out << " (" << v.note << ")";
        }
        out << "\n";
        for (const auto& c : v.cycles) {
            out << "    cycle: " << cycleText(names, c) << "\n";
        }
        if (v.tag == TheoremTag::pfvsBound) {
            out << "    feedback set: " << nameList(names, v.vertices).dump() << "\n";
        }
        if (v.bipartition) {
            out << "    classes: " << nameList(names, v.bipartition->plus).dump() << " / "
                << nameList(names, v.bipartition->minus).dump() << "\n";
        }
        for (const auto& m : v.models) {
            out << "    model: " << atomSet(names, m) << "\n";
        }
    }
    out << "stable models: " << r.combined.describe() << "\n";
    if (r.exact) {
        out << "exact (" << toString(r.exact->method) << (r.exact->complete ? "" : ", incomplete")
            << "): " << r.exact->models.size() << "\n";
        for (const auto& m : r.exact->models) {
            out << atomSet(names, m) << "\n";
        }
    }
    if (!r.exactNote.empty()) {
        out << "exact: skipped (" << r.exactNote << ")\n";
    }
    return out.str();
}

} // namespace lpbn
