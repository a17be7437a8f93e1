#include <lpbn/program.h>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lpbn {

namespace {
void normalize(std::vector<Atom>& atoms) {
    std::ranges::sort(atoms);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}
} // namespace

/////////////////////////////////////////////////////////////////////////////////////////
// AtomTable
/////////////////////////////////////////////////////////////////////////////////////////
Atom AtomTable::intern(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end()) {
        return it->second;
    }
    auto id = static_cast<Atom>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<Atom> AtomTable::find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

bool AtomTable::isValidName(std::string_view name) {
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || !alpha(name.front())) {
        return false;
    }
    return std::ranges::all_of(name, [&](char c) { return alpha(c) || digit(c); });
}

/////////////////////////////////////////////////////////////////////////////////////////
// Interpretation
/////////////////////////////////////////////////////////////////////////////////////////
Interpretation::Interpretation(std::size_t atomCount, std::initializer_list<Atom> members)
    : Interpretation(atomCount, std::span<const Atom>(members.begin(), members.size())) {}

Interpretation::Interpretation(std::size_t atomCount, std::span<const Atom> members) : bits_(atomCount, false) {
    for (Atom a : members) {
        bits_.at(a) = true;
    }
}

Interpretation Interpretation::fromMask(std::size_t atomCount, std::uint64_t mask) {
    assert(atomCount <= 64);
    Interpretation i(atomCount);
    for (std::size_t a = 0; a < atomCount; ++a) {
        i.bits_[a] = ((mask >> a) & 1u) != 0;
    }
    return i;
}

Interpretation Interpretation::fromBits(std::string_view bits) {
    Interpretation i(bits.size());
    for (std::size_t a = 0; a < bits.size(); ++a) {
        if (bits[a] != '0' && bits[a] != '1') {
            throw std::invalid_argument("bit string must consist of '0' and '1'");
        }
        i.bits_[a] = bits[a] == '1';
    }
    return i;
}

std::size_t Interpretation::count() const { return static_cast<std::size_t>(std::ranges::count(bits_, true)); }

std::vector<Atom> Interpretation::atoms() const {
    std::vector<Atom> out;
    for (std::size_t a = 0; a < bits_.size(); ++a) {
        if (bits_[a]) {
            out.push_back(static_cast<Atom>(a));
        }
    }
    return out;
}

std::string Interpretation::bitString() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

Interpretation Interpretation::complement() const {
    Interpretation out(*this);
    out.bits_.flip();
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Rules and programs
/////////////////////////////////////////////////////////////////////////////////////////
bool Rule::bodyHolds(const Interpretation& i) const {
    return std::ranges::all_of(pbody, [&](Atom a) { return i.contains(a); }) &&
           std::ranges::none_of(nbody, [&](Atom a) { return i.contains(a); });
}

bool Program::addRule(Rule rule) {
    normalize(rule.pbody);
    normalize(rule.nbody);
    auto check = [this](Atom a) {
        if (a >= atoms_.size()) {
            throw std::out_of_range("rule references an atom outside the atom table");
        }
    };
    check(rule.head);
    std::ranges::for_each(rule.pbody, check);
    std::ranges::for_each(rule.nbody, check);
    if (!seen_.insert(rule).second) {
        return false;
    }
    rules_.push_back(std::move(rule));
    return true;
}

bool Program::isPositive() const {
    return std::ranges::all_of(rules_, [](const Rule& r) { return r.nbody.empty(); });
}

bool Program::hasFact() const { return std::ranges::any_of(rules_, &Rule::isFact); }

std::size_t Program::factCount() const {
    return static_cast<std::size_t>(std::ranges::count_if(rules_, &Rule::isFact));
}

bool Program::allAtomsHeaded() const {
    std::vector<bool> headed(atomCount(), false);
    for (const auto& r : rules_) {
        headed[r.head] = true;
    }
    return std::ranges::all_of(headed, [](bool b) { return b; });
}

PositiveProgram PositiveProgram::fromProgram(const Program& p) {
    PositiveProgram out(p.atomCount());
    for (const auto& r : p.rules()) {
        if (!r.nbody.empty()) {
            throw std::invalid_argument("program has a negative body");
        }
        out.add({r.head, r.pbody});
    }
    return out;
}

void PositiveProgram::add(PositiveRule rule) {
    normalize(rule.body);
    if (seen_.insert(rule).second) {
        rules_.push_back(std::move(rule));
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// Printing
/////////////////////////////////////////////////////////////////////////////////////////
void printRule(std::ostream& out, const AtomTable& atoms, const Rule& r) {
    out << atoms.name(r.head);
    if (!r.isFact()) {
        out << " :- ";
        // Merge both bodies by atom id; a positive literal precedes its negation.
        auto        pos = r.pbody.begin();
        auto        neg = r.nbody.begin();
        const char* sep = "";
        while (pos != r.pbody.end() || neg != r.nbody.end()) {
            out << std::exchange(sep, ", ");
            if (neg == r.nbody.end() || (pos != r.pbody.end() && *pos <= *neg)) {
                out << atoms.name(*pos++);
            }
            else {
                out << "not " << atoms.name(*neg++);
            }
        }
    }
    out << ".";
}

std::string printProgram(const Program& p) {
    std::ostringstream out;
    for (const auto& r : p.rules()) {
        printRule(out, p.atoms(), r);
        out << '\n';
    }
    return out.str();
}

std::string formatAtomSet(const AtomTable& atoms, const Interpretation& i) {
    std::string out = "{";
    const char* sep = "";
    for (Atom a : i.atoms()) {
        out += std::exchange(sep, ",");
        out += atoms.name(a);
    }
    out += "}";
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Semantics
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
// Forward chaining with per-rule counters of unsatisfied body atoms: every
// rule and every body occurrence is touched a constant number of times.
template <typename RuleRange, typename BodyOf, typename Active>
Interpretation forwardChain(std::size_t atomCount, const RuleRange& rules, BodyOf bodyOf, Active active) {
    Interpretation              model(atomCount);
    std::vector<std::size_t>    missing(rules.size());
    std::vector<std::vector<std::size_t>> watches(atomCount);
    std::vector<Atom>           queue;
    for (std::size_t k = 0; k < rules.size(); ++k) {
        if (!active(rules[k])) {
            continue;
        }
        const auto& body = bodyOf(rules[k]);
        missing[k]       = body.size();
        for (Atom a : body) {
            watches[a].push_back(k);
        }
        if (body.empty() && !model.contains(rules[k].head)) {
            model.set(rules[k].head);
            queue.push_back(rules[k].head);
        }
    }
    while (!queue.empty()) {
        Atom a = queue.back();
        queue.pop_back();
        for (std::size_t k : watches[a]) {
            if (--missing[k] == 0 && !model.contains(rules[k].head)) {
                model.set(rules[k].head);
                queue.push_back(rules[k].head);
            }
        }
    }
    return model;
}
} // namespace

PositiveProgram reduct(const Program& p, const Interpretation& i) {
    PositiveProgram out(p.atomCount());
    for (const auto& r : p.rules()) {
        if (std::ranges::none_of(r.nbody, [&](Atom a) { return i.contains(a); })) {
            out.add({r.head, r.pbody});
        }
    }
    return out;
}

Interpretation leastModel(const PositiveProgram& q) {
    return forwardChain(
        q.atomCount(), q.rules(), [](const PositiveRule& r) -> const auto& { return r.body; },
        [](const PositiveRule&) { return true; });
}

bool isStableModel(const Program& p, const Interpretation& i) {
    // The reduct is never materialized: rules blocked by `i` are skipped.
    auto model = forwardChain(
        p.atomCount(), p.rules(), [](const Rule& r) -> const auto& { return r.pbody; },
        [&](const Rule& r) { return std::ranges::none_of(r.nbody, [&](Atom a) { return i.contains(a); }); });
    return model == i;
}

bool isHerbrandModel(const Program& p, const Interpretation& i) {
    return std::ranges::all_of(p.rules(), [&](const Rule& r) { return !r.bodyHolds(i) || i.contains(r.head); });
}

bool isSupportedModel(const Program& p, const Interpretation& i) {
    if (!isHerbrandModel(p, i)) {
        return false;
    }
    std::vector<bool> supported(p.atomCount(), false);
    for (const auto& r : p.rules()) {
        if (r.bodyHolds(i)) {
            supported[r.head] = true;
        }
    }
    for (Atom a : i.atoms()) {
        if (!supported[a]) {
            return false;
        }
    }
    return true;
}

} // namespace lpbn
