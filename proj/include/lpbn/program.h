// Ground normal logic programs: atoms, rules, interpretations and the
// model-theoretic checks (reduct, least model, stable/supported/Herbrand).
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpbn {

using Atom = std::uint32_t;

/// Interned atom names. Ids are dense and assigned in interning order.
class AtomTable {
public:
    Atom                      intern(std::string_view name);
    [[nodiscard]] std::optional<Atom> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(Atom a) const { return names_.at(a); }
    [[nodiscard]] std::size_t        size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    static bool isValidName(std::string_view name);

    friend bool operator==(const AtomTable& lhs, const AtomTable& rhs) { return lhs.names_ == rhs.names_; }

private:
    std::vector<std::string>              names_;
    std::unordered_map<std::string, Atom> index_;
};

/// A set of atoms, stored as one bit per atom of the program it belongs to.
/// States of a Boolean network use the same representation.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t atomCount) : bits_(atomCount, false) {}
    Interpretation(std::size_t atomCount, std::initializer_list<Atom> members);
    Interpretation(std::size_t atomCount, std::span<const Atom> members);

    /// Bit i of `mask` is atom i. Requires atomCount <= 64.
    static Interpretation fromMask(std::size_t atomCount, std::uint64_t mask);
    /// Parses a string of '0'/'1' in atom id order ("100" is {atom 0}).
    static Interpretation fromBits(std::string_view bits);

    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool        contains(Atom a) const { return bits_[a]; }
    void                      set(Atom a, bool value = true) { bits_[a] = value; }
    void                      reset(Atom a) { bits_[a] = false; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool        empty() const { return count() == 0; }
    [[nodiscard]] std::vector<Atom> atoms() const;
    [[nodiscard]] std::string       bitString() const;
    [[nodiscard]] Interpretation    complement() const;

    friend bool operator==(const Interpretation& lhs, const Interpretation& rhs) { return lhs.bits_ == rhs.bits_; }
    /// Lexicographic on the bit string, atom 0 first and 0 < 1.
    friend auto operator<=>(const Interpretation& lhs, const Interpretation& rhs) { return lhs.bits_ <=> rhs.bits_; }

private:
    std::vector<bool> bits_;
};

using State = Interpretation;

/// `head :- pbody, not nbody.` Bodies are sorted and duplicate free.
struct Rule {
    Atom              head = 0;
    std::vector<Atom> pbody;
    std::vector<Atom> nbody;

    [[nodiscard]] bool isFact() const { return pbody.empty() && nbody.empty(); }
    /// True if the body formula holds in `i`.
    [[nodiscard]] bool bodyHolds(const Interpretation& i) const;

    auto operator<=>(const Rule&) const = default;
};

class Program {
public:
    Program() = default;
    explicit Program(AtomTable atoms) : atoms_(std::move(atoms)) {}

    Atom addAtom(std::string_view name) { return atoms_.intern(name); }
    /// Sorts and deduplicates both bodies. Returns false if an identical
    /// rule is already present.
    bool addRule(Rule rule);
    bool addRule(Atom head, std::vector<Atom> pbody, std::vector<Atom> nbody = {}) {
        return addRule(Rule{head, std::move(pbody), std::move(nbody)});
    }

    [[nodiscard]] const AtomTable&      atoms() const { return atoms_; }
    [[nodiscard]] std::size_t           atomCount() const { return atoms_.size(); }
    [[nodiscard]] std::span<const Rule> rules() const { return rules_; }

    [[nodiscard]] bool        isPositive() const;
    [[nodiscard]] bool        hasFact() const;
    [[nodiscard]] std::size_t factCount() const;
    /// True if every atom is the head of at least one rule.
    [[nodiscard]] bool allAtomsHeaded() const;

    friend bool operator==(const Program& lhs, const Program& rhs) {
        return lhs.atoms_ == rhs.atoms_ && lhs.rules_ == rhs.rules_;
    }

private:
    AtomTable         atoms_;
    std::vector<Rule> rules_;
    std::set<Rule>    seen_;
};

struct PositiveRule {
    Atom              head = 0;
    std::vector<Atom> body;
    auto              operator<=>(const PositiveRule&) const = default;
};

/// A program without negative bodies; the reduct lives here.
class PositiveProgram {
public:
    explicit PositiveProgram(std::size_t atomCount = 0) : atomCount_(atomCount) {}

    /// Throws std::invalid_argument if `p` has a negative body.
    static PositiveProgram fromProgram(const Program& p);

    void add(PositiveRule rule);

    [[nodiscard]] std::size_t                   atomCount() const { return atomCount_; }
    [[nodiscard]] std::span<const PositiveRule> rules() const { return rules_; }

    friend bool operator==(const PositiveProgram& lhs, const PositiveProgram& rhs) {
        return lhs.atomCount_ == rhs.atomCount_ && lhs.rules_ == rhs.rules_;
    }

private:
    std::size_t               atomCount_;
    std::vector<PositiveRule> rules_;
    std::set<PositiveRule>    seen_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses `atom [":-" lit {"," lit}] "."` rules; `%` starts a line comment.
Program parseProgram(std::string_view text);
/// One rule per line; body literals in atom id order, which makes
/// parseProgram(printProgram(p)) == p for parsed programs.
std::string printProgram(const Program& p);
void        printRule(std::ostream& out, const AtomTable& atoms, const Rule& r);

/// "{a,c}" with atoms in id order.
std::string formatAtomSet(const AtomTable& atoms, const Interpretation& i);

PositiveProgram reduct(const Program& p, const Interpretation& i);
Interpretation  leastModel(const PositiveProgram& q);
bool            isStableModel(const Program& p, const Interpretation& i);
bool            isSupportedModel(const Program& p, const Interpretation& i);
bool            isHerbrandModel(const Program& p, const Interpretation& i);

} // namespace lpbn
