#include <lpbn/fixpoint.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lpbn {

QuasiProgram tpTransform(const Program& p, const QuasiProgram& q, std::uint64_t budget) {
    std::map<Atom, std::vector<const QuasiRule*>> byHead;
    for (const auto& r : q) {
        byHead[r.head].push_back(&r);
    }
    QuasiProgram  out;
    std::uint64_t produced = 0;
    for (const auto& r : p.rules()) {
        std::vector<const std::vector<const QuasiRule*>*> choices;
        bool                                              resolvable = true;
        for (Atom a : r.pbody) {
            auto it = byHead.find(a);
            if (it == byHead.end()) {
                resolvable = false;
                break;
            }
            choices.push_back(&it->second);
        }
        if (!resolvable) {
            continue;
        }
        // Odometer over one quasi-rule per positive body atom.
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            if (++produced > budget) {
                throw BudgetExhausted("quasi-interpretation budget exhausted");
            }
            QuasiRule res{r.head, r.nbody};
            for (std::size_t k = 0; k < choices.size(); ++k) {
                const auto& body = (*choices[k])[pick[k]]->nbody;
                res.nbody.insert(res.nbody.end(), body.begin(), body.end());
            }
            std::ranges::sort(res.nbody);
            res.nbody.erase(std::unique(res.nbody.begin(), res.nbody.end()), res.nbody.end());
            out.insert(std::move(res));

            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == choices[k]->size()) {
                pick[k++] = 0;
            }
            if (k == pick.size()) {
                break;
            }
        }
    }
    return out;
}

QuasiProgram leastFixpoint(const Program& p, std::uint64_t budget) {
    QuasiProgram current;
    for (;;) {
        auto next = tpTransform(p, current, budget);
        if (!std::ranges::includes(next, current)) {
            throw std::logic_error("least fixpoint iteration is not monotone");
        }
        if (next.size() > budget) {
            throw BudgetExhausted("quasi-interpretation budget exhausted");
        }
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
}

Program toProgram(const AtomTable& atoms, const QuasiProgram& q) {
    Program out(atoms);
    for (const auto& r : q) {
        out.addRule(r.head, {}, r.nbody);
    }
    return out;
}

std::vector<Interpretation> stableViaLfp(const Program& p, std::uint64_t lfpBudget, std::uint64_t searchBudget) {
    return fixedPoints(encode(toProgram(p.atoms(), leastFixpoint(p, lfpBudget))), searchBudget);
}

} // namespace lpbn
