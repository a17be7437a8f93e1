// Fixed-point enumeration: backtracking over v <-> f_v constraints with
// queue-driven propagation.
#include <lpbn/boolean_network.h>

#include <algorithm>
#include <cassert>

namespace lpbn {

namespace {
enum class Value : std::int8_t { unset = -1, zero = 0, one = 1 };

class FixedPointSearch {
public:
    FixedPointSearch(const BooleanNetwork& f, std::uint64_t budget)
        : f_(f)
        , budget_(budget)
        , n_(f.variableCount())
        , vals_(n_, Value::unset)
        , watchers_(n_)
        , queued_(n_, false) {
        for (Atom v = 0; v < n_; ++v) {
            watchers_[v].push_back(v);
            for (Atom a : f.function(v).support()) {
                if (a != v) {
                    watchers_[a].push_back(v);
                }
            }
            contradictory_.emplace_back();
            for (const auto& t : f.function(v).terms) {
                contradictory_.back().push_back(t.contradictory());
            }
        }
    }

    std::vector<State> run() {
        for (Atom v = 0; v < n_; ++v) {
            enqueue(v);
        }
        if (propagate()) {
            search();
        }
        std::ranges::sort(found_);
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return std::move(found_);
    }

private:
    struct Decision {
        Atom        var;
        std::size_t trailSize;
        bool        flipped;
    };

    void enqueue(Atom v) {
        if (!queued_[v]) {
            queued_[v] = true;
            queue_.push_back(v);
        }
    }

    bool assign(Atom v, Value x) {
        if (vals_[v] != Value::unset) {
            return vals_[v] == x;
        }
        vals_[v] = x;
        trail_.push_back(v);
        for (Atom w : watchers_[v]) {
            enqueue(w);
        }
        return true;
    }

    // Literal of `t` at atom a is true/false/undecided.
    [[nodiscard]] Value literal(Atom a, bool positive) const {
        if (vals_[a] == Value::unset) {
            return Value::unset;
        }
        return (vals_[a] == Value::one) == positive ? Value::one : Value::zero;
    }

    [[nodiscard]] Value termValue(Atom v, std::size_t k) const {
        if (contradictory_[v][k]) {
            return Value::zero;
        }
        const auto& t      = f_.function(v).terms[k];
        bool        allSet = true;
        for (Atom a : t.positive) {
            auto x = literal(a, true);
            if (x == Value::zero) {
                return Value::zero;
            }
            allSet = allSet && x == Value::one;
        }
        for (Atom a : t.negative) {
            auto x = literal(a, false);
            if (x == Value::zero) {
                return Value::zero;
            }
            allSet = allSet && x == Value::one;
        }
        return allSet ? Value::one : Value::unset;
    }

    /// Enforces v <-> f_v as far as the current partial assignment allows.
    bool check(Atom v) {
        const auto& terms = f_.function(v).terms;
        std::size_t open  = 0;
        std::size_t last  = 0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            auto x = termValue(v, k);
            if (x == Value::one) {
                return assign(v, Value::one);
            }
            if (x == Value::unset) {
                ++open;
                last = k;
            }
        }
        if (open == 0) {
            return assign(v, Value::zero);
        }
        if (vals_[v] == Value::one && open == 1) {
            // The only remaining term must hold.
            for (Atom a : terms[last].positive) {
                if (!assign(a, Value::one)) {
                    return false;
                }
            }
            for (Atom a : terms[last].negative) {
                if (!assign(a, Value::zero)) {
                    return false;
                }
            }
        }
        else if (vals_[v] == Value::zero) {
            // Every open term with a single undecided literal must fail on it.
            for (std::size_t k = 0; k < terms.size(); ++k) {
                if (termValue(v, k) != Value::unset) {
                    continue;
                }
                std::size_t undecided = 0;
                Atom        atom      = 0;
                bool        positive  = true;
                for (Atom a : terms[k].positive) {
                    if (vals_[a] == Value::unset) {
                        ++undecided, atom = a, positive = true;
                    }
                }
                for (Atom a : terms[k].negative) {
                    if (vals_[a] == Value::unset) {
                        ++undecided, atom = a, positive = false;
                    }
                }
                if (undecided == 1 && !assign(atom, positive ? Value::zero : Value::one)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool propagate() {
        while (!queue_.empty()) {
            Atom v = queue_.back();
            queue_.pop_back();
            queued_[v] = false;
            if (!check(v)) {
                for (Atom w : queue_) {
                    queued_[w] = false;
                }
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void undoTo(std::size_t size) {
        while (trail_.size() > size) {
            vals_[trail_.back()] = Value::unset;
            trail_.pop_back();
        }
    }

    void spend() {
        if (budget_ == 0) {
            std::ranges::sort(found_);
            throw BudgetExhausted("fixed-point search budget exhausted", found_);
        }
        --budget_;
    }

    void record() {
        State s(n_);
        for (Atom v = 0; v < n_; ++v) {
            s.set(v, vals_[v] == Value::one);
        }
        assert(f_.isFixedPoint(s));
        found_.push_back(std::move(s));
    }

    /// Next branch after a conflict or a solution; false when exhausted.
    bool backtrack() {
        while (!decisions_.empty()) {
            auto& d = decisions_.back();
            undoTo(d.trailSize);
            if (!d.flipped) {
                d.flipped = true;
                spend();
                if (assign(d.var, Value::one) && propagate()) {
                    return true;
                }
                continue;
            }
            decisions_.pop_back();
        }
        return false;
    }

    void search() {
        Atom next = 0;
        for (;;) {
            while (next < n_ && vals_[next] != Value::unset) {
                ++next;
            }
            if (next == n_) {
                record();
            }
            else {
                spend();
                decisions_.push_back({next, trail_.size(), false});
                if (assign(next, Value::zero) && propagate()) {
                    continue;
                }
            }
            if (!backtrack()) {
                return;
            }
            next = 0;
        }
    }

    const BooleanNetwork&          f_;
    std::uint64_t                  budget_;
    std::size_t                    n_;
    std::vector<Value>             vals_;
    std::vector<std::vector<Atom>> watchers_;
    std::vector<std::vector<bool>> contradictory_;
    std::vector<bool>              queued_;
    std::vector<Atom>              queue_;
    std::vector<Atom>              trail_;
    std::vector<Decision>          decisions_;
    std::vector<State>             found_;
};
} // namespace

std::vector<State> fixedPoints(const BooleanNetwork& f, std::uint64_t budget) {
    return FixedPointSearch(f, budget).run();
}

} // namespace lpbn
