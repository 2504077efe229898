#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace malcev {

// Letters of the partially commutative group used to verify the conjugation
// normal form: h and g are free symbols, U stands for the unit 1+g, and the
// single relation is that U commutes with g (from g(1+g) = (1+g)g).
enum class TraceLetter : std::uint8_t { h, g, unit };

inline std::string to_string(TraceLetter l) {
    switch (l) {
        case TraceLetter::h: return "h";
        case TraceLetter::g: return "g";
        case TraceLetter::unit: return "U";
    }
    return "?";
}

// Element of the partially commutative group <h, g, U | Ug = gU>, kept in a
// canonical normal form: exponent-compressed, with every U-run moved as far
// left as possible across adjacent g-runs.  Equality of normal forms decides
// equality in the group.
class TraceWord {
public:
    struct Run {
        TraceLetter letter;
        std::int64_t exponent;
        friend bool operator==(const Run&, const Run&) = default;
    };

    TraceWord() = default;

    static TraceWord one() { return {}; }
    static TraceWord letter(TraceLetter l, std::int64_t e = 1) {
        TraceWord w;
        w.push(l, e);
        return w;
    }

    const std::vector<Run>& runs() const { return runs_; }
    bool is_identity() const { return runs_.empty(); }

    TraceWord& operator*=(const TraceWord& rhs) {
        // push() edits runs_, so `w *= w` must not read rhs in place.
        if (this == &rhs) {
            TraceWord copy(rhs);
            for (const auto& r : copy.runs_) push(r.letter, r.exponent);
            return *this;
        }
        for (const auto& r : rhs.runs_) push(r.letter, r.exponent);
        return *this;
    }
    friend TraceWord operator*(TraceWord a, const TraceWord& b) { return a *= b; }

    TraceWord inverse() const {
        TraceWord out;
        for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.push(it->letter, -it->exponent);
        return out;
    }

    TraceWord pow(std::int64_t k) const {
        TraceWord base = k < 0 ? inverse() : *this;
        if (k < 0) k = -k;
        TraceWord acc;
        for (std::int64_t i = 0; i < k; ++i) acc *= base;
        return acc;
    }

    friend bool operator==(const TraceWord&, const TraceWord&) = default;

    std::string to_string() const {
        if (runs_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (i) out += '*';
            out += malcev::to_string(runs_[i].letter);
            if (runs_[i].exponent != 1) out += '^' + std::to_string(runs_[i].exponent);
        }
        return out;
    }

private:
    // Push one run onto the normal form.  Invariant maintained: no zero or
    // mergeable adjacent runs, and no g-run immediately followed by a U-run
    // (U slides left across g).
    void push(TraceLetter l, std::int64_t e) {
        if (e == 0) return;
        if (l == TraceLetter::unit && !runs_.empty() && runs_.back().letter == TraceLetter::g) {
            // Slide U under the trailing g-run.  By the invariant the run
            // underneath is h or U or nothing, so this terminates in one step.
            Run g_run = runs_.back();
            runs_.pop_back();
            push(TraceLetter::unit, e);
            runs_.push_back(g_run);
            return;
        }
        if (!runs_.empty() && runs_.back().letter == l) {
            runs_.back().exponent += e;
            if (runs_.back().exponent == 0) runs_.pop_back();
            return;
        }
        runs_.push_back({l, e});
    }

    std::vector<Run> runs_;
};

}  // namespace malcev
