#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace malcev {

// One maximal run x_g^e of a reduced word, e != 0.
struct Syllable {
    std::uint32_t generator = 0;  // 1-based index
    std::int64_t exponent = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word over generators x_1, x_2, ...  Value type; the
// syllable vector never contains zero exponents or equal adjacent
// generators.
class ReducedWord {
public:
    ReducedWord() = default;

    static ReducedWord generator(std::uint32_t index, std::int64_t exponent = 1) {
        assert(index > 0);
        ReducedWord w;
        if (exponent != 0) w.syllables_.push_back({index, exponent});
        return w;
    }

    static ReducedWord identity() { return ReducedWord(); }

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }

    // Letter count: sum of |exponent|.
    std::uint64_t length() const {
        std::uint64_t n = 0;
        for (const auto& s : syllables_) n += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
        return n;
    }

    // Exponent sum of one generator (image in the abelianization).
    std::int64_t exponent_sum(std::uint32_t index) const {
        std::int64_t n = 0;
        for (const auto& s : syllables_)
            if (s.generator == index) n += s.exponent;
        return n;
    }

    std::map<std::uint32_t, std::int64_t> exponent_sums() const {
        std::map<std::uint32_t, std::int64_t> out;
        for (const auto& s : syllables_) {
            auto& e = out[s.generator];
            e += s.exponent;
            if (e == 0) out.erase(s.generator);
        }
        return out;
    }

    std::set<std::uint32_t> generators_used() const {
        std::set<std::uint32_t> out;
        for (const auto& s : syllables_) out.insert(s.generator);
        return out;
    }

    ReducedWord& operator*=(const ReducedWord& rhs) {
        // append() edits syllables_, so `w *= w` must not read rhs in place.
        if (this == &rhs) {
            ReducedWord copy(rhs);
            for (const auto& s : copy.syllables_) append(s);
            return *this;
        }
        for (const auto& s : rhs.syllables_) append(s);
        return *this;
    }

    friend ReducedWord operator*(ReducedWord lhs, const ReducedWord& rhs) {
        lhs *= rhs;
        return lhs;
    }

    ReducedWord inverse() const {
        ReducedWord w;
        w.syllables_.reserve(syllables_.size());
        for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
            w.syllables_.push_back({it->generator, -it->exponent});
        return w;
    }

    ReducedWord pow(std::int64_t k) const {
        if (k < 0) return inverse().pow(-k);
        ReducedWord base = *this, acc;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    ReducedWord conjugated_by(const ReducedWord& c) const {  // c * w * c^-1
        return c * (*this) * c.inverse();
    }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    // Structural order (syllable-lexicographic); cheap and total, used for
    // container keys.  The mathematical order lives in magnus.hpp.
    friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

    std::string to_string() const {
        if (syllables_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < syllables_.size(); ++i) {
            if (i > 0) out += '*';
            out += 'x';
            out += std::to_string(syllables_[i].generator);
            if (syllables_[i].exponent != 1) {
                out += '^';
                out += std::to_string(syllables_[i].exponent);
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        for (const auto& s : syllables_) {
            mix(s.generator);
            mix(static_cast<std::uint64_t>(s.exponent));
        }
        return h;
    }

private:
    void append(Syllable s) {
        while (!syllables_.empty() && syllables_.back().generator == s.generator) {
            s.exponent += syllables_.back().exponent;
            syllables_.pop_back();
            if (s.exponent == 0) return;
            // A merged nonzero run cannot cancel further against a distinct
            // neighbouring generator.
            break;
        }
        if (s.exponent != 0) syllables_.push_back(s);
    }

    std::vector<Syllable> syllables_;
};

inline ReducedWord commutator(const ReducedWord& a, const ReducedWord& b) {
    return a * b * a.inverse() * b.inverse();
}

struct WordHash {
    std::size_t operator()(const ReducedWord& w) const { return w.hash(); }
};

}  // namespace malcev
