#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "free_group.hpp"
#include "magnus.hpp"
#include "rational_function.hpp"
#include "twist.hpp"

namespace malcev {

// Finite-support element of the twisted series ring: a map word -> nonzero
// coefficient.  Keys are kept in the cheap structural word order; the group
// order enters only through d(), leading(), and order-aware truncation.
class Series {
public:
    Series() = default;

    static Series zero() { return {}; }
    static Series one() { return monomial(ReducedWord::identity(), RationalFunction(1)); }
    static Series monomial(const ReducedWord& g, const RationalFunction& c) {
        Series s;
        if (!c.is_zero()) s.terms_.emplace(g, c);
        return s;
    }
    static Series word(const ReducedWord& g) { return monomial(g, RationalFunction(1)); }

    const std::map<ReducedWord, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    RationalFunction coefficient(const ReducedWord& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? RationalFunction(0) : it->second;
    }

    std::vector<ReducedWord> support() const {
        std::vector<ReducedWord> out;
        out.reserve(terms_.size());
        for (const auto& [g, c] : terms_) out.push_back(g);
        return out;
    }

    void add_term(const ReducedWord& g, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Series& operator+=(const Series& rhs) {
        // add_term() edits terms_, so `s += s` must not read rhs in place.
        if (this == &rhs) {
            Series copy(rhs);
            for (const auto& [g, c] : copy.terms_) add_term(g, c);
            return *this;
        }
        for (const auto& [g, c] : rhs.terms_) add_term(g, c);
        return *this;
    }
    Series& operator-=(const Series& rhs) {
        if (this == &rhs) {
            terms_.clear();
            return *this;
        }
        for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series out = *this;
        for (auto& [g, c] : out.terms_) c = -c;
        return out;
    }

    Series scaled(const RationalFunction& c) const {
        Series out;
        if (c.is_zero()) return out;
        for (const auto& [g, coeff] : terms_) out.terms_.emplace(g, c * coeff);
        return out;
    }

    friend bool operator==(const Series&, const Series&) = default;

    // Min-support word in the group order.
    const ReducedWord& d(unsigned degree_cap = default_degree_cap) const {
        if (terms_.empty()) throw ZeroHasNoSupport();
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it)
            if (word_less(it->first, best->first, degree_cap)) best = it;
        return best->first;
    }

    std::pair<ReducedWord, RationalFunction> leading(unsigned degree_cap = default_degree_cap) const {
        const ReducedWord& u = d(degree_cap);
        return {u, terms_.at(u)};
    }

    // Support sorted by the group order (for reports and canonical output).
    std::vector<ReducedWord> support_by_order(unsigned degree_cap = default_degree_cap) const {
        std::vector<ReducedWord> out = support();
        std::sort(out.begin(), out.end(), MagnusLess{degree_cap});
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "(0)*[1]";
        std::string out;
        for (const auto& g : support_by_order()) {
            if (!out.empty()) out += " + ";
            out += '(' + terms_.at(g).to_string() + ")*[" + g.to_string() + ']';
        }
        return out;
    }

private:
    std::map<ReducedWord, RationalFunction> terms_;
};

// Twisted convolution: (sum a_g g)(sum b_h h) = sum_t (sum_{gh=t} a_g Phi_g(b_h)) t.
inline Series mul(const Series& a, const Series& b, const TwistMap& twist) {
    Series out;
    for (const auto& [g, ag] : a.terms()) {
        FieldAutomorphism phi_g = twist(g);
        for (const auto& [h, bh] : b.terms()) out.add_term(g * h, ag * phi_g(bh));
    }
    return out;
}

// Same convolution, discarding any product word >= bound in the group order.
// Sound for iterated computations whose discarded tail only feeds terms that
// stay >= bound (all our factors have min support >= 1).
inline Series mul_below(const Series& a, const Series& b, const TwistMap& twist,
                        const ReducedWord& bound, unsigned degree_cap = default_degree_cap) {
    Series out;
    for (const auto& [g, ag] : a.terms()) {
        FieldAutomorphism phi_g = twist(g);
        for (const auto& [h, bh] : b.terms()) {
            ReducedWord t = g * h;
            if (word_less(t, bound, degree_cap)) out.add_term(t, ag * phi_g(bh));
        }
    }
    return out;
}

inline Series pow(const Series& base, unsigned k, const TwistMap& twist) {
    Series acc = Series::one();
    for (unsigned i = 0; i < k; ++i) acc = mul(acc, base, twist);
    return acc;
}

}  // namespace malcev
