#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "free_group.hpp"

// Bi-invariant total order on the free group, computed through the embedding
// x_i |-> 1 + t_i into integer power series in noncommuting t_1, t_2, ...
// Two distinct words are compared at the first monomial (in degree-then-lex
// order, t_1 < t_2 < ...) where their expansions differ; the word with the
// smaller integer coefficient there is the smaller group element.  Because
// the monomial order is compatible with multiplication on both sides, this
// agrees with the positivity-cone description and is invariant under left
// and right translation.

namespace malcev {

using BigInt = boost::multiprecision::cpp_int;

// A monomial t_{m[0]} t_{m[1]} ... ; degree = m.size().
using Monomial = std::vector<std::uint32_t>;

struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline std::string monomial_to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += '*';
        out += 't';
        out += std::to_string(m[i]);
    }
    return out;
}

// A truncated integer power series in noncommuting variables: the image of a
// group element modulo monomials of degree > degree_bound.  Zero coefficients
// are never stored; the unit has coefficient 1 at the empty monomial.
class MagnusExpansion {
public:
    explicit MagnusExpansion(unsigned degree_bound) : bound_(degree_bound) {}

    static MagnusExpansion one(unsigned degree_bound) {
        MagnusExpansion e(degree_bound);
        e.coeffs_[Monomial{}] = 1;
        return e;
    }

    unsigned degree_bound() const { return bound_; }
    const std::map<Monomial, BigInt, DegLexLess>& coefficients() const { return coeffs_; }

    BigInt coefficient(const Monomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    void add(const Monomial& m, const BigInt& c) {
        if (c == 0 || m.size() > bound_) return;
        auto [it, inserted] = coeffs_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    friend bool operator==(const MagnusExpansion&, const MagnusExpansion&) = default;

    friend MagnusExpansion truncated_product(const MagnusExpansion& a, const MagnusExpansion& b) {
        MagnusExpansion out(std::min(a.bound_, b.bound_));
        Monomial m;
        for (const auto& [ma, ca] : a.coeffs_) {
            if (ma.size() > out.bound_) break;  // deg-lex: all later keys are longer
            for (const auto& [mb, cb] : b.coeffs_) {
                if (ma.size() + mb.size() > out.bound_) break;
                m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                out.add(m, ca * cb);
            }
        }
        return out;
    }

private:
    unsigned bound_;
    std::map<Monomial, BigInt, DegLexLess> coeffs_;
};

namespace detail {

// (1 + t_g)^e truncated: generalized binomial coefficients, exact for e < 0.
inline MagnusExpansion generator_power_expansion(std::uint32_t g, std::int64_t e, unsigned bound) {
    MagnusExpansion out(bound);
    BigInt c = 1;
    Monomial m;
    for (unsigned k = 0;; ++k) {
        out.add(m, c);
        if (k == bound || c == 0) break;
        c *= BigInt(e) - k;
        c /= k + 1;
        m.push_back(g);
    }
    return out;
}

struct ExpansionCache {
    std::map<std::pair<ReducedWord, unsigned>, std::shared_ptr<const MagnusExpansion>> entries;
};

inline ExpansionCache& expansion_cache() {
    thread_local ExpansionCache cache;
    return cache;
}

}  // namespace detail

inline std::shared_ptr<const MagnusExpansion> magnus_expand_shared(const ReducedWord& w,
                                                                   unsigned degree_bound) {
    auto& cache = detail::expansion_cache();
    auto key = std::make_pair(w, degree_bound);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;

    MagnusExpansion acc = MagnusExpansion::one(degree_bound);
    for (const auto& s : w.syllables())
        acc = truncated_product(acc, detail::generator_power_expansion(s.generator, s.exponent, degree_bound));

    if (cache.entries.size() > 1u << 20) cache.entries.clear();
    auto ptr = std::make_shared<const MagnusExpansion>(std::move(acc));
    cache.entries.emplace(std::move(key), ptr);
    return ptr;
}

inline MagnusExpansion magnus_expand(const ReducedWord& w, unsigned degree_bound) {
    return *magnus_expand_shared(w, degree_bound);
}

enum class Ordering { less, equal, greater };

inline std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        case Ordering::greater: return "greater";
    }
    return "?";
}

inline constexpr unsigned default_degree_cap = 64;

// The first monomial (deg-lex) where the two expansions differ, plus both
// coefficients there and the truncation degree that decided it.
struct CompareWitness {
    Ordering relation = Ordering::equal;
    Monomial monomial;
    BigInt lhs_coefficient;
    BigInt rhs_coefficient;
    unsigned degree_used = 0;
};

namespace detail {

// First differing key of two expansions with the same bound, walking both
// maps in deg-lex order.  Returns false if they agree up to the bound.
inline bool first_difference(const MagnusExpansion& a, const MagnusExpansion& b,
                             Monomial& where, BigInt& ca, BigInt& cb) {
    const auto& ma = a.coefficients();
    const auto& mb = b.coefficients();
    auto ia = ma.begin();
    auto ib = mb.begin();
    DegLexLess less;
    while (ia != ma.end() || ib != mb.end()) {
        if (ib == mb.end() || (ia != ma.end() && less(ia->first, ib->first))) {
            where = ia->first, ca = ia->second, cb = 0;
            return true;
        }
        if (ia == ma.end() || less(ib->first, ia->first)) {
            where = ib->first, ca = 0, cb = ib->second;
            return true;
        }
        if (ia->second != ib->second) {
            where = ia->first, ca = ia->second, cb = ib->second;
            return true;
        }
        ++ia, ++ib;
    }
    return false;
}

struct CompareCache {
    std::map<std::pair<ReducedWord, ReducedWord>, Ordering> entries;
};

inline CompareCache& compare_cache() {
    thread_local CompareCache cache;
    return cache;
}

}  // namespace detail

inline CompareWitness compare_witness(const ReducedWord& a, const ReducedWord& b,
                                      unsigned degree_cap = default_degree_cap) {
    CompareWitness w;
    if (a == b) return w;
    for (unsigned d = 2;; d = std::min(2 * d, degree_cap)) {
        auto ea = magnus_expand_shared(a, d);
        auto eb = magnus_expand_shared(b, d);
        if (detail::first_difference(*ea, *eb, w.monomial, w.lhs_coefficient, w.rhs_coefficient)) {
            w.relation = w.lhs_coefficient < w.rhs_coefficient ? Ordering::less : Ordering::greater;
            w.degree_used = d;
            return w;
        }
        if (d >= degree_cap) throw OrderUndecided(degree_cap);
    }
}

inline Ordering compare(const ReducedWord& a, const ReducedWord& b,
                        unsigned degree_cap = default_degree_cap) {
    if (a == b) return Ordering::equal;
    auto& cache = detail::compare_cache();
    auto key = std::make_pair(a, b);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
    Ordering rel = compare_witness(a, b, degree_cap).relation;
    if (cache.entries.size() > 1u << 20) cache.entries.clear();
    cache.entries.emplace(std::move(key), rel);
    return rel;
}

inline bool word_less(const ReducedWord& a, const ReducedWord& b,
                      unsigned degree_cap = default_degree_cap) {
    return compare(a, b, degree_cap) == Ordering::less;
}

// Comparator object for ordered containers / sorting by the group order.
struct MagnusLess {
    unsigned degree_cap = default_degree_cap;
    bool operator()(const ReducedWord& a, const ReducedWord& b) const {
        return word_less(a, b, degree_cap);
    }
};

template <typename Iter>
Iter min_of_support_iter(Iter first, Iter last, unsigned degree_cap = default_degree_cap) {
    if (first == last) throw EmptySupport();
    Iter best = first;
    for (Iter it = std::next(first); it != last; ++it)
        if (word_less(*it, *best, degree_cap)) best = it;
    return best;
}

inline const ReducedWord& min_of_support(const std::vector<ReducedWord>& words,
                                         unsigned degree_cap = default_degree_cap) {
    return *min_of_support_iter(words.begin(), words.end(), degree_cap);
}

}  // namespace malcev
