#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "free_group.hpp"
#include "permutation.hpp"
#include "rational_function.hpp"
#include "series.hpp"
#include "subgroups.hpp"

namespace malcev {

// Deterministic source: mt19937_64 raw output is fixed by the standard, and
// all bounded draws below use plain modulo so that identical seeds give
// identical samples on every platform (std::uniform_int_distribution is
// implementation-defined and must not be used here).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t n) { return next() % n; }  // n > 0

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return next() & 1; }

private:
    std::mt19937_64 engine_;
};

// Uniform letters x_i^{+-1}, i <= max_generator; length drawn in [0, max_length].
inline ReducedWord random_word(Rng& rng, unsigned max_length, unsigned max_generator) {
    unsigned len = static_cast<unsigned>(rng.below(max_length + 1));
    ReducedWord w;
    for (unsigned i = 0; i < len; ++i) {
        auto gen = static_cast<std::uint32_t>(1 + rng.below(max_generator));
        w *= ReducedWord::generator(gen, rng.flip() ? 1 : -1);
    }
    return w;
}

inline ReducedWord random_nonidentity_word(Rng& rng, unsigned max_length, unsigned max_generator) {
    for (;;) {
        ReducedWord w = random_word(rng, max_length, max_generator);
        if (!w.is_identity()) return w;
    }
}

// Small exact coefficients: numerator degree <= 2 with entries in [-3, 3],
// denominator 1 or a monic linear factor, never zero overall.
inline RationalFunction random_field_element(Rng& rng) {
    for (;;) {
        std::vector<Rational> num;
        unsigned deg = static_cast<unsigned>(rng.below(3));
        for (unsigned i = 0; i <= deg; ++i) num.emplace_back(rng.range(-3, 3));
        Polynomial n = Polynomial::from_coefficients(std::move(num));
        if (n.is_zero()) continue;
        Polynomial d(1);
        if (rng.flip())
            d = Polynomial::variable() + Polynomial(Rational(rng.range(-2, 2)));
        return {n, d};
    }
}

inline Series random_series(Rng& rng, unsigned max_support, unsigned max_word_length,
                            unsigned max_generator) {
    for (;;) {
        Series s;
        unsigned terms = 1 + static_cast<unsigned>(rng.below(max_support));
        for (unsigned i = 0; i < terms; ++i)
            s.add_term(random_word(rng, max_word_length, max_generator), random_field_element(rng));
        if (!s.is_zero()) return s;
    }
}

inline Series random_series_with_support_at_least(Rng& rng, unsigned min_support,
                                                  unsigned max_support, unsigned max_word_length,
                                                  unsigned max_generator) {
    for (;;) {
        Series s = random_series(rng, max_support, max_word_length, max_generator);
        if (s.support_size() >= min_support) return s;
    }
}

// A unit of the form 1 + eps with d(eps) > 1: normalize a random series by
// its leading monomial.
inline Series random_normalized_unit(Rng& rng, const TwistMap& twist, unsigned max_support,
                                     unsigned max_word_length, unsigned max_generator) {
    Series s = random_series_with_support_at_least(rng, 2, max_support, max_word_length,
                                                   max_generator);
    auto [u, c] = s.leading();
    ReducedWord u_inv = u.inverse();
    Series m_inv = Series::monomial(u_inv, twist(u_inv)(c.inverse()));
    return mul(m_inv, s, twist);
}

// Word with phi-image in H = {id, (1 2)} (rejection; H hits 1/3 of S_3).
inline ReducedWord random_word_in_h(Rng& rng, const S3Hom& phi, unsigned max_length,
                                    unsigned max_generator) {
    for (;;) {
        ReducedWord w = random_word(rng, max_length, max_generator);
        if (in_H(phi, w)) return w;
    }
}

inline Perm3 random_perm(Rng& rng) { return Perm3::all()[rng.below(6)]; }

}  // namespace malcev
