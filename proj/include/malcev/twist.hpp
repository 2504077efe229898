#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "free_group.hpp"
#include "rational_function.hpp"

namespace malcev {

// Automorphism of Q(s) from the shift family s |-> s + c.  Composition adds
// shifts, so the family is an abelian subgroup of Aut(Q(s)).
class FieldAutomorphism {
public:
    FieldAutomorphism() = default;
    explicit FieldAutomorphism(std::int64_t shift) : shift_(shift) {}

    std::int64_t shift() const { return shift_; }
    bool is_identity() const { return shift_ == 0; }

    RationalFunction operator()(const RationalFunction& f) const {
        if (shift_ == 0) return f;
        return {f.numerator().shifted(shift_), f.denominator().shifted(shift_)};
    }

    FieldAutomorphism inverse() const { return FieldAutomorphism(-shift_); }

    friend FieldAutomorphism operator*(FieldAutomorphism a, FieldAutomorphism b) {
        return FieldAutomorphism(a.shift_ + b.shift_);
    }
    friend bool operator==(const FieldAutomorphism&, const FieldAutomorphism&) = default;

private:
    std::int64_t shift_ = 0;
};

// The homomorphism g |-> Phi_g in Aut(K): generator x_i contributes
// weight(i) per signed occurrence, so Phi_g shifts by the weighted exponent
// sum of g.  Factors through the abelianization, hence Phi_{gh} = Phi_g Phi_h
// and commutators act trivially.
class TwistMap {
public:
    TwistMap() = default;
    explicit TwistMap(std::map<std::uint32_t, std::int64_t> weights) : weights_(std::move(weights)) {
        std::erase_if(weights_, [](const auto& kv) { return kv.second == 0; });
    }

    static TwistMap trivial() { return TwistMap(); }

    const std::map<std::uint32_t, std::int64_t>& weights() const { return weights_; }
    bool is_trivial() const { return weights_.empty(); }

    FieldAutomorphism operator()(const ReducedWord& g) const {
        std::int64_t shift = 0;
        for (const auto& s : g.syllables()) {
            auto it = weights_.find(s.generator);
            if (it != weights_.end()) shift += it->second * s.exponent;
        }
        return FieldAutomorphism(shift);
    }

    friend bool operator==(const TwistMap&, const TwistMap&) = default;

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [i, w] : weights_) {
            if (!first) out += ", ";
            first = false;
            out += std::to_string(i) + ": " + std::to_string(w);
        }
        return out + "}";
    }

private:
    std::map<std::uint32_t, std::int64_t> weights_;
};

}  // namespace malcev
