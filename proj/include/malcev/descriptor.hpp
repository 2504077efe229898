#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace malcev {

// Shape of one step of an almost normal series: the next subgroup is either
// normal in the previous one, or of finite index l in it.
struct NormalLevel {
    friend bool operator==(const NormalLevel&, const NormalLevel&) = default;
};
struct FiniteIndexLevel {
    std::uint64_t index = 2;  // l >= 2
    friend bool operator==(const FiniteIndexLevel&, const FiniteIndexLevel&) = default;
};
using ChainLevel = std::variant<NormalLevel, FiniteIndexLevel>;

inline std::uint64_t factorial(std::uint64_t n) {
    assert(n <= 20);
    std::uint64_t out = 1;
    for (std::uint64_t k = 2; k <= n; ++k) out *= k;
    return out;
}

// Descriptor of a depth-r almost normal series, levels indexed 1..r.  Steps
// past the last described level count as normal (the recursions switch to
// the commutator branch for n > r).
class ChainDescriptor {
public:
    explicit ChainDescriptor(std::vector<ChainLevel> levels) : levels_(std::move(levels)) {
        for (const auto& l : levels_)
            if (const auto* f = std::get_if<FiniteIndexLevel>(&l); f && f->index < 2)
                throw Error("finite-index level requires index >= 2");
    }

    static ChainDescriptor single_finite_index(std::uint64_t index) {
        return ChainDescriptor({FiniteIndexLevel{index}});
    }

    std::size_t depth() const { return levels_.size(); }  // r
    const std::vector<ChainLevel>& levels() const { return levels_; }

    ChainLevel level(unsigned n) const {  // 1-based; n > r is a normal step
        assert(n >= 1);
        if (n > levels_.size()) return NormalLevel{};
        return levels_[n - 1];
    }

    friend bool operator==(const ChainDescriptor&, const ChainDescriptor&) = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (i) out += ',';
            if (std::holds_alternative<NormalLevel>(levels_[i]))
                out += 'N';
            else
                out += 'F' + std::to_string(std::get<FiniteIndexLevel>(levels_[i]).index);
        }
        return out;
    }

private:
    std::vector<ChainLevel> levels_;
};

}  // namespace malcev
