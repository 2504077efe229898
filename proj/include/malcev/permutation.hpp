#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "errors.hpp"

namespace malcev {

// An element of S_3 acting on {1,2,3}.  Composition is the left action:
// (a*b)(p) = a(b(p)).
class Perm3 {
public:
    constexpr Perm3() = default;

    static constexpr Perm3 identity() { return {}; }

    static Perm3 transposition(int a, int b) {
        Perm3 p;
        p.img_[a - 1] = b;
        p.img_[b - 1] = a;
        return p;
    }

    static Perm3 cycle(int a, int b, int c) {  // a -> b -> c -> a
        Perm3 p;
        p.img_[a - 1] = b;
        p.img_[b - 1] = c;
        p.img_[c - 1] = a;
        return p;
    }

    static const std::array<Perm3, 6>& all() {
        static const std::array<Perm3, 6> elems = {
            identity(),         transposition(1, 2), transposition(1, 3),
            transposition(2, 3), cycle(1, 2, 3),     cycle(1, 3, 2)};
        return elems;
    }

    int operator()(int p) const { return img_[p - 1]; }

    friend Perm3 operator*(const Perm3& a, const Perm3& b) {
        Perm3 out;
        for (int p = 1; p <= 3; ++p) out.img_[p - 1] = a(b(p));
        return out;
    }

    Perm3 inverse() const {
        Perm3 out;
        for (int p = 1; p <= 3; ++p) out.img_[img_[p - 1] - 1] = p;
        return out;
    }

    Perm3 pow(std::int64_t k) const {
        Perm3 base = k < 0 ? inverse() : *this;
        if (k < 0) k = -k;
        k %= order();
        Perm3 acc;
        for (std::int64_t i = 0; i < k; ++i) acc = acc * base;
        return acc;
    }

    int order() const {
        Perm3 acc = *this;
        int n = 1;
        while (!acc.is_identity()) {
            acc = acc * (*this);
            ++n;
        }
        return n;
    }

    bool is_identity() const { return img_ == std::array<std::uint8_t, 3>{1, 2, 3}; }

    friend bool operator==(const Perm3&, const Perm3&) = default;
    friend auto operator<=>(const Perm3&, const Perm3&) = default;

    std::string to_string() const {
        if (is_identity()) return "id";
        // Fixed point => a transposition of the other two.
        for (int p = 1; p <= 3; ++p)
            if ((*this)(p) == p) {
                int a = p == 1 ? 2 : 1;
                int b = p == 3 ? 2 : 3;
                return "(" + std::to_string(a) + " " + std::to_string(b) + ")";
            }
        return (*this)(1) == 2 ? "(1 2 3)" : "(1 3 2)";
    }

private:
    std::array<std::uint8_t, 3> img_ = {1, 2, 3};
};

using PermSet = std::set<Perm3>;

inline bool is_subgroup(const PermSet& s) {
    if (!s.contains(Perm3::identity())) return false;
    for (const auto& a : s) {
        if (!s.contains(a.inverse())) return false;
        for (const auto& b : s)
            if (!s.contains(a * b)) return false;
    }
    return true;
}

inline PermSet conjugate_set(const PermSet& s, const Perm3& g) {
    PermSet out;
    for (const auto& a : s) out.insert(g * a * g.inverse());
    return out;
}

// Largest normal subgroup of S_3 contained in s: intersect all conjugates.
inline PermSet core_in_s3(const PermSet& s) {
    if (!is_subgroup(s)) throw NotASubgroup("core is defined for subgroups only");
    PermSet core = s;
    for (const auto& g : Perm3::all()) {
        PermSet conj = conjugate_set(s, g);
        PermSet inter;
        for (const auto& a : core)
            if (conj.contains(a)) inter.insert(a);
        core = std::move(inter);
    }
    return core;
}

}  // namespace malcev
