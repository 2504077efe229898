#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "approx_series.hpp"
#include "errors.hpp"
#include "free_group.hpp"
#include "permutation.hpp"
#include "series.hpp"

namespace malcev {

// The homomorphism phi: G -> S_3 sending x_lambda -> (1 2), x_mu -> (1 2 3)
// and every other generator to the identity.  With H = phi^-1({id, (1 2)}),
// H has index 3, is non-normal, and is maximal; picking lambda, mu fresh for
// a word x forces phi(x) = id, so x lies in H.
class S3Hom {
public:
    S3Hom(std::uint32_t lambda, std::uint32_t mu) : lambda_(lambda), mu_(mu) {}

    // lambda, mu = two smallest generator indices not occurring in x.
    static S3Hom avoiding(const ReducedWord& x) {
        auto used = x.generators_used();
        std::uint32_t fresh[2];
        std::uint32_t candidate = 1;
        for (int k = 0; k < 2; ++candidate)
            if (!used.contains(candidate)) fresh[k++] = candidate;
        return {fresh[0], fresh[1]};
    }

    std::uint32_t lambda() const { return lambda_; }
    std::uint32_t mu() const { return mu_; }

    Perm3 generator_image(std::uint32_t index) const {
        if (index == lambda_) return Perm3::transposition(1, 2);
        if (index == mu_) return Perm3::cycle(1, 2, 3);
        return Perm3::identity();
    }

    Perm3 operator()(const ReducedWord& w) const {
        Perm3 acc;
        for (const auto& s : w.syllables()) acc = acc * generator_image(s.generator).pow(s.exponent);
        return acc;
    }

private:
    std::uint32_t lambda_;
    std::uint32_t mu_;
};

inline bool perm_in_h(const Perm3& p) {
    return p.is_identity() || p == Perm3::transposition(1, 2);
}

inline bool in_H(const S3Hom& phi, const ReducedWord& w) { return perm_in_h(phi(w)); }

// N = d^-1(H): a series is in N iff the phi-image of its least support word
// lies in H.
inline bool in_N(const S3Hom& phi, const Series& alpha) { return in_H(phi, alpha.d()); }
inline bool in_N(const S3Hom& phi, const ApproxSeries& alpha) { return in_H(phi, alpha.d()); }

// Right cosets of H in S_3, canonical representatives id, (1 2 3), (1 3 2):
//   H           = {id, (1 2)}
//   H*(1 2 3)   = {(1 2 3), (2 3)}
//   H*(1 3 2)   = {(1 3 2), (1 3)}
enum class CosetLabel { h, h_123, h_132 };

inline CosetLabel coset_of(const Perm3& p) {
    if (perm_in_h(p)) return CosetLabel::h;
    if (p == Perm3::cycle(1, 2, 3) || p == Perm3::transposition(2, 3)) return CosetLabel::h_123;
    return CosetLabel::h_132;
}

inline std::string to_string(CosetLabel label) {
    switch (label) {
        case CosetLabel::h: return "H";
        case CosetLabel::h_123: return "H(1 2 3)";
        case CosetLabel::h_132: return "H(1 3 2)";
    }
    return "?";
}

inline CosetLabel coset_label(const S3Hom& phi, const Series& alpha) {
    return coset_of(phi(alpha.d()));
}
inline CosetLabel coset_label(const S3Hom& phi, const ApproxSeries& alpha) {
    return coset_of(phi(alpha.d()));
}

// alpha^6 in N always: the index is 3, so the 3!-th power of any phi-image
// is the identity permutation.
inline bool poincare_check(const S3Hom& phi, const Series& alpha) {
    return perm_in_h(phi(alpha.d()).pow(6));
}

// Membership certificate for the iterated normal closures
// G = <x>_0 |> <x>_1 |> ..., where <x>_n is the smallest normal subgroup of
// <x>_{n-1} containing x.  A node's level is the n for which evaluation is
// claimed to land in <x>_n; levels only descend along the chain, so any
// certificate of level >= n also certifies level n.
class ClosureExpr {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    struct Base {};                        // the distinguished word x
    struct Atom { ReducedWord word; };     // arbitrary word, level 0 only
    struct Conj { Ptr conjugator, body; };
    struct Prod { std::vector<Ptr> factors; };
    struct Inv { Ptr body; };

    struct Node {
        std::variant<Base, Atom, Conj, Prod, Inv> v;
        unsigned level = 0;
    };

public:
    // x itself certifies any level.
    static ClosureExpr base(unsigned level) { return make(Node{Base{}, level}); }

    static ClosureExpr atom(ReducedWord w) { return make(Node{Atom{std::move(w)}, 0}); }

    static ClosureExpr conj(const ClosureExpr& conjugator, const ClosureExpr& body) {
        return make(Node{Conj{conjugator.root_, body.root_}, body.root_->level});
    }

    static ClosureExpr product(const std::vector<ClosureExpr>& factors) {
        Prod p;
        unsigned level = 0;
        bool first = true;
        for (const auto& f : factors) {
            p.factors.push_back(f.root_);
            level = first ? f.root_->level : std::min(level, f.root_->level);
            first = false;
        }
        return make(Node{std::move(p), level});
    }

    static ClosureExpr inverse(const ClosureExpr& body) {
        return make(Node{Inv{body.root_}, body.root_->level});
    }

    // Override the claimed level (used to build deliberately bad trees in
    // tests, and to weaken a certificate to a shallower chain member).
    ClosureExpr at_level(unsigned level) const {
        Node n = *root_;
        n.level = level;
        return make(std::move(n));
    }

    unsigned level() const { return root_->level; }

    // Evaluate with the distinguished word x, validating levels: a Conj node
    // at level n needs a conjugator certified at level >= n-1 and a body at
    // level >= n; Atom nodes certify level 0 only (any word lies in G).
    ReducedWord eval(const ReducedWord& x) const { return eval_node(*root_, root_->level, x); }

private:
    static ClosureExpr make(Node n) {
        ClosureExpr e;
        e.root_ = std::make_shared<const Node>(std::move(n));
        return e;
    }

    static ReducedWord eval_node(const Node& node, unsigned required, const ReducedWord& x) {
        if (node.level < required)
            throw MalformedCertificate("node of level " + std::to_string(node.level) +
                                       " where level >= " + std::to_string(required) +
                                       " is required");
        return std::visit(
            [&]([[maybe_unused]] const auto& n) -> ReducedWord {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Base>) {
                    return x;
                } else if constexpr (std::is_same_v<T, Atom>) {
                    if (node.level > 0)
                        throw MalformedCertificate("arbitrary word claimed at level " +
                                                   std::to_string(node.level));
                    return n.word;
                } else if constexpr (std::is_same_v<T, Conj>) {
                    unsigned conj_level = node.level == 0 ? 0 : node.level - 1;
                    ReducedWord h = eval_node(*n.conjugator, conj_level, x);
                    ReducedWord b = eval_node(*n.body, node.level, x);
                    return h * b * h.inverse();
                } else if constexpr (std::is_same_v<T, Prod>) {
                    ReducedWord out;
                    for (const auto& f : n.factors) out *= eval_node(*f, node.level, x);
                    return out;
                } else {
                    return eval_node(*n.body, node.level, x).inverse();
                }
            },
            node.v);
    }

    Ptr root_;
};

}  // namespace malcev
