#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "approx_series.hpp"
#include "descriptor.hpp"
#include "free_group.hpp"
#include "series.hpp"
#include "trace_word.hpp"
#include "twist.hpp"
#include "word_expr.hpp"

namespace malcev {

// w_0 = x;  w_n = [w_{n-1}, y] for a normal step (or n past the chain),
// w_n = w_{n-1}^{l!} for a finite-index-l step.
inline WordExpr build_w(unsigned n, const ChainDescriptor& desc) {
    WordExpr w = WordExpr::var("x");
    for (unsigned k = 1; k <= n; ++k) {
        ChainLevel level = desc.level(k);
        if (const auto* f = std::get_if<FiniteIndexLevel>(&level))
            w = w.pow(static_cast<std::int64_t>(factorial(f->index)));
        else
            w = WordExpr::commutator(w, WordExpr::var("y"));
    }
    return w;
}

// Conjugation normal form: u_n = (1+g) phi_n (1+g)^-1 requires
//   phi_0 = h;  phi_n = [phi_{n-1}, g] (normal step);  phi_n = phi_{n-1}^{l!}.
// The commutator (rather than a bare conjugate) in the normal step is what
// makes the identity close under the rule (1+g)g = g(1+g): expanding
// [ (1+g)phi(1+g)^-1, g ] leaves a trailing g^-1 that must be absorbed into
// phi_n for the (1+g)-conjugation to factor out.
inline WordExpr build_phi(unsigned n, const ChainDescriptor& desc) {
    WordExpr phi = WordExpr::var("h");
    for (unsigned k = 1; k <= n; ++k) {
        ChainLevel level = desc.level(k);
        if (const auto* f = std::get_if<FiniteIndexLevel>(&level))
            phi = phi.pow(static_cast<std::int64_t>(factorial(f->index)));
        else
            phi = WordExpr::commutator(phi, WordExpr::var("g"));
    }
    return phi;
}

// u_n(h,g) = w_n((1+g) h (1+g)^-1, g) and v_n(h,g) = w_n((1+g)^-1 h (1+g), g),
// evaluated over the series ring with truncated inversion.
struct UVPair {
    ApproxSeries u;
    ApproxSeries v;
};

inline UVPair build_u_v(unsigned n, const ChainDescriptor& desc, const ReducedWord& h,
                        const ReducedWord& g, unsigned depth, const TwistMap& twist) {
    ApproxOps ops{twist, depth};
    ApproxSeries one_plus_g = ApproxSeries::exact(Series::one() + Series::word(g));
    ApproxSeries inv_one_plus_g = ops.inv(one_plus_g);
    ApproxSeries hh = ApproxSeries::exact(Series::word(h));
    ApproxSeries gg = ApproxSeries::exact(Series::word(g));

    WordExpr w = build_w(n, desc);
    std::map<std::string, ApproxSeries> env_u{
        {"x", ops.mul(ops.mul(one_plus_g, hh), inv_one_plus_g)}, {"y", gg}};
    std::map<std::string, ApproxSeries> env_v{
        {"x", ops.mul(ops.mul(inv_one_plus_g, hh), one_plus_g)}, {"y", gg}};
    return {w.eval(env_u, ops), w.eval(env_v, ops)};
}

// Exact verification of the conjugation normal form in the partially
// commutative group <h, g, U | Ug = gU>, where U plays the role of 1+g:
// substitute x -> U h U^-1 (resp. U^-1 h U) into w_n and compare the normal
// form against U phi_n U^-1 (resp. U^-1 phi_n U).
struct SymbolicCheck {
    bool u_side = false;
    bool v_side = false;
    bool ok() const { return u_side && v_side; }
};

inline SymbolicCheck verify_conjugation_symbolic_with(unsigned n, const ChainDescriptor& desc,
                                                      const WordExpr& phi_expr) {
    TraceOps ops;
    TraceWord h = TraceWord::letter(TraceLetter::h);
    TraceWord g = TraceWord::letter(TraceLetter::g);
    TraceWord u = TraceWord::letter(TraceLetter::unit);

    WordExpr w = build_w(n, desc);
    TraceWord phi = phi_expr.eval<TraceOps>({{"h", h}, {"g", g}}, ops);

    TraceWord u_n = w.eval<TraceOps>({{"x", u * h * u.inverse()}, {"y", g}}, ops);
    TraceWord v_n = w.eval<TraceOps>({{"x", u.inverse() * h * u}, {"y", g}}, ops);

    SymbolicCheck out;
    out.u_side = u_n == u * phi * u.inverse();
    out.v_side = v_n == u.inverse() * phi * u;
    return out;
}

inline SymbolicCheck verify_lemma5_symbolic(unsigned n, const ChainDescriptor& desc) {
    return verify_conjugation_symbolic_with(n, desc, build_phi(n, desc));
}

// Numeric counterpart at truncation depth: Delta = (1+g) phi_n - u_n (1+g)
// as approximate series.  Every sub-guarantee coefficient of Delta is exact,
// so the identity holds iff no terms survive; a surviving term exhibits a
// concrete discrepancy below the guarantee.
struct ResidualReport {
    bool ok = false;
    std::optional<ReducedWord> guarantee;  // of Delta (nullopt if exact)
    std::optional<ReducedWord> offending;  // min support of surviving terms
};

inline ResidualReport verify_conjugation_numeric_with(unsigned n, const ChainDescriptor& desc,
                                                      const WordExpr& phi_expr,
                                                      const ReducedWord& h, const ReducedWord& g,
                                                      unsigned depth, const TwistMap& twist) {
    ApproxOps ops{twist, depth};
    Series one_plus_g = Series::one() + Series::word(g);
    ReducedWord phi_word = phi_expr.eval<WordOps>({{"h", h}, {"g", g}}, WordOps{});
    Series lhs = mul(one_plus_g, Series::word(phi_word), twist);

    ApproxSeries u_n = build_u_v(n, desc, h, g, depth, twist).u;
    ApproxSeries rhs = approx_mul(u_n, ApproxSeries::exact(one_plus_g), twist);
    ApproxSeries delta = approx_sub(ApproxSeries::exact(lhs), rhs);

    ResidualReport report;
    report.ok = delta.terms().is_zero();
    report.guarantee = delta.guarantee();
    if (!report.ok) report.offending = delta.terms().d();
    return report;
}

inline ResidualReport verify_lemma5_numeric(unsigned n, const ChainDescriptor& desc,
                                            const ReducedWord& h, const ReducedWord& g,
                                            unsigned depth, const TwistMap& twist) {
    return verify_conjugation_numeric_with(n, desc, build_phi(n, desc), h, g, depth, twist);
}

// alpha(h,g) = [phi_n, u_n] rewrites as (1+g) [v_n, phi_n] (1+g)^-1; checked
// exactly by the same partially commutative rewriting.
inline bool verify_alpha_conjugation(unsigned n, const ChainDescriptor& desc) {
    TraceOps ops;
    TraceWord h = TraceWord::letter(TraceLetter::h);
    TraceWord g = TraceWord::letter(TraceLetter::g);
    TraceWord u = TraceWord::letter(TraceLetter::unit);

    WordExpr w = build_w(n, desc);
    TraceWord phi = build_phi(n, desc).eval<TraceOps>({{"h", h}, {"g", g}}, ops);
    TraceWord u_n = w.eval<TraceOps>({{"x", u * h * u.inverse()}, {"y", g}}, ops);
    TraceWord v_n = w.eval<TraceOps>({{"x", u.inverse() * h * u}, {"y", g}}, ops);

    TraceWord lhs = phi * u_n * phi.inverse() * u_n.inverse();
    TraceWord rhs = u * (v_n * phi * v_n.inverse() * phi.inverse()) * u.inverse();
    return lhs == rhs;
}

// One step of the H_n chain: each certified b of the previous level yields
// b a b^-1 (normal step) or b^{l!} (finite-index step).
inline std::vector<ReducedWord> h_chain_step(const ChainLevel& level, const ReducedWord& a,
                                             const std::vector<ReducedWord>& previous_level) {
    std::vector<ReducedWord> out;
    out.reserve(previous_level.size());
    for (const auto& b : previous_level) {
        if (const auto* f = std::get_if<FiniteIndexLevel>(&level))
            out.push_back(b.pow(static_cast<std::int64_t>(factorial(f->index))));
        else
            out.push_back(b * a * b.inverse());
    }
    return out;
}

// The identity from the two-generator criterion: x a x^-1 a x a^-1 x^-1 a^-1,
// an identity of any abelian subgroup, with known free counterexamples.
inline WordExpr dihedral_identity_word() {
    WordExpr x = WordExpr::var("x");
    WordExpr a = WordExpr::constant("a");
    return WordExpr::product(
        {x, a, x.inverse(), a, x, a.inverse(), x.inverse(), a.inverse()});
}

inline WordExpr sixth_power_commutator_word() {
    WordExpr x = WordExpr::var("x");
    WordExpr y = WordExpr::var("y");
    return WordExpr::product({x.pow(6), y.pow(6), x.pow(-6), y.pow(-6)});
}

// Generic sampled identity check.  sample(i) produces the i-th environment;
// is_one decides triviality in the target group.
template <typename Ops>
struct IdentityVerdict {
    bool holds = true;
    std::optional<std::map<std::string, typename Ops::value_type>> counterexample;
};

template <typename Ops, typename Sampler, typename IsOne>
IdentityVerdict<Ops> check_identity(const WordExpr& e, Sampler&& sample, unsigned trials,
                                    const Ops& ops, IsOne&& is_one) {
    IdentityVerdict<Ops> verdict;
    for (unsigned i = 0; i < trials; ++i) {
        auto env = sample(i);
        if (!is_one(e.eval(env, ops))) {
            verdict.holds = false;
            verdict.counterexample = std::move(env);
            return verdict;
        }
    }
    return verdict;
}

inline bool approx_is_one(const ApproxSeries& x) {
    return approx_sub(x, ApproxSeries::exact(Series::one())).terms().is_zero();
}

}  // namespace malcev
