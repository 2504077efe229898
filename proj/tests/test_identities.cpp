#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "malcev/identities.hpp"
#include "malcev/permutation.hpp"
#include "malcev/sampling.hpp"
#include "malcev/subgroups.hpp"

using namespace malcev;

namespace {

const TwistMap kTwist({{1, 1}, {2, -2}});

ReducedWord X(std::uint32_t i, std::int64_t e = 1) { return ReducedWord::generator(i, e); }

const std::vector<ChainDescriptor> kSmallChains = {
    ChainDescriptor({NormalLevel{}}),
    ChainDescriptor::single_finite_index(2),
    ChainDescriptor::single_finite_index(3),
    ChainDescriptor({NormalLevel{}, FiniteIndexLevel{2}}),
    ChainDescriptor({FiniteIndexLevel{2}, NormalLevel{}}),
    ChainDescriptor({FiniteIndexLevel{2}, FiniteIndexLevel{3}, NormalLevel{}}),
};

}  // namespace

TEST_CASE("conjugation normal form holds exactly for every small chain") {
    for (const auto& desc : kSmallChains)
        for (unsigned n = 0; n <= 4; ++n) {
            SymbolicCheck check = verify_lemma5_symbolic(n, desc);
            INFO(desc.to_string() << " at step " << n);
            REQUIRE(check.u_side);
            REQUIRE(check.v_side);
        }
}

TEST_CASE("a wrong companion word is rejected symbolically") {
    // Replacing the commutator [h, g] by the bare conjugate h g h^-1 (or by
    // g-conjugation of h) breaks the factorization; the check must notice.
    ChainDescriptor desc({NormalLevel{}});
    WordExpr bad = WordExpr::var("h") * WordExpr::var("g") * WordExpr::var("h").inverse();
    REQUIRE_FALSE(verify_conjugation_symbolic_with(1, desc, bad).ok());

    WordExpr conj_only =
        WordExpr::var("g") * WordExpr::var("h") * WordExpr::var("g").inverse();
    REQUIRE_FALSE(verify_conjugation_symbolic_with(1, desc, conj_only).ok());

    // The correct word passes the same entry point.
    REQUIRE(verify_conjugation_symbolic_with(1, desc, build_phi(1, desc)).ok());
}

TEST_CASE("numeric residual vanishes at truncation depth") {
    Rng rng(81);
    for (const auto& desc : kSmallChains) {
        ReducedWord h = random_nonidentity_word(rng, 2, 2);
        ReducedWord g = random_nonidentity_word(rng, 2, 2);
        for (unsigned n = 0; n <= 2; ++n) {
            ResidualReport report = verify_lemma5_numeric(n, desc, h, g, 3, kTwist);
            INFO(desc.to_string() << " at step " << n << " with h=" << h.to_string()
                                  << " g=" << g.to_string());
            REQUIRE(report.ok);
            REQUIRE_FALSE(report.offending.has_value());
        }
    }
}

TEST_CASE("numeric check exposes a surviving term for a wrong companion word") {
    ChainDescriptor desc({NormalLevel{}});
    WordExpr bad = WordExpr::var("h") * WordExpr::var("g") * WordExpr::var("h").inverse();
    ResidualReport report = verify_conjugation_numeric_with(1, desc, bad, X(1), X(2), 3, kTwist);
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.offending.has_value());
}

TEST_CASE("commutator rewrite with the inverted conjugator holds exactly") {
    for (const auto& desc : kSmallChains)
        for (unsigned n = 0; n <= 3; ++n) {
            INFO(desc.to_string() << " at step " << n);
            REQUIRE(verify_alpha_conjugation(n, desc));
        }
}

TEST_CASE("chain step maps certificates level by level") {
    ReducedWord a = X(1);
    ReducedWord b = X(2);
    ReducedWord c = X(1) * X(2);

    auto normal = h_chain_step(NormalLevel{}, a, {b, c});
    REQUIRE(normal == std::vector<ReducedWord>{b * a * b.inverse(), c * a * c.inverse()});

    auto finite = h_chain_step(FiniteIndexLevel{3}, a, {b, c});
    REQUIRE(finite == std::vector<ReducedWord>{b.pow(6), c.pow(6)});
}

TEST_CASE("the eight-letter word is an identity exactly on commuting pairs") {
    WordExpr e = dihedral_identity_word();
    WordOps ops;

    // Powers of a common base commute, so the word collapses.
    Rng rng(82);
    for (int trial = 0; trial < 100; ++trial) {
        ReducedWord base = random_nonidentity_word(rng, 4, 3);
        std::map<std::string, ReducedWord> env{{"x", base.pow(rng.range(-3, 3))},
                                               {"a", base.pow(rng.range(-3, 3))}};
        REQUIRE(e.eval(env, ops).is_identity());
    }

    // On free generators it is nontrivial of full length.
    std::map<std::string, ReducedWord> free_env{{"x", X(2)}, {"a", X(1)}};
    ReducedWord value = e.eval(free_env, ops);
    REQUIRE_FALSE(value.is_identity());
    REQUIRE(value.length() == 8);
}

TEST_CASE("sixth powers commute universally in the symmetric group on three points") {
    WordExpr e = sixth_power_commutator_word();
    PermOps ops;
    for (const Perm3& p : Perm3::all())
        for (const Perm3& q : Perm3::all()) {
            std::map<std::string, Perm3> env{{"x", p}, {"y", q}};
            REQUIRE(e.eval(env, ops) == Perm3::identity());
        }
}

TEST_CASE("sampled identity checking reports counterexamples") {
    WordExpr e = dihedral_identity_word();
    WordOps ops;
    Rng rng(83);

    auto commuting = [&](unsigned) {
        ReducedWord base = random_nonidentity_word(rng, 3, 3);
        return std::map<std::string, ReducedWord>{{"x", base.pow(2)}, {"a", base}};
    };
    auto is_one = [](const ReducedWord& w) { return w.is_identity(); };
    auto verdict = check_identity(e, commuting, 50, ops, is_one);
    REQUIRE(verdict.holds);
    REQUIRE_FALSE(verdict.counterexample.has_value());

    auto free_pairs = [&](unsigned) {
        return std::map<std::string, ReducedWord>{{"x", X(2)}, {"a", X(1)}};
    };
    auto refuted = check_identity(e, free_pairs, 50, ops, is_one);
    REQUIRE_FALSE(refuted.holds);
    REQUIRE(refuted.counterexample.has_value());
    REQUIRE(refuted.counterexample->at("x") == X(2));
}

TEST_CASE("approximate units are recognized") {
    REQUIRE(approx_is_one(ApproxSeries::exact(Series::one())));
    REQUIRE_FALSE(approx_is_one(ApproxSeries::exact(Series::word(X(1)))));

    // A truncated inverse times its argument is one up to the guarantee.
    ApproxOps ops{kTwist, 4};
    ApproxSeries one_plus_g = ApproxSeries::exact(Series::one() + Series::word(X(2)));
    REQUIRE(approx_is_one(ops.mul(ops.inv(one_plus_g), one_plus_g)));
    REQUIRE(approx_is_one(ops.mul(one_plus_g, ops.inv(one_plus_g))));
}

TEST_CASE("base case of the series recursion is the bare conjugate") {
    ChainDescriptor desc({NormalLevel{}});
    UVPair uv = build_u_v(0, desc, X(1), X(2), 3, kTwist);

    // d(u_0) = h because the conjugator (1+g) has leading word 1.
    REQUIRE(uv.u.terms().d() == X(1));
    REQUIRE(uv.v.terms().d() == X(1));
    REQUIRE_FALSE(approx_is_one(uv.u));

    // u_0 agrees with (1+g) h (1+g)^-1 computed directly.
    ApproxOps ops{kTwist, 3};
    ApproxSeries one_plus_g = ApproxSeries::exact(Series::one() + Series::word(X(2)));
    ApproxSeries direct = ops.mul(ops.mul(one_plus_g, ApproxSeries::exact(Series::word(X(1)))),
                                  ops.inv(one_plus_g));
    REQUIRE(approx_sub(uv.u, direct).terms().is_zero());
}

TEST_CASE("deeper truncation refines the series recursion") {
    ChainDescriptor desc({NormalLevel{}, NormalLevel{}});
    UVPair coarse = build_u_v(1, desc, X(1), X(2), 2, kTwist);
    UVPair fine = build_u_v(1, desc, X(1), X(2), 5, kTwist);

    REQUIRE(coarse.u.guarantee().has_value());
    REQUIRE(fine.u.guarantee().has_value());
    // The finer run's guarantee sits strictly later in the order, and the two
    // runs agree on every term below the coarse guarantee.
    REQUIRE(word_less(*coarse.u.guarantee(), *fine.u.guarantee()));
    Series diff = fine.u.terms() - coarse.u.terms();
    if (!diff.is_zero()) REQUIRE_FALSE(word_less(diff.d(), *coarse.u.guarantee()));
}
