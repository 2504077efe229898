#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "approx_series.hpp"
#include "config.hpp"
#include "identities.hpp"
#include "magnus.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "series.hpp"
#include "subgroups.hpp"
#include "word_expr.hpp"

namespace malcev {

// ---------------------------------------------------------------------------
// order: total-order axioms and bi-invariance of the group order.
// ---------------------------------------------------------------------------
inline SuiteReport run_order_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    Tally totality, antisymmetry, transitivity, left_inv, right_inv, translation;

    auto leq = [](const ReducedWord& a, const ReducedWord& b) {
        return compare(a, b) != Ordering::greater;
    };

    for (unsigned i = 0; i < cfg.samples; ++i) {
        ReducedWord a = random_word(rng, 8, 5);
        ReducedWord b = random_word(rng, 8, 5);
        ReducedWord c = random_word(rng, 8, 5);

        Ordering ab = compare(a, b);
        Ordering ba = compare(b, a);
        // Connex + converse consistency: exactly one relation, mirrored.
        totality.count((ab == Ordering::less && ba == Ordering::greater) ||
                       (ab == Ordering::greater && ba == Ordering::less) ||
                       (ab == Ordering::equal && ba == Ordering::equal));
        // Equality in the order is word identity.
        antisymmetry.count((ab == Ordering::equal) == (a == b));
        // Transitivity over the sampled triple.
        bool trans = true;
        if (leq(a, b) && leq(b, c)) trans &= leq(a, c);
        if (leq(b, a) && leq(a, c)) trans &= leq(b, c);
        if (leq(a, c) && leq(c, b)) trans &= leq(a, b);
        transitivity.count(trans);
        // Multiplication on either side preserves the relation.
        left_inv.count(compare(c * a, c * b) == ab);
        right_inv.count(compare(a * c, b * c) == ab);
        // Translation to a one-sided comparison with 1.
        ReducedWord e;
        translation.count(compare(e, a.inverse() * b) == ab &&
                          compare(e, b * a.inverse()) == ab);
    }

    SuiteReport report{"order", cfg.to_json(), {}};
    report.checks.push_back(totality.check("comparison is connex with mirrored converse"));
    report.checks.push_back(antisymmetry.check("compare(a,b) = equal iff a = b as reduced words"));
    report.checks.push_back(transitivity.check("comparison is transitive"));
    report.checks.push_back(left_inv.check("left multiplication preserves the order"));
    report.checks.push_back(right_inv.check("right multiplication preserves the order"));
    report.checks.push_back(
        translation.check("compare(a,b) = compare(1, a^-1 b) = compare(1, b a^-1)"));
    return report;
}

// ---------------------------------------------------------------------------
// d-hom: multiplicativity of the min-support map and its leading coefficient.
// ---------------------------------------------------------------------------
inline SuiteReport run_d_hom_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    Tally multiplicative, leading_coeff;

    for (unsigned i = 0; i < cfg.samples; ++i) {
        Series a = random_series(rng, 5, 4, 3);
        Series b = random_series(rng, 5, 4, 3);
        auto [u, au] = a.leading();
        auto [v, bv] = b.leading();
        Series product = mul(a, b, cfg.twist);
        auto [w, cw] = product.leading();
        multiplicative.count(w == u * v);
        RationalFunction expected = au * cfg.twist(u)(bv);
        leading_coeff.count(cw == expected && !expected.is_zero());
    }

    SuiteReport report{"d-hom", cfg.to_json(), {}};
    report.checks.push_back(multiplicative.check("min-support map is multiplicative: d(ab) = d(a)d(b)"));
    report.checks.push_back(
        leading_coeff.check("leading coefficient of a product is a_u*Phi_u(b_v), nonzero"));
    return report;
}

// ---------------------------------------------------------------------------
// ring: associativity and distributivity of the twisted multiplication.
// ---------------------------------------------------------------------------
inline SuiteReport run_ring_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    Tally assoc, left_dist, right_dist, unit;

    for (unsigned i = 0; i < cfg.samples; ++i) {
        Series a = random_series(rng, 3, 3, 3);
        Series b = random_series(rng, 3, 3, 3);
        Series c = random_series(rng, 3, 3, 3);
        assoc.count(mul(mul(a, b, cfg.twist), c, cfg.twist) ==
                    mul(a, mul(b, c, cfg.twist), cfg.twist));
        left_dist.count(mul(a, b + c, cfg.twist) == mul(a, b, cfg.twist) + mul(a, c, cfg.twist));
        right_dist.count(mul(a + b, c, cfg.twist) == mul(a, c, cfg.twist) + mul(b, c, cfg.twist));
        unit.count(mul(a, Series::one(), cfg.twist) == a && mul(Series::one(), a, cfg.twist) == a);
    }

    SuiteReport report{"ring", cfg.to_json(), {}};
    report.checks.push_back(assoc.check("twisted multiplication is associative"));
    report.checks.push_back(left_dist.check("multiplication distributes over addition on the left"));
    report.checks.push_back(right_dist.check("multiplication distributes over addition on the right"));
    report.checks.push_back(unit.check("1 is a two-sided unit"));
    return report;
}

// ---------------------------------------------------------------------------
// inverse: residual laws of the n-term truncated inverse.
// ---------------------------------------------------------------------------
inline SuiteReport run_inverse_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    unsigned alphas = std::max(1u, cfg.samples / 5);
    Tally normalized_bound, right_bound, left_bound, monotone, type_invariant, generic_exact;

    for (unsigned i = 0; i < alphas; ++i) {
        // Leg 1: normalized units (d = 1), where u*d(eps)^{n+1}*u^-1 reduces
        // to d(eps)^{n+1} and bounds both residuals.  Leg 2: general leading
        // word, where each side has its own conjugated bound.
        Series unit = random_normalized_unit(rng, cfg.twist, 3, 3, 3);
        Series general = random_series_with_support_at_least(rng, 2, 3, 3, 3);

        for (const Series* alpha : {&unit, &general}) {
            auto [u, au] = alpha->leading();
            ReducedWord u_inv = u.inverse();
            Series m_inv = Series::monomial(u_inv, cfg.twist(u_inv)(au.inverse()));
            Series eps = mul(m_inv, *alpha, cfg.twist) - Series::one();
            ReducedWord e = eps.d();

            ReducedWord prev_bound;
            for (unsigned n = 0; n <= 5; ++n) {
                ApproxSeries inv = truncated_inverse(*alpha, n, cfg.twist);
                ReducedWord right_limit = u * e.pow(n + 1) * u_inv;
                ReducedWord left_limit = e.pow(n + 1);
                Series right = mul(*alpha, inv.terms(), cfg.twist) - Series::one();
                Series left = mul(inv.terms(), *alpha, cfg.twist) - Series::one();
                right_bound.count(compare(right.d(), right_limit) != Ordering::less);
                left_bound.count(compare(left.d(), left_limit) != Ordering::less);
                // The bound is attained except when the boundary coefficient
                // cancels; tallied to show the laws are not vacuous.
                generic_exact.count(right.d() == right_limit && left.d() == left_limit);
                if (alpha == &unit)
                    normalized_bound.count(compare(right.d(), right_limit) != Ordering::less &&
                                           compare(left.d(), right_limit) != Ordering::less);
                // Certified accuracy strictly improves with n.  The sampled
                // alpha is never a monomial, so the inverse is never exact.
                if (!inv.guarantee().has_value()) {
                    monotone.count(false);
                    continue;
                }
                if (n > 0) monotone.count(word_less(prev_bound, *inv.guarantee()));
                prev_bound = *inv.guarantee();
                // Stored terms sit strictly below the stored guarantee.
                bool below = true;
                for (const auto& [w, cf] : inv.terms().terms())
                    below &= word_less(w, *inv.guarantee());
                type_invariant.count(below);
            }
        }
    }

    SuiteReport report{"inverse", cfg.to_json(), {}};
    report.checks.push_back(normalized_bound.check(
        "both residuals of normalized units have min support >= u*d(eps)^(n+1)*u^-1"));
    report.checks.push_back(right_bound.check(
        "alpha*inv - 1 has min support >= u*d(eps)^(n+1)*u^-1"));
    report.checks.push_back(left_bound.check(
        "inv*alpha - 1 has min support >= d(eps)^(n+1)"));
    report.checks.push_back(monotone.check("the guarantee strictly increases with n"));
    report.checks.push_back(type_invariant.check("all stored terms lie below the guarantee"));
    {
        Check c{"the bounds are attained on a majority of samples (not vacuous)",
                generic_exact.total > 0 && 2 * generic_exact.passed > generic_exact.total,
                Json(generic_exact.ratio())};
        report.checks.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------------------
// lemma4: rewrite identities for the H_n chain generators.
// ---------------------------------------------------------------------------
inline SuiteReport run_lemma4_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    Tally conj_rewrite, power_rewrite, chain_step;

    for (unsigned i = 0; i < cfg.samples; ++i) {
        // Conjugation rewrite needs ac = ca; realize the hypothesis with
        // powers of a shared word.
        ReducedWord w = random_nonidentity_word(rng, 4, 3);
        ReducedWord a = w.pow(rng.range(-3, 3));
        ReducedWord c = w.pow(rng.range(-3, 3));
        ReducedWord b = random_word(rng, 4, 3);
        ReducedWord lhs = c * (b * a * b.inverse()) * c.inverse();
        ReducedWord cbc = c * b * c.inverse();
        conj_rewrite.count(lhs == cbc * a * cbc.inverse());

        // Power rewrite is unconditional.
        ReducedWord b2 = random_word(rng, 4, 3);
        ReducedWord c2 = random_word(rng, 4, 3);
        std::int64_t f = static_cast<std::int64_t>(factorial(2 + rng.below(2)));
        ReducedWord cb2c = c2 * b2 * c2.inverse();
        power_rewrite.count(cb2c.pow(f) == c2 * b2.pow(f) * c2.inverse());

        // One chain step agrees with elementwise rewriting.
        std::vector<ReducedWord> prev{b, b2};
        auto next = h_chain_step(NormalLevel{}, a, prev);
        chain_step.count(next.size() == 2 && next[0] == b * a * b.inverse() &&
                         next[1] == b2 * a * b2.inverse());
    }

    SuiteReport report{"lemma4", cfg.to_json(), {}};
    report.checks.push_back(conj_rewrite.check(
        "c(bab^-1)c^-1 = (cbc^-1)a(cbc^-1)^-1 whenever ac = ca"));
    report.checks.push_back(power_rewrite.check("(cbc^-1)^(l!) = c b^(l!) c^-1"));
    report.checks.push_back(chain_step.check("chain step maps each b to its rewritten generator"));
    return report;
}

// ---------------------------------------------------------------------------
// lemma5: conjugation normal form, symbolic (exhaustive) and at truncation.
// ---------------------------------------------------------------------------
inline std::vector<ChainDescriptor> all_descriptors(unsigned max_depth) {
    std::vector<ChainLevel> alphabet{NormalLevel{}, FiniteIndexLevel{2}, FiniteIndexLevel{3}};
    std::vector<ChainDescriptor> out;
    std::vector<ChainLevel> current;
    auto rec = [&](auto&& self, unsigned remaining) -> void {
        if (!current.empty()) out.push_back(ChainDescriptor(current));
        if (remaining == 0) return;
        for (const auto& l : alphabet) {
            current.push_back(l);
            self(self, remaining - 1);
            current.pop_back();
        }
    };
    rec(rec, max_depth);
    return out;
}

inline SuiteReport run_lemma5_suite(const RunConfig& cfg, unsigned max_n = 4) {
    Tally symbolic, mirror, alpha_form;
    for (const auto& desc : all_descriptors(4)) {
        for (unsigned n = 0; n <= max_n; ++n) {
            SymbolicCheck sc = verify_lemma5_symbolic(n, desc);
            symbolic.count(sc.u_side);
            mirror.count(sc.v_side);
            alpha_form.count(verify_alpha_conjugation(n, desc));
        }
    }

    // Negative control: the bare-conjugate recursion (dropping the trailing
    // g^-1) must fail both symbolically and numerically.
    WordExpr bad_phi = WordExpr::var("h") * WordExpr::var("g") * WordExpr::var("h").inverse();
    ChainDescriptor normal_step(std::vector<ChainLevel>{NormalLevel{}});
    bool mutated_symbolic_fails =
        !verify_conjugation_symbolic_with(1, normal_step, bad_phi).u_side;
    ResidualReport mutated_numeric = verify_conjugation_numeric_with(
        1, normal_step, bad_phi, ReducedWord::generator(1), ReducedWord::generator(3), cfg.depth,
        cfg.twist);
    bool mutated_numeric_fails = !mutated_numeric.ok && mutated_numeric.offending.has_value();

    // Numeric verification on seeded (h, g) pairs across descriptor shapes.
    Rng rng(cfg.seed);
    std::vector<ChainDescriptor> numeric_descs{
        parse_descriptor("N"), parse_descriptor("F2"), parse_descriptor("N,N"),
        parse_descriptor("F2,N"), parse_descriptor("N,F2")};
    Tally numeric;
    Json numeric_details = Json::array();
    for (unsigned i = 0; i < 20; ++i) {
        const ChainDescriptor& desc = numeric_descs[i % numeric_descs.size()];
        ReducedWord h = random_nonidentity_word(rng, 2, 3);
        ReducedWord g = random_nonidentity_word(rng, 2, 3);
        ResidualReport r =
            verify_lemma5_numeric(static_cast<unsigned>(desc.depth()), desc, h, g, cfg.depth,
                                  cfg.twist);
        numeric.count(r.ok);
        if (!r.ok)
            numeric_details.push_back({{"desc", desc.to_string()},
                                       {"h", h.to_string()},
                                       {"g", g.to_string()},
                                       {"offending", r.offending->to_string()}});
    }

    SuiteReport report{"lemma5", cfg.to_json(), {}};
    report.checks.push_back(symbolic.check(
        "u_n normal form equals (1+g) phi_n (1+g)^-1, exhaustive n <= " + std::to_string(max_n)));
    report.checks.push_back(mirror.check("v_n normal form equals (1+g)^-1 phi_n (1+g)"));
    report.checks.push_back(alpha_form.check(
        "[phi_n, u_n] equals (1+g)[v_n, phi_n](1+g)^-1 in the rewriting group"));
    report.checks.push_back({"mutated phi_1 = h g h^-1 fails the symbolic check",
                             mutated_symbolic_fails, Json()});
    report.checks.push_back({"mutated phi_1 fails numerically with a sub-guarantee term",
                             mutated_numeric_fails,
                             mutated_numeric.offending
                                 ? Json(mutated_numeric.offending->to_string())
                                 : Json()});
    {
        Check c = numeric.check("(1+g) phi_n - u_n (1+g) vanishes below the guarantee");
        if (!numeric_details.empty()) c.detail = numeric_details;
        report.checks.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------------------
// identities: evaluation of the explicit group identities, functoriality,
// and the membership cascade.
// ---------------------------------------------------------------------------
inline SuiteReport run_identities_suite(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    SuiteReport report{"identities", cfg.to_json(), {}};

    // The 8-letter identity holds whenever the substituted values commute.
    WordExpr ident = dihedral_identity_word();
    ReducedWord base = random_nonidentity_word(rng, 3, 3);
    WordOps word_ops;
    auto commuting_sampler = [&](unsigned) {
        return std::map<std::string, ReducedWord>{{"a", base.pow(rng.range(-3, 3))},
                                                  {"x", base.pow(rng.range(-3, 3))}};
    };
    auto holds = check_identity(
        ident, commuting_sampler, std::max(1u, cfg.samples / 10), word_ops,
        [](const ReducedWord& w) { return w.is_identity(); });
    report.checks.push_back(
        {"x a x^-1 a x a^-1 x^-1 a^-1 = 1 on commuting samples", holds.holds, Json()});

    // ... and fails in the free group.
    std::map<std::string, ReducedWord> free_env{{"a", ReducedWord::generator(1)},
                                                {"x", ReducedWord::generator(2)}};
    ReducedWord free_value = ident.eval(free_env, word_ops);
    report.checks.push_back({"the same word is nontrivial on free samples",
                             !free_value.is_identity(), Json(free_value.to_string())});

    // x^6 y^6 x^-6 y^-6 over all of S_3 x S_3.
    WordExpr sixth = sixth_power_commutator_word();
    PermOps perm_ops;
    bool sixth_all = true;
    for (const auto& p : Perm3::all())
        for (const auto& q : Perm3::all()) {
            std::map<std::string, Perm3> env{{"x", p}, {"y", q}};
            sixth_all &= sixth.eval(env, perm_ops).is_identity();
        }
    report.checks.push_back(
        {"x^6 y^6 x^-6 y^-6 = 1 exhaustively over S3 x S3 (36 pairs)", sixth_all, Json("36/36")});

    // Functoriality: evaluation commutes with phi on words and with d on
    // series (leading words survive every truncation).
    S3Hom phi = S3Hom::avoiding(cfg.x);
    Tally phi_functorial, d_functorial;
    unsigned func_trials = std::max(1u, cfg.samples / 10);
    for (unsigned i = 0; i < func_trials; ++i) {
        WordExpr e = WordExpr::commutator(WordExpr::var("p"), WordExpr::var("q")) *
                     WordExpr::var("p").pow(rng.range(-2, 2));
        ReducedWord pw = random_word(rng, 3, 5);
        ReducedWord qw = random_word(rng, 3, 5);
        std::map<std::string, ReducedWord> wenv{{"p", pw}, {"q", qw}};
        std::map<std::string, Perm3> penv{{"p", phi(pw)}, {"q", phi(qw)}};
        phi_functorial.count(phi(e.eval(wenv, word_ops)) == e.eval(penv, PermOps{}));

        ApproxOps aops{cfg.twist, cfg.depth};
        Series sa = random_series(rng, 2, 2, 3);
        Series sb = random_series(rng, 2, 2, 3);
        std::map<std::string, ApproxSeries> senv{{"p", ApproxSeries::exact(sa)},
                                                 {"q", ApproxSeries::exact(sb)}};
        std::map<std::string, ReducedWord> denv{{"p", sa.d()}, {"q", sb.d()}};
        d_functorial.count(e.eval(senv, aops).d() == e.eval(denv, word_ops));
    }
    report.checks.push_back(phi_functorial.check("phi(eval in G) = eval of phi-images in S3"));
    report.checks.push_back(d_functorial.check("d(eval over series) = eval of d-images in G"));

    // Membership cascade for the index-3 chain: w_n(alpha, beta) lands in N
    // for every unit alpha and beta in N, all n >= 1.
    Tally cascade_series, cascade_words;
    WordExpr w1 = build_w(1, cfg.descriptor);
    WordExpr w2 = build_w(2, cfg.descriptor);
    unsigned series_trials = std::min(func_trials, 25u);
    for (unsigned i = 0; i < series_trials; ++i) {
        Series alpha = random_series(rng, 2, 2, 5);
        Series beta = Series::word(random_word_in_h(rng, phi, 4, 5));
        Series widened = beta + Series::monomial(random_word(rng, 4, 5), random_field_element(rng));
        if (!widened.is_zero() && in_N(phi, widened)) beta = widened;
        ApproxOps aops{cfg.twist, cfg.depth};
        std::map<std::string, ApproxSeries> env{{"x", ApproxSeries::exact(alpha)},
                                                {"y", ApproxSeries::exact(beta)}};
        bool ok = in_N(phi, w1.eval(env, aops)) && in_N(phi, w2.eval(env, aops));
        cascade_series.count(ok);
    }
    for (unsigned i = 0; i < cfg.samples; ++i) {
        ReducedWord a = random_word(rng, 5, 5);
        ReducedWord b = random_word_in_h(rng, phi, 5, 5);
        std::map<std::string, ReducedWord> env{{"x", a}, {"y", b}};
        bool ok = true;
        for (unsigned n = 1; n <= 4; ++n) {
            WordExpr w = build_w(n, cfg.descriptor);
            ok &= in_H(phi, w.eval(env, word_ops));
        }
        cascade_words.count(ok);
    }
    report.checks.push_back(cascade_series.check(
        "w_n(alpha, beta) lies in N for units alpha and beta in N (series level)"));
    report.checks.push_back(cascade_words.check(
        "phi(w_n(a, b)) lies in H for b in H, n >= 1 (word level via d)"));
    return report;
}

// ---------------------------------------------------------------------------
// demo: the r = 1 construction end to end.
// ---------------------------------------------------------------------------
inline SuiteReport run_demo(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    S3Hom phi = S3Hom::avoiding(cfg.x);

    SuiteReport report{"demo", cfg.to_json(), {}};
    Json hom;
    hom["lambda"] = phi.lambda();
    hom["mu"] = phi.mu();
    hom["x"] = cfg.x.to_string();
    hom["phi_x"] = phi(cfg.x).to_string();
    report.config["hom"] = hom;

    report.checks.push_back(
        {"phi(x) = id, so x lies in H", phi(cfg.x).is_identity(), Json(phi(cfg.x).to_string())});

    Tally d_hom, poincare, label_invariance;
    std::map<std::string, unsigned> labels_seen;
    for (unsigned i = 0; i < cfg.samples; ++i) {
        Series a = random_series(rng, 3, 4, 5);
        Series b = random_series(rng, 3, 4, 5);
        Series product = mul(a, b, cfg.twist);
        d_hom.count(product.d() == a.d() * b.d());
        poincare.count(poincare_check(phi, a));
        labels_seen[to_string(coset_label(phi, a))]++;
        // Left multiplication by an element of N preserves the label.
        Series nu = Series::word(random_word_in_h(rng, phi, 4, 5));
        label_invariance.count(coset_label(phi, mul(nu, a, cfg.twist)) == coset_label(phi, a));
    }

    report.checks.push_back(d_hom.check("d is multiplicative on sampled unit pairs"));
    {
        Check c{"exactly 3 right-coset labels are realized", labels_seen.size() == 3, Json()};
        Json counts;
        for (const auto& [label, count] : labels_seen) counts[label] = count;
        c.detail = counts;
        if (cfg.samples == 0) c.passed = false;
        report.checks.push_back(std::move(c));
    }
    report.checks.push_back(
        label_invariance.check("coset label is invariant under left multiplication by N"));
    report.checks.push_back(poincare.check("alpha^6 lies in N for every sampled unit"));

    // Non-normality witness: beta in N, alpha beta alpha^-1 not in N.
    Series alpha = Series::word(ReducedWord::generator(phi.mu()));
    Series beta = Series::word(ReducedWord::generator(phi.lambda()));
    Series conj = mul(mul(alpha, beta, cfg.twist),
                      Series::word(ReducedWord::generator(phi.mu(), -1)), cfg.twist);
    Perm3 pa = phi(alpha.d());
    Perm3 pb = phi(beta.d());
    Perm3 pc = phi(conj.d());
    bool witness_ok = in_N(phi, beta) && !in_N(phi, conj) && pa == Perm3::cycle(1, 2, 3) &&
                      pb == Perm3::transposition(1, 2) && pc == Perm3::transposition(2, 3);
    Json witness;
    witness["alpha"] = alpha.to_string();
    witness["beta"] = beta.to_string();
    witness["alpha*beta*alpha^-1"] = conj.to_string();
    witness["phi_images"] = Json::array({pa.to_string(), pb.to_string(), pc.to_string()});
    report.checks.push_back(
        {"non-normality witness: beta in N but alpha beta alpha^-1 not in N", witness_ok, witness});

    // The index-3 step is genuinely non-normal yet almost normal: the core
    // of H in S3 is trivial, while H itself has index 3.
    PermSet h{Perm3::identity(), Perm3::transposition(1, 2)};
    PermSet core = core_in_s3(h);
    report.checks.push_back({"core of H in S3 is trivial",
                             core == PermSet{Perm3::identity()},
                             Json(static_cast<unsigned>(core.size()))});
    return report;
}

inline std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "order") return {run_order_suite(cfg)};
    if (name == "ring") return {run_ring_suite(cfg)};
    if (name == "d-hom") return {run_d_hom_suite(cfg)};
    if (name == "inverse") return {run_inverse_suite(cfg)};
    if (name == "lemma4") return {run_lemma4_suite(cfg)};
    if (name == "lemma5") return {run_lemma5_suite(cfg)};
    if (name == "identities") return {run_identities_suite(cfg)};
    if (name == "demo") return {run_demo(cfg)};
    if (name == "all")
        return {run_order_suite(cfg),   run_d_hom_suite(cfg),  run_ring_suite(cfg),
                run_inverse_suite(cfg), run_lemma4_suite(cfg), run_lemma5_suite(cfg),
                run_identities_suite(cfg), run_demo(cfg)};
    throw Error("unknown suite '" + name + "'");
}

}  // namespace malcev
