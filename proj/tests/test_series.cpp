#include <catch2/catch_amalgamated.hpp>

#include "malcev/errors.hpp"
#include "malcev/sampling.hpp"
#include "malcev/series.hpp"

using namespace malcev;

namespace {

ReducedWord X(std::uint32_t i, std::int64_t e = 1) { return ReducedWord::generator(i, e); }
const TwistMap kTwist({{1, 1}, {2, -2}});

RationalFunction S() { return RationalFunction(Polynomial::variable(), Polynomial(1)); }

}  // namespace

TEST_CASE("twisted square of s*x1 picks up the shifted coefficient") {
    // (s x1)(s x1) = s * Phi_{x1}(s) * x1^2 = s(s+1) x1^2 under weight 1 on x1.
    Series a = Series::monomial(X(1), S());
    Series p = mul(a, a, kTwist);
    Polynomial expected_num = Polynomial::variable() * (Polynomial::variable() + Polynomial(1));
    REQUIRE(p.support() == std::vector<ReducedWord>{X(1, 2)});
    REQUIRE(p.coefficient(X(1, 2)) == RationalFunction(expected_num, Polynomial(1)));
}

TEST_CASE("twist is applied through the left factor's word") {
    // x2 * s = Phi_{x2}(s) x2 = (s - 2) x2 under weight -2 on x2.
    Series left = Series::word(X(2));
    Series right = Series::monomial(ReducedWord::identity(), S());
    Series p = mul(left, right, kTwist);
    Polynomial s_minus_2 = Polynomial::variable() - Polynomial(2);
    REQUIRE(p.coefficient(X(2)) == RationalFunction(s_minus_2, Polynomial(1)));
    // With the trivial twist the coefficient is untouched.
    Series q = mul(left, right, TwistMap::trivial());
    REQUIRE(q.coefficient(X(2)) == S());
}

TEST_CASE("leading term of a product multiplies the least support words") {
    Series a = Series::word(X(1)) + Series::word(X(2));
    Series p = mul(a, Series::word(X(1)), kTwist);
    auto [w, c] = p.leading();
    REQUIRE(w == X(2) * X(1));
    REQUIRE(c == RationalFunction(1));
    REQUIRE(p.d() == X(2) * X(1));
}

TEST_CASE("least support of a sum is the Magnus-least word") {
    Series s = Series::word(X(1)) + Series::word(X(2));
    REQUIRE(s.d() == X(2));
    REQUIRE((Series::word(X(1)) + Series::word(X(1, -1))).d() == X(1, -1));
    REQUIRE_THROWS_AS(Series::zero().d(), ZeroHasNoSupport);
}

TEST_CASE("addition is cancellative and ordered printing is stable") {
    Series s = Series::word(X(1)) - Series::word(X(1));
    REQUIRE(s.is_zero());
    REQUIRE(Series::zero().to_string() == "(0)*[1]");
    Series t = Series::word(X(1)) + Series::word(X(2)) + Series::one();
    REQUIRE(t.to_string() == "(1)*[1] + (1)*[x2] + (1)*[x1]");
    REQUIRE(t.support_by_order() ==
            std::vector<ReducedWord>{ReducedWord::identity(), X(2), X(1)});
}

TEST_CASE("ring axioms on random series") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Series a = random_series(rng, 3, 3, 3);
        Series b = random_series(rng, 3, 3, 3);
        Series c = random_series(rng, 3, 3, 3);
        REQUIRE(mul(mul(a, b, kTwist), c, kTwist) == mul(a, mul(b, c, kTwist), kTwist));
        REQUIRE(mul(a + b, c, kTwist) == mul(a, c, kTwist) + mul(b, c, kTwist));
        REQUIRE(mul(a, b + c, kTwist) == mul(a, b, kTwist) + mul(a, c, kTwist));
        REQUIRE(mul(a, Series::one(), kTwist) == a);
        REQUIRE(mul(Series::one(), a, kTwist) == a);
        REQUIRE(a - a == Series::zero());
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("d is multiplicative with the predicted leading coefficient") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Series a = random_series(rng, 4, 3, 3);
        Series b = random_series(rng, 4, 3, 3);
        Series p = mul(a, b, kTwist);
        auto [u, au] = a.leading();
        auto [v, bv] = b.leading();
        REQUIRE(p.d() == u * v);
        REQUIRE(p.coefficient(u * v) == au * kTwist(u)(bv));
    }
}

TEST_CASE("mul_below agrees with filtering the full product") {
    Rng rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        Series a = random_series(rng, 3, 3, 3);
        Series b = random_series(rng, 3, 3, 3);
        ReducedWord bound = random_nonidentity_word(rng, 3, 3);
        Series full = mul(a, b, kTwist);
        Series expected;
        for (const auto& [w, c] : full.terms())
            if (word_less(w, bound)) expected.add_term(w, c);
        REQUIRE(mul_below(a, b, kTwist, bound) == expected);
    }
}

TEST_CASE("powers multiply out") {
    Rng rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        Series a = random_series(rng, 2, 2, 3);
        REQUIRE(pow(a, 0, kTwist) == Series::one());
        REQUIRE(pow(a, 1, kTwist) == a);
        REQUIRE(pow(a, 3, kTwist) == mul(mul(a, a, kTwist), a, kTwist));
    }
}

TEST_CASE("scaling distributes over the coefficient field") {
    Series a = Series::word(X(1)) + Series::monomial(X(2), RationalFunction(3));
    Series b = a.scaled(RationalFunction(Rational(1, 2)));
    REQUIRE(b.coefficient(X(1)) == RationalFunction(Rational(1, 2)));
    REQUIRE(b.coefficient(X(2)) == RationalFunction(Rational(3, 2)));
    REQUIRE(a.scaled(RationalFunction(0)).is_zero());
}

TEST_CASE("in-place sums tolerate aliased arguments") {
    Rng rng(18);
    for (int trial = 0; trial < 50; ++trial) {
        Series s = random_series(rng, 4, 3, 3);
        Series twice = s;
        twice += twice;
        REQUIRE(twice == s + s);
        REQUIRE(twice == s.scaled(RationalFunction(2)));
        Series gone = s;
        gone -= gone;
        REQUIRE(gone.is_zero());
    }
}
