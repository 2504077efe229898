#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace malcev {

// A truncated series with an order-of-error guarantee.  Contract: the exact
// value it approximates equals terms() + tail, where every word in the
// support of tail is >= guarantee() in the group order; consequently every
// stored term is < guarantee().  guarantee() == nullopt means exact (tail
// zero).  All arithmetic below propagates guarantees soundly: sub-guarantee
// coefficients of results are exact.
class ApproxSeries {
public:
    ApproxSeries() = default;  // exact zero

    static ApproxSeries exact(Series s) {
        ApproxSeries out;
        out.terms_ = std::move(s);
        return out;
    }

    ApproxSeries(const Series& s, const ReducedWord& guarantee,
                 unsigned degree_cap = default_degree_cap)
        : guarantee_(guarantee) {
        for (const auto& [g, c] : s.terms())
            if (word_less(g, guarantee, degree_cap)) terms_.add_term(g, c);
    }

    const Series& terms() const { return terms_; }
    bool is_exact() const { return !guarantee_.has_value(); }
    const std::optional<ReducedWord>& guarantee() const { return guarantee_; }

    // True when nothing is known to differ from zero: exact zero, or all
    // information truncated away.
    bool indistinguishable_from_zero() const { return terms_.is_zero(); }

    const ReducedWord& d(unsigned degree_cap = default_degree_cap) const {
        if (terms_.is_zero()) {
            if (is_exact()) throw ZeroHasNoSupport();
            throw GuaranteeTooCoarse("no terms below the guarantee; leading word unknown");
        }
        return terms_.d(degree_cap);
    }

    std::pair<ReducedWord, RationalFunction> leading(unsigned degree_cap = default_degree_cap) const {
        const ReducedWord& u = d(degree_cap);
        return {u, terms_.coefficient(u)};
    }

    friend bool operator==(const ApproxSeries&, const ApproxSeries&) = default;

private:
    Series terms_;
    std::optional<ReducedWord> guarantee_;
};

namespace detail {

inline std::optional<ReducedWord> min_word(const std::vector<ReducedWord>& candidates,
                                           unsigned degree_cap) {
    if (candidates.empty()) return std::nullopt;
    return *min_of_support_iter(candidates.begin(), candidates.end(), degree_cap);
}

}  // namespace detail

inline ApproxSeries approx_add(const ApproxSeries& a, const ApproxSeries& b,
                               unsigned degree_cap = default_degree_cap) {
    std::vector<ReducedWord> gs;
    if (a.guarantee()) gs.push_back(*a.guarantee());
    if (b.guarantee()) gs.push_back(*b.guarantee());
    auto g = detail::min_word(gs, degree_cap);
    Series sum = a.terms() + b.terms();
    if (!g) return ApproxSeries::exact(std::move(sum));
    return ApproxSeries(sum, *g, degree_cap);
}

inline ApproxSeries approx_neg(const ApproxSeries& a) {
    if (a.is_exact()) return ApproxSeries::exact(-a.terms());
    // Stored terms are already < guarantee; no re-truncation needed.
    return ApproxSeries(-a.terms(), *a.guarantee());
}

inline ApproxSeries approx_sub(const ApproxSeries& a, const ApproxSeries& b,
                               unsigned degree_cap = default_degree_cap) {
    return approx_add(a, approx_neg(b), degree_cap);
}

// Product guarantee: the unknown part is A_tail*B + A*B_tail + tails, whose
// support is >= min{g_a * d(B), d(A) * g_b, g_a * g_b} by bi-invariance of
// the order; candidates exist only for the parts that can be nonzero.
inline ApproxSeries approx_mul(const ApproxSeries& a, const ApproxSeries& b, const TwistMap& twist,
                               unsigned degree_cap = default_degree_cap) {
    std::vector<ReducedWord> gs;
    if (a.guarantee() && !b.terms().is_zero()) gs.push_back(*a.guarantee() * b.terms().d(degree_cap));
    if (b.guarantee() && !a.terms().is_zero()) gs.push_back(a.terms().d(degree_cap) * *b.guarantee());
    if (a.guarantee() && b.guarantee()) gs.push_back(*a.guarantee() * *b.guarantee());
    auto g = detail::min_word(gs, degree_cap);
    if (!g) return ApproxSeries::exact(mul(a.terms(), b.terms(), twist));
    return ApproxSeries(mul_below(a.terms(), b.terms(), twist, *g, degree_cap), *g, degree_cap);
}

// n-term geometric inverse.  Write alpha = m(1 + eps) with m = a_u u the
// leading monomial and d(eps) > 1; then
//     terms = (sum_{k<=n} (-eps)^k) m^-1,       m^-1 = Phi_{u^-1}(a_u^-1) u^-1,
// and the discarded tail sum_{k>n} (-eps)^k m^-1 has min support exactly
//     guarantee = d(eps)^{n+1} u^-1.
// Residual laws (exact, used by the test suites):
//     alpha*terms - 1 = -m(-eps)^{n+1}m^-1   min support u * d(eps)^{n+1} * u^-1
//     terms*alpha - 1 = -(-eps)^{n+1}        min support d(eps)^{n+1}
inline ApproxSeries truncated_inverse(const Series& alpha, unsigned n, const TwistMap& twist,
                                      unsigned degree_cap = default_degree_cap) {
    if (alpha.is_zero()) throw ZeroInversion();
    auto [u, a_u] = alpha.leading(degree_cap);
    ReducedWord u_inv = u.inverse();
    Series m_inv = Series::monomial(u_inv, twist(u_inv)(a_u.inverse()));
    Series eps = mul(m_inv, alpha, twist) - Series::one();
    if (eps.is_zero()) return ApproxSeries::exact(std::move(m_inv));

    ReducedWord e = eps.d(degree_cap);
    ReducedWord bound = e.pow(static_cast<std::int64_t>(n) + 1);  // = guarantee * u
    ReducedWord guarantee = bound * u_inv;

    Series neg_eps = -eps;
    Series acc = Series::one();
    Series pk = Series::one();
    for (unsigned k = 1; k <= n; ++k) {
        pk = mul_below(pk, neg_eps, twist, bound, degree_cap);
        if (pk.is_zero()) break;
        acc += pk;
    }
    return ApproxSeries(mul(acc, m_inv, twist), guarantee, degree_cap);
}

// Inverse of an approximation X = T + tail: invert T, then account for the
// unknown tail, whose first-order effect -T^-1 tail T^-1 has support
// >= d(T)^-1 * g_X * d(T)^-1.
inline ApproxSeries truncated_inverse(const ApproxSeries& x, unsigned n, const TwistMap& twist,
                                      unsigned degree_cap = default_degree_cap) {
    if (x.is_exact()) {
        if (x.terms().is_zero()) throw ZeroInversion();
        return truncated_inverse(x.terms(), n, twist, degree_cap);
    }
    if (x.terms().is_zero())
        throw GuaranteeTooCoarse("cannot invert: no terms below the guarantee");
    ApproxSeries base = truncated_inverse(x.terms(), n, twist, degree_cap);
    ReducedWord u_inv = x.terms().d(degree_cap).inverse();
    ReducedWord g_tail = u_inv * *x.guarantee() * u_inv;
    std::vector<ReducedWord> gs{g_tail};
    if (base.guarantee()) gs.push_back(*base.guarantee());
    ReducedWord g = *detail::min_word(gs, degree_cap);
    return ApproxSeries(base.terms(), g, degree_cap);
}

}  // namespace malcev
