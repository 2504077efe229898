#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace malcev {

using Rational = boost::multiprecision::cpp_rational;

// Dense polynomial in one variable s over the rationals.  Coefficient i is
// the coefficient of s^i; the vector never has a trailing zero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable() {
        Polynomial p;
        p.c_ = {0, 1};
        return p;
    }

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] = a.coefficient(i) + b.coefficient(i);
        out.trim();
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out.c_[i + j] += a.c_[i] * b.c_[j];
        out.trim();
        return out;
    }

    // Euclidean division: returns (quotient, remainder), deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        assert(!b.is_zero());
        Polynomial q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Rational factor = r.leading_coefficient() / b.leading_coefficient();
            if (q.c_.size() < shift + 1) q.c_.resize(shift + 1, Rational(0));
            q.c_[shift] += factor;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[i + shift] -= factor * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial out = *this;
        Rational lead = out.c_.back();
        for (auto& x : out.c_) x /= lead;
        return out;
    }

    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r).monic();  // keep coefficients small
        }
        return a.monic();
    }

    // p(s + c): substitution by Horner, exact.
    Polynomial shifted(std::int64_t c) const {
        Polynomial out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            // out = out * (s + c) + *it
            out.c_.insert(out.c_.begin(), Rational(0));
            for (std::size_t i = 0; i + 1 < out.c_.size(); ++i)
                out.c_[i] += Rational(c) * out.c_[i + 1];
            if (out.c_.empty())
                out.c_.push_back(*it);
            else
                out.c_[0] += *it;
            out.trim();
        }
        return out;
    }

    Rational operator()(const Rational& point) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            Rational c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            bool first = out.empty();
            bool neg = c < 0;
            if (!first) out += neg ? " - " : " + ";
            else if (neg) out += '-';
            Rational mag = neg ? Rational(-c) : c;
            if (i == 0) {
                out += rational_to_string(mag);
            } else {
                if (mag != 1) {
                    out += rational_to_string(mag);
                    out += '*';
                }
                out += 's';
                if (i != 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

    static std::string rational_to_string(const Rational& q) {
        std::string out = numerator(q).str();
        if (denominator(q) != 1) {
            out += '/';
            out += denominator(q).str();
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Element of the field Q(s): numerator/denominator in lowest terms, monic
// denominator, zero represented as 0/1.  This canonical form makes equality
// structural.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(std::int64_t constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroInversion();
        normalize();
    }

    static RationalFunction variable() { return {Polynomial::variable(), Polynomial(1)}; }
    static RationalFunction from_polynomial(Polynomial p) { return {std::move(p), Polynomial(1)}; }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Polynomial(1) && den_ == Polynomial(1); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction inverse() const {
        if (is_zero()) throw ZeroInversion();
        return {den_, num_};
    }

    // Evaluation at a rational point; nullopt at a pole.
    std::optional<Rational> operator()(const Rational& point) const {
        Rational d = den_(point);
        if (d == 0) return std::nullopt;
        return num_(point) / d;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const {
        if (den_ == Polynomial(1)) return num_.to_string();
        return '(' + num_.to_string() + ")/(" + den_.to_string() + ')';
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.leading_coefficient();
        if (lead != 1) {
            Polynomial inv_lead(Rational(1) / lead);
            num_ = num_ * inv_lead;
            den_ = den_ * inv_lead;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace malcev
