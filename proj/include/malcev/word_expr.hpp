#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "approx_series.hpp"
#include "errors.hpp"
#include "free_group.hpp"
#include "permutation.hpp"
#include "trace_word.hpp"

namespace malcev {

// Abstract group word over named variables (?x) and named constants (g):
// products, inverses, integer powers, and commutators.  Commutator(a, b)
// always denotes a b a^-1 b^-1.  Evaluation is generic over any group-like
// target via an ops adapter.
class WordExpr {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    struct Var { std::string name; };
    struct Const { std::string name; };
    struct Prod { std::vector<Ptr> factors; };
    struct Inverse { Ptr body; };
    struct Power { Ptr body; std::int64_t exponent; };
    struct Commutator { Ptr lhs, rhs; };

    struct Node {
        std::variant<Var, Const, Prod, Inverse, Power, Commutator> v;
    };

public:
    WordExpr() : root_(make(Prod{})) {}  // empty product = 1

    static WordExpr var(std::string name) { return WordExpr(make(Var{std::move(name)})); }
    static WordExpr constant(std::string name) { return WordExpr(make(Const{std::move(name)})); }
    static WordExpr one() { return WordExpr(); }

    static WordExpr product(const std::vector<WordExpr>& factors) {
        Prod p;
        for (const auto& f : factors) p.factors.push_back(f.root_);
        return WordExpr(make(std::move(p)));
    }

    WordExpr operator*(const WordExpr& rhs) const { return product({*this, rhs}); }

    WordExpr inverse() const { return WordExpr(make(Inverse{root_})); }

    WordExpr pow(std::int64_t k) const { return WordExpr(make(Power{root_, k})); }

    static WordExpr commutator(const WordExpr& a, const WordExpr& b) {
        return WordExpr(make(Commutator{a.root_, b.root_}));
    }

    // Evaluate in a target group described by ops with members:
    //   value_type one() / mul(a, b) / inv(a).
    template <typename Ops>
    typename Ops::value_type eval(const std::map<std::string, typename Ops::value_type>& env,
                                  const Ops& ops) const {
        return eval_node(*root_, env, ops);
    }

    std::string to_string() const { return node_to_string(*root_); }

private:
    explicit WordExpr(Ptr p) : root_(std::move(p)) {}

    template <typename V>
    static Ptr make(V v) {
        return std::make_shared<const Node>(Node{std::move(v)});
    }

    template <typename Ops>
    static typename Ops::value_type power(typename Ops::value_type base, std::int64_t k,
                                          const Ops& ops) {
        if (k < 0) {
            base = ops.inv(base);
            k = -k;
        }
        auto acc = ops.one();
        while (k > 0) {
            if (k & 1) acc = ops.mul(acc, base);
            if ((k >>= 1) != 0) base = ops.mul(base, base);
        }
        return acc;
    }

    template <typename Ops>
    static typename Ops::value_type eval_node(const Node& node,
                                              const std::map<std::string, typename Ops::value_type>& env,
                                              const Ops& ops) {
        using T = typename Ops::value_type;
        return std::visit(
            [&](const auto& n) -> T {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Var> || std::is_same_v<N, Const>) {
                    auto it = env.find(n.name);
                    if (it == env.end()) throw Error("UnboundSymbol: " + n.name);
                    return it->second;
                } else if constexpr (std::is_same_v<N, Prod>) {
                    T acc = ops.one();
                    for (const auto& f : n.factors) acc = ops.mul(acc, eval_node(*f, env, ops));
                    return acc;
                } else if constexpr (std::is_same_v<N, Inverse>) {
                    return ops.inv(eval_node(*n.body, env, ops));
                } else if constexpr (std::is_same_v<N, Power>) {
                    return power(eval_node(*n.body, env, ops), n.exponent, ops);
                } else {
                    T a = eval_node(*n.lhs, env, ops);
                    T b = eval_node(*n.rhs, env, ops);
                    return ops.mul(ops.mul(a, b), ops.mul(ops.inv(a), ops.inv(b)));
                }
            },
            node.v);
    }

    static std::string node_to_string(const Node& node) {
        return std::visit(
            [](const auto& n) -> std::string {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Var>) {
                    return "?" + n.name;
                } else if constexpr (std::is_same_v<N, Const>) {
                    return n.name;
                } else if constexpr (std::is_same_v<N, Prod>) {
                    if (n.factors.empty()) return "1";
                    std::string out;
                    for (std::size_t i = 0; i < n.factors.size(); ++i) {
                        if (i) out += '*';
                        out += node_to_string(*n.factors[i]);
                    }
                    return out;
                } else if constexpr (std::is_same_v<N, Inverse>) {
                    return "(" + node_to_string(*n.body) + ")^-1";
                } else if constexpr (std::is_same_v<N, Power>) {
                    return "(" + node_to_string(*n.body) + ")^" + std::to_string(n.exponent);
                } else {
                    return "[" + node_to_string(*n.lhs) + "," + node_to_string(*n.rhs) + "]";
                }
            },
            node.v);
    }

    Ptr root_;
};

// Ops adapters for the groups the artifact evaluates in.

struct WordOps {
    using value_type = ReducedWord;
    ReducedWord one() const { return {}; }
    ReducedWord mul(const ReducedWord& a, const ReducedWord& b) const { return a * b; }
    ReducedWord inv(const ReducedWord& a) const { return a.inverse(); }
};

struct PermOps {
    using value_type = Perm3;
    Perm3 one() const { return {}; }
    Perm3 mul(const Perm3& a, const Perm3& b) const { return a * b; }
    Perm3 inv(const Perm3& a) const { return a.inverse(); }
};

struct TraceOps {
    using value_type = TraceWord;
    TraceWord one() const { return {}; }
    TraceWord mul(const TraceWord& a, const TraceWord& b) const { return a * b; }
    TraceWord inv(const TraceWord& a) const { return a.inverse(); }
};

// Series evaluation: inverses go through truncated_inverse at a fixed depth,
// so results are ApproxSeries with propagated guarantees.
struct ApproxOps {
    TwistMap twist;
    unsigned depth = 4;
    unsigned degree_cap = default_degree_cap;

    using value_type = ApproxSeries;
    ApproxSeries one() const { return ApproxSeries::exact(Series::one()); }
    ApproxSeries mul(const ApproxSeries& a, const ApproxSeries& b) const {
        return approx_mul(a, b, twist, degree_cap);
    }
    ApproxSeries inv(const ApproxSeries& a) const {
        return truncated_inverse(a, depth, twist, degree_cap);
    }
};

}  // namespace malcev
