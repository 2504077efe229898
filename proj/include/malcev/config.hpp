#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "descriptor.hpp"
#include "errors.hpp"
#include "free_group.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "twist.hpp"

namespace malcev {

// One deterministic run: the seed fixes every sample, so equal configs give
// byte-identical reports.
struct RunConfig {
    std::uint64_t seed = 0;
    unsigned depth = 4;      // truncation depth n for inverses
    unsigned samples = 1000; // trials per sampled property
    TwistMap twist = TwistMap({{1, 1}, {2, -2}});
    ChainDescriptor descriptor = ChainDescriptor::single_finite_index(3);
    ReducedWord x = default_x();

    static ReducedWord default_x() {
        return ReducedWord::generator(1, 2) * ReducedWord::generator(2);
    }

    Json to_json() const {
        Json out;
        out["seed"] = seed;
        out["depth"] = depth;
        out["samples"] = samples;
        out["weights"] = twist.to_string();
        out["descriptor"] = descriptor.to_string();
        out["x"] = x.to_string();
        return out;
    }
};

namespace detail {

inline std::uint64_t parse_uint_value(std::string_view v, std::string_view key) {
    std::uint64_t out = 0;
    auto* end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || p != end)
        throw Error("config: invalid integer for '" + std::string(key) + "': " + std::string(v));
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Key = value per line; '#' starts a comment.  Keys: seed, depth, samples,
// weights, desc, x.
inline void apply_config_line(RunConfig& cfg, std::string_view line) {
    std::string_view s = line.substr(0, line.find('#'));
    s = detail::trim(s);
    if (s.empty()) return;
    auto eq = s.find('=');
    if (eq == std::string_view::npos) throw Error("config: expected 'key = value': " + std::string(s));
    std::string_view key = detail::trim(s.substr(0, eq));
    std::string_view value = detail::trim(s.substr(eq + 1));
    if (key == "seed")
        cfg.seed = detail::parse_uint_value(value, key);
    else if (key == "depth")
        cfg.depth = static_cast<unsigned>(detail::parse_uint_value(value, key));
    else if (key == "samples")
        cfg.samples = static_cast<unsigned>(detail::parse_uint_value(value, key));
    else if (key == "weights")
        cfg.twist = parse_weights(value);
    else if (key == "desc")
        cfg.descriptor = parse_descriptor(value);
    else if (key == "x")
        cfg.x = parse_word(value);
    else
        throw Error("config: unknown key '" + std::string(key) + "'");
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) apply_config_line(cfg, line);
    return cfg;
}

}  // namespace malcev
