#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "malcev/config.hpp"
#include "malcev/errors.hpp"
#include "malcev/report.hpp"
#include "malcev/suites.hpp"

using namespace malcev;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.samples = 40;
    cfg.depth = 3;
    return cfg;
}

}  // namespace

TEST_CASE("every named suite passes on a small budget") {
    RunConfig cfg = small_config();
    for (const std::string name :
         {"order", "d-hom", "ring", "inverse", "lemma4", "lemma5", "identities"}) {
        auto reports = run_suite(name, cfg);
        REQUIRE(reports.size() == 1);
        INFO(reports.front().to_json().dump(2));
        REQUIRE(reports.front().suite == name);
        REQUIRE(reports.front().passed());
    }
}

TEST_CASE("the combined run covers all suites and the demo") {
    RunConfig cfg = small_config();
    auto reports = run_suite("all", cfg);
    REQUIRE(reports.size() == 8);
    std::vector<std::string> names;
    for (const auto& r : reports) {
        names.push_back(r.suite);
        INFO(r.to_json().dump(2));
        REQUIRE(r.passed());
    }
    REQUIRE(names == std::vector<std::string>{"order", "d-hom", "ring", "inverse", "lemma4",
                                              "lemma5", "identities", "demo"});
}

TEST_CASE("unknown suite names are rejected") {
    RunConfig cfg = small_config();
    REQUIRE_THROWS_AS(run_suite("nosuch", cfg), Error);
}

TEST_CASE("the demonstration suite passes and fails on an empty budget") {
    RunConfig cfg = small_config();
    cfg.samples = 60;
    SuiteReport report = run_demo(cfg);
    INFO(report.to_json().dump(2));
    REQUIRE(report.passed());

    // Config echo lands in the report for reproducibility.
    Json j = report.to_json();
    REQUIRE(j["config"]["seed"] == 1);
    REQUIRE(j["suite"] == "demo");
    REQUIRE(j.contains("checks"));

    RunConfig empty = small_config();
    empty.samples = 0;
    REQUIRE_FALSE(run_demo(empty).passed());
}

TEST_CASE("equal configurations give byte-identical reports") {
    RunConfig cfg = small_config();
    std::string a = run_demo(cfg).to_json().dump();
    std::string b = run_demo(cfg).to_json().dump();
    REQUIRE(a == b);

    std::string c = run_suite("inverse", cfg).front().to_json().dump();
    std::string d = run_suite("inverse", cfg).front().to_json().dump();
    REQUIRE(c == d);

    // A different seed changes sampled details but not the verdict.
    RunConfig other = small_config();
    other.seed = 2;
    REQUIRE(run_demo(other).passed());
}

TEST_CASE("tallies fail vacuously empty checks") {
    Tally t;
    Check c = t.check("never sampled");
    REQUIRE_FALSE(c.passed);

    t.count(true);
    t.count(true);
    t.count(false);
    REQUIRE(t.passed == 2);
    REQUIRE(t.total == 3);
    REQUIRE_FALSE(t.all());
    REQUIRE(t.check("majority is not the bar here").passed == false);

    Tally clean;
    clean.count(true);
    REQUIRE(clean.check("one good sample").passed);
}
