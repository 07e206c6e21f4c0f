#include <doctest.h>

#include <algorithm>

#include "gspin/sweep.hpp"
#include "test_util.hpp"

using namespace gspin;
using testutil::make_levi;
using testutil::make_sigma;

namespace {

const char* kSmallInstance = R"({
  "group": {"family": "B", "n": 2},
  "levi": {"blocks": [1], "m": 1},
  "sigma": {"labels": ["a"], "assign": ["a"], "dual": {"a": "a"},
            "reducible": {"a": true}}
})";

}  // namespace

TEST_CASE("instance counting at rank one") {
    // one block of size one: a self-dual class with either reducibility bit,
    // and (with a second letter available) a non-self-dual class
    CHECK(enumerate_instances({Family::B, 1, 1, 1}).size() == 2);
    CHECK(enumerate_instances({Family::B, 1, 1, 2}).size() == 3);
    CHECK(enumerate_instances({Family::B, 1, 1, 4}).size() == 3);
}

TEST_CASE("instance counting at rank two") {
    // independent hand count for family B, blocks up to size 2, alphabet 4:
    //   r=1, sizes (1) and (2): 3 each
    //   r=2, equal sizes: same label (3) + distinct labels (9 + 1 paired) = 13
    //   r=2, mixed sizes: distinct labels, no cross pair: 9 each
    CHECK(enumerate_instances({Family::B, 2, 2, 4}).size() == 3 + 3 + 13 + 9 + 9 + 13);
}

TEST_CASE("family D regimes multiply the stream") {
    const auto d = enumerate_instances({Family::D, 1, 1, 2});
    // r=1, odd block: m=0 (2: self-dual red t/f is constrained...) plus
    // m=1 with cn_fixes_tau in {false,true}
    bool seen_m0 = false, seen_cn = false;
    for (const Instance& inst : d) {
        seen_m0 = seen_m0 || inst.levi.m() == 0;
        seen_cn = seen_cn || inst.sigma.cn_fixes_tau;
    }
    CHECK(seen_m0);
    CHECK(seen_cn);
}

TEST_CASE("canonical dedup identifies relabeled instances") {
    const LeviSpec levi = make_levi(Family::B, {1, 1}, 1);
    const Instance first{levi, make_sigma(levi, {"x", "y"}, {{"x", "z"}}, {"y"}), std::nullopt};
    const Instance second{levi, make_sigma(levi, {"q", "w"}, {{"q", "e"}}, {"w"}), std::nullopt};
    CHECK(instance_key(first) == instance_key(second));
    const Instance third{levi, make_sigma(levi, {"x", "y"}, {{"y", "z"}}, {"x"}), std::nullopt};
    CHECK(instance_key(first) != instance_key(third));
}

TEST_CASE("json round-trip") {
    const Instance inst = parse_instance_text(kSmallInstance);
    const auto j = instance_to_json(inst);
    const Instance back = parse_instance(j);
    CHECK(back == inst);
    CHECK(instance_to_json(back) == j);
}

TEST_CASE("parse rejects malformed shapes") {
    CHECK_THROWS_AS(parse_instance_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_text(R"({"group": {"family": "E", "n": 1}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_text(R"({
        "group": {"family": "B", "n": 2},
        "levi": {"blocks": [1], "m": 0},
        "sigma": {"labels": ["a"], "assign": ["a"]}
    })"),
                    std::invalid_argument);  // partition broken
}

TEST_CASE("validate reports violations as data") {
    // reducible class that is not self-dual
    Instance bad = parse_instance_text(R"({
        "group": {"family": "B", "n": 2},
        "levi": {"blocks": [1], "m": 1},
        "sigma": {"labels": ["a", "b"], "assign": ["a"], "dual": {"a": "b", "b": "a"},
                  "reducible": {"a": true}}
    })");
    auto violations = validate(bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("self-dual") != std::string::npos);

    // dual that is not an involution
    Instance skew = parse_instance_text(R"({
        "group": {"family": "B", "n": 3},
        "levi": {"blocks": [1, 1], "m": 1},
        "sigma": {"labels": ["a", "b", "c"], "assign": ["a", "b"],
                  "dual": {"a": "b", "b": "c", "c": "a"}, "reducible": {}}
    })");
    CHECK_FALSE(validate(skew).empty());

    // params that induce a different sigma
    Instance mismatch = parse_instance_text(R"({
        "group": {"family": "B", "n": 3},
        "levi": {"blocks": [2], "m": 1},
        "sigma": {"labels": ["a"], "assign": ["a"], "dual": {"a": "a"},
                  "reducible": {"a": false}},
        "params": {"blocks": [{"rho": "r", "dim": 1, "selfdual": "orth", "b": "1/2", "a": 2}],
                   "jordan": []}
    })");
    bool found = false;
    for (const auto& v : validate(mismatch))
        found = found || v.find("induced by params") != std::string::npos;
    CHECK(found);
}

TEST_CASE("jordan parity is validated") {
    Instance inst = parse_instance_text(R"({
        "group": {"family": "B", "n": 3},
        "levi": {"blocks": [2], "m": 1},
        "sigma": {"labels": ["a"], "assign": ["a"], "dual": {"a": "a"},
                  "reducible": {"a": false}},
        "params": {"blocks": [{"rho": "r", "dim": 1, "selfdual": "orth", "b": "1/2", "a": 2}],
                   "jordan": [{"rho": "r", "a": 3}]}
    })");
    bool found = false;
    for (const auto& v : validate(inst)) found = found || v.find("parity") != std::string::npos;
    CHECK(found);
}

TEST_CASE("seeded random streams are reproducible") {
    EnumConfig cfg{Family::D, 3, 2, 3};
    const auto a = random_instances(cfg, 12345, 40);
    const auto b = random_instances(cfg, 12345, 40);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) CHECK(instance_key(a[k]) == instance_key(b[k]));
    const auto c = random_instances(cfg, 54321, 40);
    bool all_same = c.size() == a.size();
    if (all_same)
        for (size_t k = 0; k < a.size(); ++k)
            all_same = all_same && instance_key(a[k]) == instance_key(c[k]);
    CHECK_FALSE(all_same);
    for (const Instance& inst : a) CHECK(validate(inst).empty());
}

TEST_CASE("sweeps pass and parallel equals serial") {
    for (Family family : {Family::B, Family::D}) {
        SweepConfig cfg;
        cfg.family = family;
        cfg.max_r = 2;
        cfg.alphabet = 3;
        cfg.checks = {Check::rgroup_equivalence, Check::rgroup_structure, Check::cocycle,
                      Check::elliptic, Check::sign_characters};
        cfg.threads = 1;
        const SweepReport serial = run_sweep(cfg);
        CHECK(serial.passed());
        CHECK(serial.total > 0);
        cfg.threads = 4;
        const SweepReport parallel = run_sweep(cfg);
        CHECK(same_outcome(serial, parallel));
    }
}

TEST_CASE("seeded sweeps are deterministic") {
    SweepConfig cfg;
    cfg.family = Family::D;
    cfg.max_r = 3;
    cfg.seed = 99;
    cfg.count = 30;
    cfg.checks = {Check::rgroup_equivalence, Check::elliptic};
    const SweepReport a = run_sweep(cfg);
    const SweepReport b = run_sweep(cfg);
    CHECK(a.total == 30);
    CHECK(same_outcome(a, b));
}

TEST_CASE("random-mode sweep with count zero is empty") {
    SweepConfig cfg;
    cfg.count = 0;
    cfg.seed = 7;
    const SweepReport report = run_sweep(cfg);
    CHECK(report.total == 0);
    CHECK(report.passed());
}

TEST_CASE("corrupt instances are rejected before any check runs") {
    const LeviSpec levi = make_levi(Family::B, {1}, 1);
    InertiaDatum sigma = make_sigma(levi, {"a"}, {{"a", "b"}});
    sigma.reducible[0] = 1;  // reducible without self-duality
    SweepConfig cfg;
    std::vector<Failure> fails;
    run_checks_on_instance(cfg, Instance{levi, sigma, std::nullopt}, fails);
    REQUIRE(fails.size() == 1);
    CHECK(fails[0].check == "validate");
}

TEST_CASE("failure reports carry the offending instance") {
    // a fabricated failure keeps the exit-code contract honest: nothing in
    // the verified theorems produces one
    const LeviSpec levi = make_levi(Family::B, {1}, 1);
    SweepReport report;
    report.total = 1;
    report.failures.push_back(
        {Instance{levi, make_sigma(levi, {"a"}), std::nullopt}, "synthetic", "x", "y"});
    CHECK_FALSE(report.passed());
    SweepConfig cfg;
    const auto j = report_to_json(cfg, report);
    CHECK(j["passed"] == false);
    CHECK(j["failures"].size() == 1);
}

TEST_CASE("sweep json report round-trips through the schema") {
    SweepConfig cfg;
    cfg.family = Family::B;
    cfg.max_r = 1;
    cfg.alphabet = 2;
    cfg.checks = {Check::rgroup_equivalence};
    const SweepReport report = run_sweep(cfg);
    const auto j = report_to_json(cfg, report);
    CHECK(j["schema"] == "gspin-report/1");
    CHECK(j["total"].get<std::size_t>() == report.total);
    CHECK(j["passed"].get<bool>() == report.passed());
}
