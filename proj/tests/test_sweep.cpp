#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "royal/generators.hpp"
#include "royal/reproduce.hpp"
#include "royal/sweep.hpp"

using namespace royal;

TEST_CASE("tree sweeps count isomorphism classes and stay clean") {
    SweepReport report = sweep_trees(3, 7, {});
    CHECK(report.rows.size() == 1 + 2 + 3 + 6 + 11);
    CHECK(report.counterexamples.empty());
    CHECK(report.timed_out == 0);
    for (const SweepRow& r : report.rows) {
        CHECK(r.verdict == Verdict::RoyalZero);
        CHECK(r.index == r.k_floor);
        CHECK(r.m == r.n - 1);
    }
    CHECK_THROWS_AS(sweep_trees(2, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_trees(5, 4, {}), std::invalid_argument);
}

TEST_CASE("a royal-one graph violates the tree scope but not the general one") {
    std::vector<Graph> batch{cycle_graph(7), cycle_graph(8)};
    SweepReport strict = sweep_graphs(batch, ConjectureScope::TreesRoyalZero, {});
    REQUIRE(strict.counterexamples.size() == 1);
    CHECK(strict.counterexamples[0] == 0);
    CHECK(strict.rows[0].counterexample);
    CHECK_FALSE(strict.rows[1].counterexample);

    SweepReport loose = sweep_graphs(batch, ConjectureScope::NoAnomaly, {});
    CHECK(loose.counterexamples.empty());
}

TEST_CASE("row order tracks input order at any worker count") {
    std::vector<Graph> batch;
    for (int n = 3; n <= 12; ++n) batch.push_back(cycle_graph(n));
    SweepOptions fan;
    fan.workers = 4;
    fan.deterministic = true;
    SweepReport a = sweep_graphs(batch, ConjectureScope::NoAnomaly, fan);
    SweepOptions solo;
    solo.deterministic = true;
    SweepReport b = sweep_graphs(batch, ConjectureScope::NoAnomaly, solo);
    CHECK(sweep_to_csv(a) == sweep_to_csv(b));
}

TEST_CASE("a starved solve becomes a flagged timeout row, not a verdict") {
    SweepOptions opts;
    opts.timeout_ms = 3;
    opts.deterministic = true;
    SweepReport report = sweep_graphs({gk_graph(4)}, ConjectureScope::NoAnomaly, opts);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.timed_out == 1);
    CHECK(report.rows[0].timed_out);
    CHECK(report.rows[0].index == -1);
    CHECK_FALSE(report.rows[0].counterexample);
    CHECK(sweep_to_csv(report).find(",timeout,none,") != std::string::npos);
}

TEST_CASE("serialized sweeps carry the frozen columns and parseable JSON") {
    SweepOptions opts;
    opts.deterministic = true;
    SweepReport report = sweep_trees(4, 4, opts);
    std::string csv = sweep_to_csv(report);
    CHECK(csv.rfind("graph6,n,m,k_floor,index,verdict,method,nodes,ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 trees

    nlohmann::json doc = nlohmann::json::parse(sweep_to_json(report));
    CHECK(doc["scope"] == "trees-royal-zero");
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["verdict"] == "royal-zero");
    CHECK(doc["rows"][0]["ms"] == 0);
    CHECK(doc["timed_out"] == 0);
}

TEST_CASE("fixture sets recompute clean and reject unknown names") {
    ReproduceReport complete = run_reproduce("complete");
    CHECK(complete.rows.size() == 5);
    CHECK(complete.all_pass());

    ReproduceReport chords = run_reproduce("chords");
    CHECK(chords.rows.size() == 14);
    CHECK(chords.all_pass());

    std::string text = reproduce_to_text(chords);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("14/14 fixtures pass") != std::string::npos);

    CHECK_THROWS_AS(run_reproduce("bogus"), std::invalid_argument);
    CHECK(reproduce_set_names().size() == 7);
}
