#include "hbg/catalog.hpp"
#include "hbg/search.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hbg;

namespace
{
    auto spec_for(int g, int b, std::vector<int> orders, SearchMode mode) -> SearchSpec
    {
        SearchSpec spec;
        spec.girth = g;
        spec.b = b;
        spec.orders = std::move(orders);
        spec.mode = mode;
        return spec;
    }

    auto offsets_of(const OffsetPattern & p) -> std::vector<int>
    {
        return {p.offsets().begin(), p.offsets().end()};
    }

    auto witness_set(const OrderOutcome & outcome) -> oracle::CanonicalSet
    {
        oracle::CanonicalSet set;
        for (auto & w : outcome.witnesses)
            set.insert(offsets_of(w.pattern));
        return set;
    }
}

TEST_CASE("spec checks")
{
    CHECK_THROWS_AS(check_spec(spec_for(5, 1, {14}, SearchMode::first_witness)), std::invalid_argument);
    CHECK_THROWS_AS(check_spec(spec_for(6, 3, {8}, SearchMode::first_witness)), std::invalid_argument);
    CHECK_THROWS_AS(check_spec(spec_for(6, 1, {4}, SearchMode::first_witness)), std::invalid_argument);
    CHECK_THROWS_AS(check_spec(spec_for(6, 1, {16, 14}, SearchMode::first_witness)), std::invalid_argument);
    CHECK_NOTHROW(check_spec(spec_for(6, 1, {14, 16}, SearchMode::first_witness)));
}

TEST_CASE("Heawood is the first girth-6 witness")
{
    auto outcome = enumerate(spec_for(6, 1, {14}, SearchMode::first_witness), 14);
    REQUIRE(outcome.status == OrderStatus::witness);
    REQUIRE(outcome.witnesses.size() == 1);
    CHECK(offsets_of(outcome.witnesses[0].pattern) == std::vector<int>{5, 9});
    CHECK(outcome.witnesses[0].measured_girth == 6);
    CHECK(! outcome.witnesses[0].surplus());
    CHECK(! outcome.certificate);
}

TEST_CASE("order 12 has no girth-6 pattern")
{
    auto outcome = enumerate(spec_for(6, 1, {12}, SearchMode::prove_nonexistence), 12);
    CHECK(outcome.status == OrderStatus::exhausted);
    REQUIRE(outcome.certificate);
    CHECK(outcome.certificate->check() == "");
    CHECK(outcome.certificate->backs_nonexistence());
    CHECK(outcome.witnesses.empty());
}

TEST_CASE("girth-8 witness with b=3 at order 30")
{
    auto outcome = enumerate(spec_for(8, 3, {30}, SearchMode::first_witness), 30);
    REQUIRE(outcome.status == OrderStatus::witness);
    auto & w = outcome.witnesses[0];
    CHECK(w.measured_girth == 8);
    CHECK(verify_witness(entry_from_pattern(w.pattern, 8)).passed());
}

TEST_CASE("min_order stops at the first order with a witness")
{
    auto outcome = min_order(spec_for(6, 1, {6, 8, 10, 12, 14, 16, 18, 20}, SearchMode::first_witness));
    REQUIRE(outcome.minimal_order);
    CHECK(*outcome.minimal_order == 14);
    REQUIRE(outcome.orders.size() == 5);
    for (int k = 0; k < 4; ++k) {
        CHECK(outcome.orders[k].status == OrderStatus::exhausted);
        REQUIRE(outcome.orders[k].certificate);
        CHECK(outcome.orders[k].certificate->backs_nonexistence());
    }

    auto tc = min_order(spec_for(8, 3, {6, 12, 18, 24, 30}, SearchMode::first_witness));
    REQUIRE(tc.minimal_order);
    CHECK(*tc.minimal_order == 30);
}

TEST_CASE("girth surplus is reported with both numbers")
{
    // the Tutte-Coxeter pattern also answers a girth-6 query
    auto outcome = enumerate(spec_for(6, 3, {30}, SearchMode::all_witnesses), 30);
    REQUIRE(outcome.status == OrderStatus::witness);
    bool saw_surplus = false;
    for (auto & w : outcome.witnesses) {
        CHECK(w.required_girth == 6);
        CHECK(w.measured_girth >= 6);
        saw_surplus = saw_surplus || (w.surplus() && w.measured_girth == 8);
    }
    CHECK(saw_surplus);
}

TEST_CASE("every witness re-validates and meets the girth floor on the reference path")
{
    for (int g : {4, 6, 8})
        for (auto [m, b] : std::vector<std::pair<int, int>>{{6, 2}, {9, 3}, {12, 4}, {15, 3}, {16, 4}, {20, 5}}) {
            auto outcome = enumerate(spec_for(g, b, {2 * m}, SearchMode::all_witnesses), 2 * m);
            for (auto & w : outcome.witnesses) {
                auto again = validate_pattern(m, b, w.pattern.offsets());
                REQUIRE(girth_oracle(expand(again), 2 * m).at_least(g));
                REQUIRE(canonical_form(again) == again);
            }
        }
}

TEST_CASE("pruned search matches the unpruned brute force at small orders")
{
    for (auto [m, b] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {6, 3}, {7, 1}, {8, 2}, {8, 4}, {9, 3}, {10, 2}, {12, 3}, {15, 3}}) {
        auto brute = oracle::brute_force(m, b, {4, 6, 8}, 2e7, 1'000'000);
        REQUIRE(brute.complete);
        for (int g : {4, 6, 8}) {
            auto outcome = enumerate(spec_for(g, b, {2 * m}, SearchMode::all_witnesses), 2 * m);
            INFO("m=" << m << " b=" << b << " g=" << g);
            CHECK(witness_set(outcome) == brute.witnesses[g]);
            CHECK(outcome.canonical_count == brute.witnesses[g].size());
        }
    }
}

TEST_CASE("partition")
{
    auto spec = spec_for(8, 3, {30}, SearchMode::all_witnesses);
    auto one = partition(spec, 30, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lo == 3);
    CHECK(one[0].hi == 27);

    auto four = partition(spec, 30, 4);
    REQUIRE(four.size() == 4);
    CHECK(four.front().lo == 3);
    CHECK(four.back().hi == 27);
    for (std::size_t k = 1; k < four.size(); ++k)
        CHECK(four[k].lo == four[k - 1].hi + 2);

    // more shards than values collapses to one value per shard
    CHECK(partition(spec_for(6, 1, {8}, SearchMode::count_only), 8, 10).size() == 2);
}

TEST_CASE("sharded runs merge to the serial result")
{
    for (auto [g, b, order] : std::vector<std::tuple<int, int, int>>{{8, 3, 30}, {6, 4, 32}, {8, 5, 40}, {10, 3, 72}}) {
        for (auto mode : {SearchMode::all_witnesses, SearchMode::count_only, SearchMode::prove_nonexistence}) {
            auto serial = spec_for(g, b, {order}, mode);
            auto base = enumerate(serial, order);
            for (int shards : {2, 3, 4, 8}) {
                auto parallel = serial;
                parallel.shards = shards;
                auto merged = enumerate(parallel, order);
                INFO("g=" << g << " b=" << b << " n=" << order << " shards=" << shards);
                CHECK(merged.status == base.status);
                CHECK(witness_set(merged) == witness_set(base));
                CHECK(merged.canonical_count == base.canonical_count);
                if (base.certificate) {
                    REQUIRE(merged.certificate);
                    CHECK(merged.certificate->counters == base.certificate->counters);
                }
            }
        }
    }
}

TEST_CASE("first-witness result does not depend on the shard count")
{
    auto serial = enumerate(spec_for(6, 4, {32}, SearchMode::first_witness), 32);
    REQUIRE(serial.status == OrderStatus::witness);
    for (int shards : {2, 4, 7}) {
        auto spec = spec_for(6, 4, {32}, SearchMode::first_witness);
        spec.shards = shards;
        auto parallel = enumerate(spec, 32);
        REQUIRE(parallel.status == OrderStatus::witness);
        CHECK(parallel.witnesses[0].pattern == serial.witnesses[0].pattern);
    }
}

TEST_CASE("certificates are consistent and deterministic")
{
    auto spec = spec_for(10, 3, {60}, SearchMode::prove_nonexistence);
    auto a = enumerate(spec, 60);
    auto b = enumerate(spec, 60);
    REQUIRE(a.certificate);
    REQUIRE(b.certificate);
    CHECK(a.certificate->check() == "");
    CHECK(serialize_certificate(*a.certificate) == serialize_certificate(*b.certificate));
    CHECK(a.certificate->free_positions == std::vector<int>{1, 3, 5});

    auto total = a.certificate->counters.total();
    CHECK(total.nodes >= a.certificate->counters.leaves());

    SUBCASE("tampering is detected")
    {
        auto cert = *a.certificate;
        cert.counters.depths[1].nodes += 1;
        CHECK(cert.check() != "");
        cert = *a.certificate;
        cert.counters.depths[0].rejected_girth -= 1;
        CHECK(cert.check() != "");
        cert = *a.certificate;
        cert.free_positions = {1, 2, 3};
        CHECK(cert.check() != "");
    }
}

TEST_CASE("symmetry reduction finds the same canonical witnesses")
{
    for (auto [g, b, order] : std::vector<std::tuple<int, int, int>>{{6, 3, 24}, {8, 3, 30}, {6, 4, 32}, {8, 5, 40}, {8, 4, 48}}) {
        auto full = spec_for(g, b, {order}, SearchMode::all_witnesses);
        auto reduced = full;
        reduced.symmetry_reduction = true;
        auto a = enumerate(full, order);
        auto r = enumerate(reduced, order);
        INFO("g=" << g << " b=" << b << " n=" << order);
        CHECK(witness_set(a) == witness_set(r));
        REQUIRE(r.certificate);
        CHECK(r.certificate->check() == "");
        CHECK(r.certificate->symmetry_reduction);
        CHECK(r.counters.total().nodes <= a.counters.total().nodes);
    }
}

TEST_CASE("node budget breach leaves a resumable frontier")
{
    for (auto mode : {SearchMode::prove_nonexistence, SearchMode::all_witnesses, SearchMode::count_only}) {
        auto spec = spec_for(10, 3, {54, 60, 66}, mode);
        auto reference = min_order(spec);
        REQUIRE(! reference.budget_exceeded());

        for (std::uint64_t budget : {1ull, 7ull, 50ull, 333ull}) {
            for (int shards : {1, 3}) {
                auto limited = spec;
                limited.budget.nodes = budget;
                limited.shards = shards;

                std::vector<OrderOutcome> finished;
                auto outcome = min_order(limited);
                int rounds = 0;
                while (true) {
                    for (auto & o : outcome.orders)
                        if (o.status != OrderStatus::undecided)
                            finished.push_back(o);
                    if (! outcome.resume)
                        break;
                    REQUIRE(outcome.orders.back().status == OrderStatus::undecided);
                    CHECK(! outcome.orders.back().certificate);
                    // through the file format, as the CLI does it
                    auto state = parse_resume(serialize_resume(*outcome.resume));
                    auto next = spec_from_resume(state, limited.budget, shards);
                    outcome = min_order(next, &state);
                    REQUIRE(++rounds < 100000);
                }

                INFO("mode=" << to_string(mode) << " budget=" << budget << " shards=" << shards);
                REQUIRE(finished.size() == reference.orders.size());
                for (std::size_t k = 0; k < finished.size(); ++k) {
                    CHECK(finished[k].order == reference.orders[k].order);
                    CHECK(finished[k].status == reference.orders[k].status);
                    CHECK(finished[k].canonical_count == reference.orders[k].canonical_count);
                    CHECK(finished[k].labelled_count == reference.orders[k].labelled_count);
                    CHECK(witness_set(finished[k]) == witness_set(reference.orders[k]));
                    REQUIRE(finished[k].certificate.has_value() == reference.orders[k].certificate.has_value());
                    if (finished[k].certificate) {
                        CHECK(finished[k].certificate->counters == reference.orders[k].certificate->counters);
                        CHECK(finished[k].certificate->check() == "");
                    }
                }
            }
        }
    }
}

TEST_CASE("a budget breach is never reported as non-existence")
{
    auto spec = spec_for(14, 4, {264}, SearchMode::prove_nonexistence);
    spec.budget.nodes = 10;
    auto outcome = min_order(spec);
    REQUIRE(outcome.budget_exceeded());
    REQUIRE(outcome.orders.size() == 1);
    CHECK(outcome.orders[0].status == OrderStatus::undecided);
    CHECK(! outcome.orders[0].certificate);
    CHECK(! outcome.orders[0].pending.empty());
}

TEST_CASE("wall-clock budget")
{
    auto spec = spec_for(14, 6, {264}, SearchMode::prove_nonexistence);
    spec.budget.wall = std::chrono::milliseconds(1);
    auto outcome = min_order(spec);
    CHECK(outcome.budget_exceeded());
}

TEST_CASE("non-monotonicity is representable")
{
    // girth 8, b = 3: a witness at order 30 but none at 36
    auto outcome = min_order(spec_for(8, 3, {30, 36}, SearchMode::count_only));
    REQUIRE(outcome.orders.size() == 2);
    CHECK(outcome.orders[0].status == OrderStatus::witness);
    CHECK(outcome.orders[1].status == OrderStatus::exhausted);
    CHECK(outcome.orders[1].certificate->backs_nonexistence());
}
