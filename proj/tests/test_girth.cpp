#include "hbg/girth.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hbg;

namespace
{
    auto k33() { return validate_pattern(3, 1, {3, 3}); }
    auto heawood() { return validate_pattern(7, 1, {5, 9}); }
    auto tutte_coxeter() { return validate_pattern(15, 3, {17, 21, 7, 23, 9, 13}); }
}

TEST_CASE("oracle girth of known graphs")
{
    CHECK(girth_oracle(expand(k33()), 20) == GirthResult::exact(4, 20));
    CHECK(girth_oracle(expand(heawood()), 20) == GirthResult::exact(6, 20));
    CHECK(girth_oracle(expand(tutte_coxeter()), 20) == GirthResult::exact(8, 20));
}

TEST_CASE("cap semantics")
{
    auto tc = girth_oracle(expand(tutte_coxeter()), 7);
    CHECK(tc.exceeds_cap());
    CHECK(tc.cap == 7);
    CHECK(tc.at_least(8));
    CHECK(girth_fast(tutte_coxeter(), 7).exceeds_cap());
    CHECK(girth_fast(tutte_coxeter(), 8) == GirthResult::exact(8, 8));
}

TEST_CASE("fast girth on known graphs")
{
    CHECK(girth_fast(k33(), 20) == GirthResult::exact(4, 20));
    CHECK(girth_fast(heawood(), 20) == GirthResult::exact(6, 20));
    CHECK(girth_fast(tutte_coxeter(), 20) == GirthResult::exact(8, 20));
}

TEST_CASE("fast girth equals the oracle on random patterns")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> caps(3, 20);
    for (int trial = 0; trial < 600; ++trial) {
        auto p = oracle::random_pattern(rng, 60);
        int cap = caps(rng);
        auto slow = girth_oracle(expand(p), cap);
        auto fast = girth_fast(p, cap);
        REQUIRE(fast == slow);

        auto exact = girth_oracle(expand(p), p.order());
        REQUIRE(exact.value.has_value());
        REQUIRE(*exact.value % 2 == 0);
        REQUIRE(*exact.value >= 4);
        REQUIRE(*exact.value <= p.order());
    }
}

TEST_CASE("pruning predicate basics")
{
    SUBCASE("bare cycle")
    {
        auto empty = PartialAssignment::empty(20, 4);
        CHECK(has_girth_at_least(empty, 40));
        CHECK(has_girth_at_least(empty, 8));
        CHECK(! has_girth_at_least(empty, 42));
    }
    SUBCASE("offset 3 closes a 4-cycle")
    {
        auto partial = PartialAssignment::empty(50, 5);
        partial.offsets[0] = 3;
        partial.offsets[3] = 97;
        CHECK(! has_girth_at_least(partial, 8));
        CHECK(has_girth_at_least(partial, 4));
    }
    SUBCASE("every prefix of the Heawood pattern")
    {
        for (int k = 0; k <= 1; ++k)
            CHECK(has_girth_at_least(PartialAssignment::prefix_of(heawood(), k), 6));
        for (int k = 0; k <= 3; ++k)
            CHECK(has_girth_at_least(PartialAssignment::prefix_of(tutte_coxeter(), k), 8));
    }
    SUBCASE("complete assignment agrees with the girth")
    {
        auto full = PartialAssignment::prefix_of(heawood(), 1);
        CHECK(full.complete());
        CHECK(! has_girth_at_least(full, 8));
    }
}

TEST_CASE("pruning predicate is sound and monotone")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        auto p = oracle::random_pattern(rng, 50);
        auto girth = *girth_oracle(expand(p), p.order()).value;

        for (int g = 4; g <= 14; g += 2) {
            bool previous = true;
            for (int k = 0; k <= p.b(); ++k) {
                bool ok = has_girth_at_least(PartialAssignment::prefix_of(p, k), g);
                // never rejects a prefix of a pattern that reaches g
                if (girth >= g)
                    REQUIRE(ok);
                // once false, stays false for longer prefixes
                if (! previous)
                    REQUIRE(! ok);
                previous = ok;
            }
            // exact on complete assignments
            REQUIRE(has_girth_at_least(PartialAssignment::prefix_of(p, p.b()), g) == (girth >= g));
        }
        // false for g stays false for every larger g
        for (int k = 0; k <= p.b(); ++k)
            for (int g = 4; g <= 12; g += 2)
                if (! has_girth_at_least(PartialAssignment::prefix_of(p, k), g))
                    REQUIRE(! has_girth_at_least(PartialAssignment::prefix_of(p, k), g + 2));
    }
}

TEST_CASE("probe reports a genuine cycle length bounded by the true shortest cycle through the root")
{
    auto tc = tutte_coxeter();
    CycleProbe probe(tc.order());
    for (int root = 0; root < tc.order(); ++root)
        CHECK(probe.shortest_from(tc.offsets(), root, 30) == 8);
}
