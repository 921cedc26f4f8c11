#pragma once

#include "hbg/girth.hpp"
#include "hbg/pattern.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbg
{
    inline constexpr std::string_view engine_version = "hbg-search/1";

    enum class SearchMode
    {
        first_witness,
        all_witnesses,
        count_only,
        prove_nonexistence
    };

    auto to_string(SearchMode mode) -> std::string;
    auto parse_search_mode(std::string_view text) -> std::optional<SearchMode>;

    struct SearchBudget
    {
        std::optional<std::uint64_t> nodes;
        std::optional<std::chrono::milliseconds> wall;
    };

    struct SearchSpec
    {
        int girth = 4;
        int b = 1;
        std::vector<int> orders;
        SearchMode mode = SearchMode::first_witness;
        SearchBudget budget;
        bool symmetry_reduction = false;
        int shards = 1;
    };

    /// Throws std::invalid_argument when g is odd or < 4, b < 1, or an order
    /// is odd, below 6, or not a multiple of 2b.
    auto check_spec(const SearchSpec & spec) -> void;

    /// Counts at one depth of the search tree. Depth k assigns the free
    /// position 2k (0-based) and, with it, its involution partner.
    struct DepthCounters
    {
        std::uint64_t candidates = 0;
        std::uint64_t nodes = 0;
        std::uint64_t rejected_matching = 0;
        std::uint64_t rejected_girth = 0;
        std::uint64_t rejected_symmetry = 0;

        auto operator+=(const DepthCounters & other) -> DepthCounters &;
        bool operator==(const DepthCounters &) const = default;
    };

    struct SearchCounters
    {
        std::vector<DepthCounters> depths;

        static auto for_depth(int b) -> SearchCounters;

        auto total() const -> DepthCounters;
        auto leaves() const -> std::uint64_t;
        auto operator+=(const SearchCounters & other) -> SearchCounters &;
        bool operator==(const SearchCounters &) const = default;
    };

    /// Evidence that the whole pattern space of one (g, b, order) was
    /// enumerated. A certificate backs non-existence only when it records
    /// zero witnesses.
    struct ExhaustionCertificate
    {
        int girth = 0;
        int b = 0;
        int order = 0;
        bool symmetry_reduction = false;
        std::string engine{engine_version};
        std::vector<int> free_positions;
        SearchCounters counters;
        std::uint64_t witnesses = 0;
        double wall_seconds = 0.0;

        /// Empty when the counts are internally consistent, otherwise the
        /// first violated rule.
        auto check() const -> std::string;
        auto backs_nonexistence() const -> bool { return witnesses == 0 && check().empty(); }
    };

    /// 1-based free positions: 1, 3, ..., 2b-1.
    auto free_position_layout(int b) -> std::vector<int>;

    /// Odd chord values tried at the first free position, ascending.
    auto first_position_values(int m, bool symmetry_reduction) -> std::vector<int>;

    /// Contiguous range of first-position values, inclusive. A non-empty
    /// cursor resumes inside the range: cursor[k] is the value to try next at
    /// depth k, all earlier siblings having been fully explored.
    struct ShardRange
    {
        int lo = 0;
        int hi = 0;
        std::vector<int> cursor;

        bool operator==(const ShardRange &) const = default;
    };

    auto partition(const SearchSpec & spec, int order, int shards) -> std::vector<ShardRange>;

    struct Witness
    {
        OffsetPattern pattern;
        int required_girth = 0;
        int measured_girth = 0;

        auto surplus() const -> bool { return measured_girth > required_girth; }
    };

    enum class OrderStatus
    {
        witness,
        exhausted,
        undecided
    };

    auto to_string(OrderStatus status) -> std::string;

    struct OrderOutcome
    {
        int order = 0;
        OrderStatus status = OrderStatus::undecided;
        std::vector<Witness> witnesses;
        std::uint64_t labelled_count = 0;
        std::uint64_t canonical_count = 0;
        /// Present whenever the full space was enumerated.
        std::optional<ExhaustionCertificate> certificate;
        SearchCounters counters;
        /// Work still to do when the budget ran out.
        std::vector<ShardRange> pending;
        double wall_seconds = 0.0;
    };

    /// Everything a later run needs to continue an interrupted one.
    struct ResumeState
    {
        int girth = 0;
        int b = 0;
        SearchMode mode = SearchMode::first_witness;
        bool symmetry_reduction = false;
        std::vector<int> orders;
        SearchCounters counters;
        std::uint64_t labelled_count = 0;
        std::vector<std::vector<int>> witnesses;
        std::vector<ShardRange> shards;
        double wall_seconds = 0.0;
    };

    struct SearchOutcome
    {
        std::vector<OrderOutcome> orders;
        std::optional<int> minimal_order;
        std::optional<ResumeState> resume;

        auto budget_exceeded() const -> bool { return resume.has_value(); }
    };

    /// Searches one order. With `resume`, continues from the saved frontier
    /// instead of starting over.
    auto enumerate(const SearchSpec & spec, int order, const ResumeState * resume = nullptr) -> OrderOutcome;

    /// Runs enumerate over spec.orders ascending. In first-witness mode it
    /// stops at the first order with a witness. A budget breach stops the run
    /// and fills SearchOutcome::resume.
    auto min_order(const SearchSpec & spec, const ResumeState * resume = nullptr) -> SearchOutcome;

    /// Spec for continuing a saved run; budget and shard count come from the caller.
    auto spec_from_resume(const ResumeState & state, SearchBudget budget, int shards) -> SearchSpec;
}
