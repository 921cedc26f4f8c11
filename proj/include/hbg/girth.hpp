#pragma once

#include "hbg/pattern.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hbg
{
    /// Either an exact girth or "no cycle of length <= cap".
    struct GirthResult
    {
        int cap = 0;
        std::optional<int> value;

        static auto exact(int girth, int cap) -> GirthResult { return {cap, girth}; }
        static auto exceeds(int cap) -> GirthResult { return {cap, std::nullopt}; }

        auto exceeds_cap() const -> bool { return ! value.has_value(); }
        /// True when the graph has no cycle shorter than g (requires cap >= g - 1).
        auto at_least(int g) const -> bool { return exceeds_cap() || *value >= g; }

        bool operator==(const GirthResult &) const = default;
    };

    /// Reference girth: truncated BFS from every vertex of the explicit graph.
    auto girth_oracle(const ExpandedGraph & graph, int cap) -> GirthResult;

    /// Girth of a pattern from the 2b class representatives only.
    auto girth_fast(const OffsetPattern & pattern, int cap) -> GirthResult;

    /// Offsets assigned so far during a search; 0 marks an unknown position.
    /// A chord is present at a vertex only once its class is assigned.
    struct PartialAssignment
    {
        int m = 0;
        int b = 0;
        std::vector<int> offsets;

        static auto empty(int m, int b) -> PartialAssignment;
        static auto prefix_of(const OffsetPattern & pattern, int assigned_free_positions) -> PartialAssignment;

        auto order() const -> int { return 2 * m; }
        auto period() const -> int { return 2 * b; }
        auto complete() const -> bool;
    };

    /// False only if the chords already assigned close a cycle shorter than g.
    auto has_girth_at_least(const PartialAssignment & partial, int g) -> bool;

    /// BFS scratch for the implicit graph "Hamiltonian cycle plus periodic
    /// chords". One instance per thread; never shared.
    class CycleProbe
    {
    public:
        explicit CycleProbe(int order);

        /// Length of the shortest cycle found by BFS from root, or a value
        /// greater than cap. The result bounds the shortest cycle through
        /// root from above and is always the length of some cycle.
        auto shortest_from(std::span<const int> offsets, int root, int cap) -> int;

        auto order() const -> int { return _order; }

    private:
        int _order;
        std::uint32_t _generation = 0;
        std::vector<std::uint32_t> _seen;
        std::vector<int> _depth;
        std::vector<int> _parent;
        std::vector<int> _queue;
    };
}
