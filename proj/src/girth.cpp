#include "hbg/girth.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hbg
{
    auto girth_oracle(const ExpandedGraph & graph, int cap) -> GirthResult
    {
        const int n = graph.order;
        const int unseen = -1;
        int best = std::numeric_limits<int>::max();

        std::vector<int> depth(n), parent(n);
        for (int root = 0; root < n; ++root) {
            std::fill(depth.begin(), depth.end(), unseen);
            std::fill(parent.begin(), parent.end(), unseen);
            std::queue<int> queue;
            depth[root] = 0;
            queue.push(root);

            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                // any cycle closed from here on is at least 2*depth+1 long
                if (2 * depth[u] + 1 > cap)
                    break;
                for (int w : graph.adjacency[u]) {
                    if (w == parent[u])
                        continue;
                    if (depth[w] == unseen) {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    }
                    else
                        best = std::min(best, depth[u] + depth[w] + 1);
                }
            }
        }

        if (best <= cap)
            return GirthResult::exact(best, cap);
        return GirthResult::exceeds(cap);
    }

    CycleProbe::CycleProbe(int order) :
        _order(order),
        _seen(order, 0),
        _depth(order, 0),
        _parent(order, -1),
        _queue(order, 0)
    {
    }

    auto CycleProbe::shortest_from(std::span<const int> offsets, int root, int cap) -> int
    {
        const int n = _order;
        const int period = static_cast<int>(offsets.size());

        if (++_generation == 0) {
            std::fill(_seen.begin(), _seen.end(), 0);
            _generation = 1;
        }

        int best = cap + 1;
        int head = 0, tail = 0;
        _queue[tail++] = root;
        _seen[root] = _generation;
        _depth[root] = 0;
        _parent[root] = -1;

        while (head < tail) {
            int u = _queue[head++];
            int du = _depth[u];
            if (2 * du + 1 >= best)
                break;

            int chord = offsets[u % period];
            int nbrs[3] = {u == 0 ? n - 1 : u - 1, u + 1 == n ? 0 : u + 1, -1};
            if (chord != 0) {
                int w = u + chord;
                nbrs[2] = w >= n ? w - n : w;
            }

            for (int w : nbrs) {
                if (w < 0 || w == _parent[u])
                    continue;
                if (_seen[w] != _generation) {
                    _seen[w] = _generation;
                    _depth[w] = du + 1;
                    _parent[w] = u;
                    _queue[tail++] = w;
                }
                else
                    best = std::min(best, du + _depth[w] + 1);
            }
        }
        return best;
    }

    auto girth_fast(const OffsetPattern & pattern, int cap) -> GirthResult
    {
        CycleProbe probe(pattern.order());
        int best = cap + 1;
        // classes mod 2b are translates of one another, so every cycle has a
        // translate through one of the first 2b vertices
        for (int root = 0; root < pattern.period(); ++root)
            best = std::min(best, probe.shortest_from(pattern.offsets(), root, std::min(cap, best - 1)));
        if (best <= cap)
            return GirthResult::exact(best, cap);
        return GirthResult::exceeds(cap);
    }

    auto PartialAssignment::empty(int m, int b) -> PartialAssignment
    {
        return PartialAssignment{m, b, std::vector<int>(2 * b, 0)};
    }

    auto PartialAssignment::prefix_of(const OffsetPattern & pattern, int assigned_free_positions) -> PartialAssignment
    {
        // free positions are the even ones; each pulls in its odd partner
        auto partial = empty(pattern.m(), pattern.b());
        for (int k = 0; k < assigned_free_positions && k < pattern.b(); ++k) {
            int p = 2 * k;
            int d = pattern.offset(p);
            partial.offsets[p] = d;
            partial.offsets[(p + d) % pattern.period()] = pattern.order() - d;
        }
        return partial;
    }

    auto PartialAssignment::complete() const -> bool
    {
        return std::none_of(offsets.begin(), offsets.end(), [](int d) { return d == 0; });
    }

    auto has_girth_at_least(const PartialAssignment & partial, int g) -> bool
    {
        if (g <= 3)
            return true;
        CycleProbe probe(partial.order());
        for (int root = 0; root < partial.period(); ++root)
            if (probe.shortest_from(partial.offsets, root, g - 1) < g)
                return false;
        return true;
    }
}
