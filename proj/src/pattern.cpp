#include "hbg/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace hbg
{
    namespace
    {
        auto mod(long long value, long long modulus) -> long long
        {
            auto r = value % modulus;
            return r < 0 ? r + modulus : r;
        }
    }

    MatchingError::MatchingError(int position, int partner, const std::string & what) :
        PatternError(what),
        _position(position),
        _partner(partner)
    {
    }

    auto validate_pattern(int m, int b, std::span<const long long> offsets) -> OffsetPattern
    {
        if (m < 3)
            throw RangeError("order 2m=" + std::to_string(2L * m) + " too small, need m >= 3");
        if (b < 1)
            throw RangeError("symmetry factor must be positive, got " + std::to_string(b));
        if (m % b != 0)
            throw DivisibilityError("b does not divide m (b=" + std::to_string(b) + ", m=" + std::to_string(m) + ")");

        const int period = 2 * b;
        if (std::cmp_not_equal(offsets.size(), period))
            throw LengthError("expected " + std::to_string(period) + " offsets, got " + std::to_string(offsets.size()));

        const long long n = 2LL * m;
        std::vector<int> normalized(period);
        for (int j = 0; j < period; ++j) {
            auto d = mod(offsets[j], n);
            if (d == 0 || d == 1 || d == n - 1)
                throw DegenerateChordError("offset " + std::to_string(offsets[j]) + " at position " + std::to_string(j + 1)
                        + " is 0 or +-1 mod " + std::to_string(n));
            if (d % 2 == 0)
                throw ParityError("offset " + std::to_string(offsets[j]) + " at position " + std::to_string(j + 1) + " is even");
            normalized[j] = static_cast<int>(d);
        }

        for (int j = 0; j < period; ++j) {
            int t = static_cast<int>((j + normalized[j]) % period);
            if (normalized[t] != n - normalized[j])
                throw MatchingError(j + 1, t + 1,
                        "position " + std::to_string(j + 1) + " (offset " + std::to_string(normalized[j]) + ") lands in position "
                        + std::to_string(t + 1) + " whose offset " + std::to_string(normalized[t]) + " is not "
                        + std::to_string(n - normalized[j]));
        }

        return OffsetPattern{m, b, std::move(normalized)};
    }

    auto validate_pattern(int m, int b, std::span<const int> offsets) -> OffsetPattern
    {
        std::vector<long long> wide(offsets.begin(), offsets.end());
        return validate_pattern(m, b, std::span<const long long>{wide});
    }

    auto validate_pattern(int m, int b, std::initializer_list<long long> offsets) -> OffsetPattern
    {
        return validate_pattern(m, b, std::span<const long long>{offsets.begin(), offsets.size()});
    }

    auto ExpandedGraph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto & nbrs : adjacency)
            twice += nbrs.size();
        return twice / 2;
    }

    auto ExpandedGraph::is_cubic_simple() const -> bool
    {
        if (std::cmp_not_equal(adjacency.size(), order))
            return false;
        for (int v = 0; v < order; ++v) {
            auto nbrs = adjacency[v];
            for (int k = 0; k < 3; ++k) {
                int w = nbrs[k];
                if (w < 0 || w >= order || w == v)
                    return false;
                for (int l = k + 1; l < 3; ++l)
                    if (nbrs[l] == w)
                        return false;
                auto & back = adjacency[w];
                if (std::count(back.begin(), back.end(), v) != 1)
                    return false;
            }
        }
        return true;
    }

    auto ExpandedGraph::is_parity_bipartite() const -> bool
    {
        for (int v = 0; v < order; ++v)
            for (int w : adjacency[v])
                if ((v - w) % 2 == 0)
                    return false;
        return true;
    }

    auto ExpandedGraph::has_labelled_hamiltonian_cycle() const -> bool
    {
        for (int v = 0; v < order; ++v) {
            auto & nbrs = adjacency[v];
            if (std::find(nbrs.begin(), nbrs.end(), (v + 1) % order) == nbrs.end())
                return false;
        }
        return order >= 3;
    }

    auto expand(const OffsetPattern & pattern) -> ExpandedGraph
    {
        const int n = pattern.order();
        ExpandedGraph graph;
        graph.order = n;
        graph.adjacency.resize(n);
        for (int v = 0; v < n; ++v)
            graph.adjacency[v] = {(v + n - 1) % n, (v + 1) % n, (v + pattern.offset_of_vertex(v)) % n};
        return graph;
    }

    auto minimal_period(const OffsetPattern & pattern) -> int
    {
        const int period = pattern.period();
        auto offsets = pattern.offsets();
        for (int p = 1; p < period; ++p) {
            if (period % p != 0)
                continue;
            bool repeats = true;
            for (int j = 0; j < period && repeats; ++j)
                repeats = offsets[j] == offsets[(j + p) % period];
            if (repeats)
                return p;
        }
        return period;
    }

    auto derived_symmetry_factors(const OffsetPattern & pattern) -> std::set<int>
    {
        const int p = minimal_period(pattern);
        std::set<int> factors;
        for (int candidate = 1; candidate <= pattern.m(); ++candidate)
            if (pattern.m() % candidate == 0 && (2 * candidate) % p == 0)
                factors.insert(candidate);
        return factors;
    }

    auto PatternTransform::apply(const OffsetPattern & pattern) const -> OffsetPattern
    {
        const int period = pattern.period();
        const int n = pattern.order();
        std::vector<int> moved(period);
        for (int j = 0; j < period; ++j) {
            if (reflect)
                moved[j] = n - pattern.offset(static_cast<int>(mod(shift - j, period)));
            else
                moved[j] = pattern.offset(static_cast<int>(mod(shift + j, period)));
        }
        return validate_pattern(pattern.m(), pattern.b(), std::span<const int>{moved});
    }

    auto PatternTransform::then(const PatternTransform & next, int period) const -> PatternTransform
    {
        // (this, then next): the source index of position j is s1 + e1*(s2 + e2*j)
        int combined = reflect ? shift - next.shift : shift + next.shift;
        return PatternTransform{static_cast<int>(mod(combined, period)), reflect != next.reflect};
    }

    auto canonical_form(const OffsetPattern & pattern) -> OffsetPattern
    {
        const int period = pattern.period();
        const int n = pattern.order();
        auto offsets = pattern.offsets();

        std::vector<int> best(offsets.begin(), offsets.end());
        std::vector<int> candidate(period);
        for (int reflect = 0; reflect < 2; ++reflect)
            for (int shift = 0; shift < period; ++shift) {
                for (int j = 0; j < period; ++j)
                    candidate[j] = reflect ? n - offsets[mod(shift - j, period)] : offsets[(shift + j) % period];
                if (candidate < best)
                    best = candidate;
            }
        return validate_pattern(pattern.m(), pattern.b(), std::span<const int>{best});
    }

    auto format_offsets(const OffsetPattern & pattern) -> std::string
    {
        std::ostringstream out;
        bool first = true;
        for (int d : pattern.offsets()) {
            if (! first)
                out << ' ';
            out << d;
            first = false;
        }
        return out.str();
    }
}
