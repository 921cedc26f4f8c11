#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbg
{
    // Errors raised while validating an offset pattern. Positions carried in
    // messages are 1-based, matching the vertex labelling 1..2m.
    class PatternError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class RangeError : public PatternError
    {
    public:
        using PatternError::PatternError;
    };

    class DivisibilityError : public PatternError
    {
    public:
        using PatternError::PatternError;
    };

    class LengthError : public PatternError
    {
    public:
        using PatternError::PatternError;
    };

    class ParityError : public PatternError
    {
    public:
        using PatternError::PatternError;
    };

    class DegenerateChordError : public PatternError
    {
    public:
        using PatternError::PatternError;
    };

    class MatchingError : public PatternError
    {
    public:
        MatchingError(int position, int partner, const std::string & what);

        /// 1-based offending position and the position its chord lands in.
        int position() const noexcept { return _position; }
        int partner() const noexcept { return _partner; }

    private:
        int _position;
        int _partner;
    };

    /// Chord offsets of a trivalent Hamiltonian bipartite graph of order 2m
    /// with rotational period 2b along its Hamiltonian cycle. Vertex i
    /// (0-based) is joined to i-1, i+1 and i + offset(i mod 2b), all mod 2m.
    /// Offsets are kept as least positive residues. Instances only come out
    /// of validate_pattern() and are immutable afterwards.
    class OffsetPattern
    {
    public:
        int m() const noexcept { return _m; }
        int b() const noexcept { return _b; }
        int order() const noexcept { return 2 * _m; }
        int period() const noexcept { return 2 * _b; }

        std::span<const int> offsets() const noexcept { return _offsets; }
        int offset(int position) const { return _offsets.at(position); }
        int offset_of_vertex(int vertex) const { return _offsets[vertex % period()]; }

        auto operator<=>(const OffsetPattern &) const = default;
        bool operator==(const OffsetPattern &) const = default;

    private:
        friend OffsetPattern validate_pattern(int, int, std::span<const long long>);

        OffsetPattern(int m, int b, std::vector<int> offsets) :
            _m(m), _b(b), _offsets(std::move(offsets))
        {
        }

        int _m;
        int _b;
        std::vector<int> _offsets;
    };

    /// Normalizes offsets mod 2m and checks every structural constraint.
    /// Throws one of the PatternError subclasses above.
    auto validate_pattern(int m, int b, std::span<const long long> offsets) -> OffsetPattern;
    auto validate_pattern(int m, int b, std::span<const int> offsets) -> OffsetPattern;
    auto validate_pattern(int m, int b, std::initializer_list<long long> offsets) -> OffsetPattern;

    /// Explicit adjacency of an expanded pattern; vertices are 0-based here,
    /// neighbours stored as {previous on cycle, next on cycle, chord}.
    struct ExpandedGraph
    {
        int order = 0;
        std::vector<std::array<int, 3>> adjacency;

        auto edge_count() const -> std::size_t;
        auto is_cubic_simple() const -> bool;
        auto is_parity_bipartite() const -> bool;
        auto has_labelled_hamiltonian_cycle() const -> bool;
    };

    auto expand(const OffsetPattern & pattern) -> ExpandedGraph;

    /// Every b' dividing m such that the periodically extended offset
    /// sequence repeats with period 2b'. Always contains m.
    auto derived_symmetry_factors(const OffsetPattern & pattern) -> std::set<int>;

    /// Smallest p such that offsets repeat with period p (p divides 2b).
    auto minimal_period(const OffsetPattern & pattern) -> int;

    /// Relabellings of the Hamiltonian cycle that preserve the pattern
    /// structure: start the cycle `shift` vertices later, then optionally
    /// traverse it in the opposite direction.
    struct PatternTransform
    {
        int shift = 0;
        bool reflect = false;

        auto apply(const OffsetPattern & pattern) const -> OffsetPattern;
        auto then(const PatternTransform & next, int period) const -> PatternTransform;
    };

    /// Lexicographically smallest member of the orbit under all 2b shifts and
    /// reflection.
    auto canonical_form(const OffsetPattern & pattern) -> OffsetPattern;

    /// Offsets as 1-based text "o1 o2 ...".
    auto format_offsets(const OffsetPattern & pattern) -> std::string;
}
