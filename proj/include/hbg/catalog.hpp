#pragma once

#include "hbg/pattern.hpp"
#include "hbg/search.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbg
{
    /// Malformed input text; the message carries "source:line: ".
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & source, int line, const std::string & what);

        int line() const noexcept { return _line; }

    private:
        int _line;
    };

    /// A stored witness. Offsets are kept exactly as written so that hostile
    /// or unnormalized files survive parsing and fail in verification.
    struct CatalogEntry
    {
        int girth = 0;
        int order = 0;
        int b = 0;
        std::vector<long long> offsets;
        std::string note;
        /// Filled by verify_witness; not persisted.
        std::optional<int> measured_girth;

        bool operator==(const CatalogEntry &) const = default;
    };

    inline constexpr std::string_view witness_magic = "HBG 1";
    inline constexpr std::string_view certificate_magic = "HBG-CERT 1";
    inline constexpr std::string_view resume_magic = "HBG-RESUME 1";
    inline constexpr std::string_view outcome_magic = "HBG-OUTCOME 1";

    auto serialize_entry(const CatalogEntry & entry) -> std::string;
    auto parse_entry(const std::string & text, const std::string & source = "<input>") -> CatalogEntry;
    auto entry_from_pattern(const OffsetPattern & pattern, int girth, std::string note = {}) -> CatalogEntry;

    auto serialize_certificate(const ExhaustionCertificate & cert) -> std::string;
    auto parse_certificate(const std::string & text, const std::string & source = "<input>") -> ExhaustionCertificate;

    auto serialize_resume(const ResumeState & state) -> std::string;
    auto parse_resume(const std::string & text, const std::string & source = "<input>") -> ResumeState;

    /// Deterministic summary of a search run (no timings).
    auto serialize_outcome(const SearchSpec & spec, const SearchOutcome & outcome) -> std::string;

    auto read_text_file(const std::filesystem::path & path) -> std::string;
    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void;

    /// Counting lower bound on the order of a cubic graph of even girth g:
    /// 2(2^(g/2) - 1).
    auto moore_floor(int girth) -> long long;

    /// Best known lower bounds on (3, g) graph orders. Girths without an
    /// override fall back to the Moore floor.
    class LowerBoundConfig
    {
    public:
        /// Moore floors plus the published value for girth 14.
        static auto defaults() -> LowerBoundConfig;
        static auto moore_only() -> LowerBoundConfig;

        /// Lines "girth bound"; '#' starts a comment. Later lines win.
        auto load_overrides(const std::string & text, const std::string & source = "<input>") -> void;
        auto set(int girth, long long bound) -> void;
        auto bound(int girth) const -> long long;

    private:
        std::map<int, long long> _overrides;
    };

    /// Smallest order >= config.bound(g) divisible by 2b.
    auto lower_bound_order(int girth, int b, const LowerBoundConfig & config) -> long long;

    struct VerificationCheck
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct VerificationReport
    {
        std::vector<VerificationCheck> checks;
        std::optional<int> measured_girth;
        std::set<int> symmetry_factors;

        auto passed() const -> bool;
        auto first_failure() const -> std::string;
        auto format() const -> std::string;
    };

    /// Independent check of a stored witness: validation, expansion, the
    /// reference girth and the derived symmetry factors. Does not touch the
    /// search engine or the fast girth path.
    auto verify_witness(const CatalogEntry & entry) -> VerificationReport;

    enum class BoundStatus
    {
        not_exist,
        resolved,
        improved,
        open
    };

    auto to_string(BoundStatus status) -> std::string;

    /// Search evidence for one symmetry factor, plus optional unverified
    /// claims from elsewhere.
    struct BoundsEvidence
    {
        int b = 0;
        std::set<int> exhausted_orders;
        std::set<int> witness_orders;
        std::optional<int> claimed_lower;
        std::optional<int> claimed_upper;
    };

    struct BoundsRow
    {
        int b = 0;
        long long lb = 0;
        long long lower = 0;
        std::optional<long long> upper;
        BoundStatus status = BoundStatus::open;
        bool lower_claimed = false;
        bool upper_claimed = false;
        bool evidence = false;
    };

    auto bounds_table(int girth, const std::vector<int> & bs, const LowerBoundConfig & config,
            const std::vector<BoundsEvidence> & evidence) -> std::vector<BoundsRow>;
    auto format_table_text(int girth, const std::vector<BoundsRow> & rows) -> std::string;
    auto format_table_machine(int girth, const std::vector<BoundsRow> & rows) -> std::string;

    class ReportError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct NonExistenceReport
    {
        int girth = 0;
        int b = 0;
        std::vector<int> orders;
    };

    /// Orders proven empty for (g, b). Throws ReportError for a certificate
    /// that is inconsistent, records witnesses, or belongs to another (g, b),
    /// and for any order in `required` that has no certificate.
    auto non_existence_report(int girth, int b, const std::vector<ExhaustionCertificate> & certificates,
            const std::vector<int> & required = {}) -> NonExistenceReport;
    auto format_report_text(const NonExistenceReport & report) -> std::string;
    auto format_report_machine(const NonExistenceReport & report) -> std::string;
}
