#include "hbg/catalog.hpp"

#include "hbg/girth.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hbg
{
    ParseError::ParseError(const std::string & source, int line, const std::string & what) :
        std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        _line(line)
    {
    }

    namespace
    {
        struct Line
        {
            int number = 0;
            std::string key;
            std::vector<std::string> args;
            std::string rest;
        };

        // Splits into non-blank lines of whitespace-separated tokens.
        auto tokenize(const std::string & text) -> std::vector<Line>
        {
            std::vector<Line> lines;
            std::istringstream in(text);
            std::string raw;
            int number = 0;
            while (std::getline(in, raw)) {
                ++number;
                if (! raw.empty() && raw.back() == '\r')
                    raw.pop_back();
                std::istringstream words(raw);
                Line line;
                line.number = number;
                if (! (words >> line.key))
                    continue;
                auto after = raw.find(line.key) + line.key.size();
                if (after < raw.size() && raw[after] == ' ')
                    line.rest = raw.substr(after + 1);
                std::string word;
                while (words >> word)
                    line.args.push_back(word);
                lines.push_back(std::move(line));
            }
            return lines;
        }

        template <typename Int>
        auto to_int(const std::string & word, const std::string & source, int line) -> Int
        {
            Int value{};
            auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || end != word.data() + word.size())
                throw ParseError(source, line, "expected an integer, got '" + word + "'");
            return value;
        }

        auto single_int(const Line & line, const std::string & source) -> long long
        {
            if (line.args.size() != 1)
                throw ParseError(source, line.number, "'" + line.key + "' takes exactly one integer");
            return to_int<long long>(line.args[0], source, line.number);
        }

        auto int_field(const Line & line, const std::string & source) -> int
        {
            auto value = single_int(line, source);
            if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
                throw ParseError(source, line.number, "value out of range");
            return static_cast<int>(value);
        }

        auto expect_magic(const std::vector<Line> & lines, std::string_view magic, const std::string & source) -> void
        {
            if (lines.empty())
                throw ParseError(source, 1, "empty input");
            auto & first = lines.front();
            std::string joined = first.key;
            for (auto & a : first.args)
                joined += " " + a;
            if (joined != magic)
                throw ParseError(source, first.number, "expected header '" + std::string(magic) + "', got '" + joined + "'");
        }

        auto join(const std::vector<int> & values) -> std::string
        {
            std::string out;
            for (std::size_t k = 0; k < values.size(); ++k) {
                if (k)
                    out += ' ';
                out += std::to_string(values[k]);
            }
            return out;
        }

        auto depth_line(int k, const DepthCounters & d) -> std::string
        {
            std::ostringstream out;
            out << "depth " << k + 1 << " candidates " << d.candidates << " nodes " << d.nodes << " matching "
                << d.rejected_matching << " girth " << d.rejected_girth << " symmetry " << d.rejected_symmetry << '\n';
            return out.str();
        }

        auto parse_depth(const Line & line, const std::string & source) -> std::pair<int, DepthCounters>
        {
            static const std::vector<std::string> names{"candidates", "nodes", "matching", "girth", "symmetry"};
            if (line.args.size() != 1 + 2 * names.size())
                throw ParseError(source, line.number, "malformed depth line");
            int depth = to_int<int>(line.args[0], source, line.number);
            std::uint64_t values[5];
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (line.args[1 + 2 * k] != names[k])
                    throw ParseError(source, line.number, "expected '" + names[k] + "' in depth line");
                values[k] = to_int<std::uint64_t>(line.args[2 + 2 * k], source, line.number);
            }
            return {depth, DepthCounters{values[0], values[1], values[2], values[3], values[4]}};
        }

        auto on_off(const Line & line, const std::string & source) -> bool
        {
            if (line.args.size() == 1 && line.args[0] == "on")
                return true;
            if (line.args.size() == 1 && line.args[0] == "off")
                return false;
            throw ParseError(source, line.number, "expected 'on' or 'off'");
        }

        auto collect_depths(std::vector<std::pair<int, DepthCounters>> & parsed, const std::string & source, int line) -> SearchCounters
        {
            SearchCounters counters;
            for (std::size_t k = 0; k < parsed.size(); ++k) {
                if (parsed[k].first != static_cast<int>(k) + 1)
                    throw ParseError(source, line, "depth lines out of order");
                counters.depths.push_back(parsed[k].second);
            }
            return counters;
        }
    }

    auto serialize_entry(const CatalogEntry & entry) -> std::string
    {
        std::ostringstream out;
        out << witness_magic << '\n';
        out << "g " << entry.girth << '\n';
        out << "n " << entry.order << '\n';
        out << "b " << entry.b << '\n';
        out << "offsets";
        for (auto d : entry.offsets)
            out << ' ' << d;
        out << '\n';
        if (! entry.note.empty())
            out << "note " << entry.note << '\n';
        return out.str();
    }

    auto parse_entry(const std::string & text, const std::string & source) -> CatalogEntry
    {
        auto lines = tokenize(text);
        expect_magic(lines, witness_magic, source);

        CatalogEntry entry;
        std::set<std::string> seen;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto & line = lines[k];
            if (! seen.insert(line.key).second)
                throw ParseError(source, line.number, "duplicate key '" + line.key + "'");
            if (line.key == "g")
                entry.girth = int_field(line, source);
            else if (line.key == "n")
                entry.order = int_field(line, source);
            else if (line.key == "b")
                entry.b = int_field(line, source);
            else if (line.key == "offsets") {
                if (line.args.empty())
                    throw ParseError(source, line.number, "'offsets' needs at least one value");
                for (auto & word : line.args)
                    entry.offsets.push_back(to_int<long long>(word, source, line.number));
            }
            else if (line.key == "note") {
                if (line.rest.empty())
                    throw ParseError(source, line.number, "'note' needs text");
                entry.note = line.rest;
            }
            else
                throw ParseError(source, line.number, "unknown key '" + line.key + "'");
        }
        for (auto key : {"g", "n", "b", "offsets"})
            if (! seen.contains(key))
                throw ParseError(source, lines.back().number, std::string("missing key '") + key + "'");
        return entry;
    }

    auto entry_from_pattern(const OffsetPattern & pattern, int girth, std::string note) -> CatalogEntry
    {
        CatalogEntry entry;
        entry.girth = girth;
        entry.order = pattern.order();
        entry.b = pattern.b();
        entry.offsets.assign(pattern.offsets().begin(), pattern.offsets().end());
        entry.note = std::move(note);
        return entry;
    }

    auto serialize_certificate(const ExhaustionCertificate & cert) -> std::string
    {
        std::ostringstream out;
        out << certificate_magic << '\n';
        out << "g " << cert.girth << '\n';
        out << "n " << cert.order << '\n';
        out << "b " << cert.b << '\n';
        out << "reduction " << (cert.symmetry_reduction ? "on" : "off") << '\n';
        out << "engine " << cert.engine << '\n';
        out << "free " << join(cert.free_positions) << '\n';
        for (std::size_t k = 0; k < cert.counters.depths.size(); ++k)
            out << depth_line(static_cast<int>(k), cert.counters.depths[k]);
        out << "witnesses " << cert.witnesses << '\n';
        return out.str();
    }

    auto parse_certificate(const std::string & text, const std::string & source) -> ExhaustionCertificate
    {
        auto lines = tokenize(text);
        expect_magic(lines, certificate_magic, source);

        ExhaustionCertificate cert;
        std::set<std::string> seen;
        std::vector<std::pair<int, DepthCounters>> depths;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto & line = lines[k];
            if (line.key != "depth" && ! seen.insert(line.key).second)
                throw ParseError(source, line.number, "duplicate key '" + line.key + "'");
            if (line.key == "g")
                cert.girth = int_field(line, source);
            else if (line.key == "n")
                cert.order = int_field(line, source);
            else if (line.key == "b")
                cert.b = int_field(line, source);
            else if (line.key == "reduction")
                cert.symmetry_reduction = on_off(line, source);
            else if (line.key == "engine") {
                if (line.args.size() != 1)
                    throw ParseError(source, line.number, "'engine' takes one tag");
                cert.engine = line.args[0];
            }
            else if (line.key == "free") {
                cert.free_positions.clear();
                for (auto & word : line.args)
                    cert.free_positions.push_back(to_int<int>(word, source, line.number));
            }
            else if (line.key == "depth")
                depths.push_back(parse_depth(line, source));
            else if (line.key == "witnesses")
                cert.witnesses = to_int<std::uint64_t>(line.args.size() == 1 ? line.args[0] : "", source, line.number);
            else
                throw ParseError(source, line.number, "unknown key '" + line.key + "'");
        }
        for (auto key : {"g", "n", "b", "reduction", "engine", "free", "witnesses"})
            if (! seen.contains(key))
                throw ParseError(source, lines.back().number, std::string("missing key '") + key + "'");
        cert.counters = collect_depths(depths, source, lines.back().number);
        return cert;
    }

    auto serialize_resume(const ResumeState & state) -> std::string
    {
        std::ostringstream out;
        out << resume_magic << '\n';
        out << "g " << state.girth << '\n';
        out << "b " << state.b << '\n';
        out << "mode " << to_string(state.mode) << '\n';
        out << "reduction " << (state.symmetry_reduction ? "on" : "off") << '\n';
        out << "orders " << join(state.orders) << '\n';
        out << "labelled " << state.labelled_count << '\n';
        for (std::size_t k = 0; k < state.counters.depths.size(); ++k)
            out << depth_line(static_cast<int>(k), state.counters.depths[k]);
        for (auto & w : state.witnesses)
            out << "witness " << join(w) << '\n';
        for (auto & shard : state.shards) {
            out << "shard " << shard.lo << ' ' << shard.hi;
            if (! shard.cursor.empty())
                out << " at " << join(shard.cursor);
            out << '\n';
        }
        return out.str();
    }

    auto parse_resume(const std::string & text, const std::string & source) -> ResumeState
    {
        auto lines = tokenize(text);
        expect_magic(lines, resume_magic, source);

        ResumeState state;
        std::set<std::string> seen;
        std::vector<std::pair<int, DepthCounters>> depths;
        bool in_shards = false;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto & line = lines[k];
            if (in_shards && line.key != "shard")
                throw ParseError(source, line.number, "only shard lines may follow the first shard line");
            if (line.key != "depth" && line.key != "witness" && line.key != "shard" && ! seen.insert(line.key).second)
                throw ParseError(source, line.number, "duplicate key '" + line.key + "'");

            if (line.key == "g")
                state.girth = int_field(line, source);
            else if (line.key == "b")
                state.b = int_field(line, source);
            else if (line.key == "mode") {
                auto mode = line.args.size() == 1 ? parse_search_mode(line.args[0]) : std::nullopt;
                if (! mode)
                    throw ParseError(source, line.number, "unknown search mode");
                state.mode = *mode;
            }
            else if (line.key == "reduction")
                state.symmetry_reduction = on_off(line, source);
            else if (line.key == "orders") {
                if (line.args.empty())
                    throw ParseError(source, line.number, "'orders' needs at least one order");
                for (auto & word : line.args)
                    state.orders.push_back(to_int<int>(word, source, line.number));
            }
            else if (line.key == "labelled")
                state.labelled_count = to_int<std::uint64_t>(line.args.size() == 1 ? line.args[0] : "", source, line.number);
            else if (line.key == "depth")
                depths.push_back(parse_depth(line, source));
            else if (line.key == "witness") {
                std::vector<int> offsets;
                for (auto & word : line.args)
                    offsets.push_back(to_int<int>(word, source, line.number));
                state.witnesses.push_back(std::move(offsets));
            }
            else if (line.key == "shard") {
                in_shards = true;
                if (line.args.size() < 2 || line.args.size() == 3 || (line.args.size() > 3 && line.args[2] != "at"))
                    throw ParseError(source, line.number, "expected 'shard <lo> <hi> [at <v>...]'");
                ShardRange shard;
                shard.lo = to_int<int>(line.args[0], source, line.number);
                shard.hi = to_int<int>(line.args[1], source, line.number);
                for (std::size_t a = 3; a < line.args.size(); ++a)
                    shard.cursor.push_back(to_int<int>(line.args[a], source, line.number));
                if (shard.lo > shard.hi || (! shard.cursor.empty() && (shard.cursor[0] < shard.lo || shard.cursor[0] > shard.hi)))
                    throw ParseError(source, line.number, "shard range or cursor out of order");
                state.shards.push_back(std::move(shard));
            }
            else
                throw ParseError(source, line.number, "unknown key '" + line.key + "'");
        }
        for (auto key : {"g", "b", "mode", "reduction", "orders", "labelled"})
            if (! seen.contains(key))
                throw ParseError(source, lines.back().number, std::string("missing key '") + key + "'");
        state.counters = collect_depths(depths, source, lines.back().number);
        if (! state.counters.depths.empty() && std::cmp_not_equal(state.counters.depths.size(), state.b))
            throw ParseError(source, lines.back().number, "depth lines do not match b");
        if (state.counters.depths.empty())
            state.counters = SearchCounters::for_depth(state.b);
        return state;
    }

    auto serialize_outcome(const SearchSpec & spec, const SearchOutcome & outcome) -> std::string
    {
        std::ostringstream out;
        out << outcome_magic << '\n';
        out << "g " << spec.girth << '\n';
        out << "b " << spec.b << '\n';
        out << "mode " << to_string(spec.mode) << '\n';
        out << "reduction " << (spec.symmetry_reduction ? "on" : "off") << '\n';
        for (auto & result : outcome.orders) {
            out << "order " << result.order << ' ' << to_string(result.status);
            if (result.status != OrderStatus::undecided && spec.mode != SearchMode::first_witness
                    && spec.mode != SearchMode::prove_nonexistence)
                out << " canonical " << result.canonical_count << " labelled " << result.labelled_count;
            out << '\n';
            if (result.status == OrderStatus::witness)
                for (auto & w : result.witnesses) {
                    out << "witness " << result.order << ' ' << format_offsets(w.pattern) << " girth " << w.measured_girth;
                    if (w.surplus())
                        out << " surplus";
                    out << '\n';
                }
        }
        if (outcome.minimal_order)
            out << "minimal " << *outcome.minimal_order << '\n';
        else
            out << "minimal none\n";
        if (outcome.budget_exceeded())
            out << "budget exceeded\n";
        return out.str();
    }

    auto read_text_file(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (! out)
            throw std::runtime_error("cannot write " + path.string());
        out << text;
        if (! out)
            throw std::runtime_error("write failed for " + path.string());
    }

    auto moore_floor(int girth) -> long long
    {
        if (girth < 4 || girth % 2 != 0 || girth > 120)
            throw std::invalid_argument("Moore floor needs an even girth in 4..120");
        return 2 * ((1LL << (girth / 2)) - 1);
    }

    auto LowerBoundConfig::defaults() -> LowerBoundConfig
    {
        LowerBoundConfig config;
        config.set(14, 258);
        return config;
    }

    auto LowerBoundConfig::moore_only() -> LowerBoundConfig
    {
        return LowerBoundConfig{};
    }

    auto LowerBoundConfig::set(int girth, long long bound) -> void
    {
        if (bound < moore_floor(girth))
            throw std::invalid_argument("bound " + std::to_string(bound) + " for girth " + std::to_string(girth)
                    + " is below the Moore floor " + std::to_string(moore_floor(girth)));
        _overrides[girth] = bound;
    }

    auto LowerBoundConfig::bound(int girth) const -> long long
    {
        if (auto found = _overrides.find(girth); found != _overrides.end())
            return found->second;
        return moore_floor(girth);
    }

    auto LowerBoundConfig::load_overrides(const std::string & text, const std::string & source) -> void
    {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream words(raw);
            std::vector<std::string> tokens;
            for (std::string w; words >> w;)
                tokens.push_back(w);
            if (tokens.empty())
                continue;
            if (tokens.size() != 2)
                throw ParseError(source, number, "expected 'girth bound'");
            int girth = to_int<int>(tokens[0], source, number);
            auto value = to_int<long long>(tokens[1], source, number);
            try {
                set(girth, value);
            }
            catch (const std::invalid_argument & e) {
                throw ParseError(source, number, e.what());
            }
        }
    }

    auto lower_bound_order(int girth, int b, const LowerBoundConfig & config) -> long long
    {
        if (b < 1)
            throw std::invalid_argument("symmetry factor must be positive");
        const long long step = 2LL * b;
        const long long floor = config.bound(girth);
        return (floor + step - 1) / step * step;
    }

    auto VerificationReport::passed() const -> bool
    {
        return ! checks.empty() && std::all_of(checks.begin(), checks.end(), [](auto & c) { return c.passed; });
    }

    auto VerificationReport::first_failure() const -> std::string
    {
        for (auto & c : checks)
            if (! c.passed)
                return c.detail;
        return {};
    }

    auto VerificationReport::format() const -> std::string
    {
        std::ostringstream out;
        for (auto & c : checks)
            out << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        if (passed())
            out << "PASS girth=" << *measured_girth << '\n';
        else
            out << "FAIL " << first_failure() << '\n';
        return out.str();
    }

    auto verify_witness(const CatalogEntry & entry) -> VerificationReport
    {
        VerificationReport report;
        auto add = [&](std::string name, bool ok, std::string detail) {
            report.checks.push_back({std::move(name), ok, std::move(detail)});
            return ok;
        };

        if (! add("girth-claim", entry.girth >= 4 && entry.girth % 2 == 0,
                    "claimed girth " + std::to_string(entry.girth) + (entry.girth >= 4 && entry.girth % 2 == 0 ? "" : " is not an even integer >= 4")))
            return report;
        if (! add("order", entry.order >= 6 && entry.order % 2 == 0,
                    "order " + std::to_string(entry.order) + (entry.order >= 6 && entry.order % 2 == 0 ? "" : " is not an even integer >= 6")))
            return report;

        const int m = entry.order / 2;
        std::optional<OffsetPattern> pattern;
        try {
            pattern = validate_pattern(m, entry.b, std::span<const long long>{entry.offsets});
            add("pattern", true, "offsets " + format_offsets(*pattern));
        }
        catch (const PatternError & e) {
            add("pattern", false, e.what());
            return report;
        }

        auto graph = expand(*pattern);
        const bool structure = graph.is_cubic_simple() && graph.is_parity_bipartite() && graph.has_labelled_hamiltonian_cycle();
        if (! add("expansion", structure, structure ? "cubic, simple, bipartite, Hamiltonian" : "expanded graph is malformed"))
            return report;

        auto measured = girth_oracle(graph, entry.order);
        report.measured_girth = measured.value;
        if (! measured.value) {
            add("girth", false, "no cycle found");
            return report;
        }
        const int girth = *measured.value;
        add("girth", girth >= entry.girth,
                girth >= entry.girth ? "measured girth " + std::to_string(girth)
                                     : "girth " + std::to_string(girth) + " < " + std::to_string(entry.girth));

        report.symmetry_factors = derived_symmetry_factors(*pattern);
        std::string factors;
        for (int f : report.symmetry_factors)
            factors += (factors.empty() ? "" : ",") + std::to_string(f);
        const bool has_b = report.symmetry_factors.contains(entry.b);
        add("symmetry", has_b, "derived factors {" + factors + "}" + (has_b ? "" : " exclude b=" + std::to_string(entry.b)));
        return report;
    }

    auto to_string(BoundStatus status) -> std::string
    {
        switch (status) {
            case BoundStatus::not_exist: return "not-exist";
            case BoundStatus::resolved: return "resolved";
            case BoundStatus::improved: return "improved";
            case BoundStatus::open: return "open";
        }
        return "?";
    }

    auto bounds_table(int girth, const std::vector<int> & bs, const LowerBoundConfig & config,
            const std::vector<BoundsEvidence> & evidence) -> std::vector<BoundsRow>
    {
        std::vector<BoundsRow> rows;
        for (int b : bs) {
            BoundsRow row;
            row.b = b;
            row.lb = lower_bound_order(girth, b, config);
            row.lower = row.lb;

            auto found = std::find_if(evidence.begin(), evidence.end(), [b](auto & e) { return e.b == b; });
            if (found != evidence.end()) {
                auto & e = *found;
                row.evidence = ! e.exhausted_orders.empty() || ! e.witness_orders.empty();
                // proven lower bound: walk up from lb through consecutive exhausted orders
                while (e.exhausted_orders.contains(static_cast<int>(row.lower)))
                    row.lower += 2LL * b;
                for (int order : e.witness_orders)
                    if (order >= row.lb && (! row.upper || order < *row.upper))
                        row.upper = order;
                if (e.claimed_lower && *e.claimed_lower > row.lower) {
                    row.lower = *e.claimed_lower;
                    row.lower_claimed = true;
                }
                if (e.claimed_upper && (! row.upper || *e.claimed_upper < *row.upper)) {
                    row.upper = *e.claimed_upper;
                    row.upper_claimed = true;
                }
            }

            if (row.upper && *row.upper == row.lower)
                row.status = BoundStatus::resolved;
            else if (! row.upper && row.lower > row.lb)
                row.status = BoundStatus::not_exist;
            else if (row.lower > row.lb)
                row.status = BoundStatus::improved;
            else
                row.status = BoundStatus::open;
            rows.push_back(row);
        }
        return rows;
    }

    auto format_table_text(int girth, const std::vector<BoundsRow> & rows) -> std::string
    {
        std::ostringstream out;
        out << "(3, " << girth << ") sub-problem bounds\n";
        out << std::left << std::setw(6) << "b" << std::setw(10) << "lb" << std::setw(10) << "lower" << std::setw(10) << "upper"
            << "status\n";
        bool any_claim = false;
        for (auto & row : rows) {
            auto lower = std::to_string(row.lower) + (row.lower_claimed ? "*" : "");
            auto upper = row.upper ? std::to_string(*row.upper) + (row.upper_claimed ? "*" : "") : std::string("-");
            any_claim = any_claim || row.lower_claimed || row.upper_claimed;
            auto status = row.evidence || row.lower_claimed || row.upper_claimed ? to_string(row.status) : "lb only, open";
            out << std::left << std::setw(6) << row.b << std::setw(10) << row.lb << std::setw(10) << lower << std::setw(10) << upper
                << status << '\n';
        }
        if (any_claim)
            out << "* unverified claim\n";
        return out.str();
    }

    auto format_table_machine(int girth, const std::vector<BoundsRow> & rows) -> std::string
    {
        std::ostringstream out;
        for (auto & row : rows) {
            out << "row g " << girth << " b " << row.b << " lb " << row.lb << " lower " << row.lower << " upper ";
            if (row.upper)
                out << *row.upper;
            else
                out << '-';
            out << " status " << to_string(row.status) << " lower_source " << (row.lower_claimed ? "claimed" : "search")
                << " upper_source " << (row.upper ? (row.upper_claimed ? "claimed" : "search") : "none") << '\n';
        }
        return out.str();
    }

    auto non_existence_report(int girth, int b, const std::vector<ExhaustionCertificate> & certificates,
            const std::vector<int> & required) -> NonExistenceReport
    {
        NonExistenceReport report{girth, b, {}};
        std::set<int> orders;
        for (auto & cert : certificates) {
            if (cert.girth != girth || cert.b != b)
                throw ReportError("certificate for order " + std::to_string(cert.order) + " belongs to g=" + std::to_string(cert.girth)
                        + " b=" + std::to_string(cert.b));
            if (auto problem = cert.check(); ! problem.empty())
                throw ReportError("certificate for order " + std::to_string(cert.order) + " is inconsistent: " + problem);
            if (cert.witnesses != 0)
                throw ReportError("certificate for order " + std::to_string(cert.order) + " records "
                        + std::to_string(cert.witnesses) + " witnesses");
            orders.insert(cert.order);
        }
        for (int order : required)
            if (! orders.contains(order))
                throw ReportError("missing certificate for order " + std::to_string(order));
        report.orders.assign(orders.begin(), orders.end());
        return report;
    }

    auto format_report_text(const NonExistenceReport & report) -> std::string
    {
        std::ostringstream out;
        out << "b " << report.b << ": ";
        for (std::size_t k = 0; k < report.orders.size(); ++k)
            out << (k ? ", " : "") << report.orders[k];
        out << '\n';
        return out.str();
    }

    auto format_report_machine(const NonExistenceReport & report) -> std::string
    {
        std::ostringstream out;
        out << "nonexistence g " << report.girth << " b " << report.b << " orders";
        for (int order : report.orders)
            out << ' ' << order;
        out << '\n';
        return out.str();
    }
}
