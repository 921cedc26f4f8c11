#include "hbg/catalog.hpp"
#include "hbg/girth.hpp"
#include "hbg/pattern.hpp"
#include "hbg/render.hpp"
#include "hbg/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace hbg;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_fail = 1;
    constexpr int exit_budget = 2;

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto first_line(const std::string & text) -> std::string
    {
        auto line = text.substr(0, text.find('\n'));
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }

    auto sorted_files(const std::vector<std::string> & dirs) -> std::vector<fs::path>
    {
        std::vector<fs::path> files;
        for (auto & dir : dirs) {
            if (! fs::is_directory(dir))
                throw UsageError("not a directory: " + dir);
            for (auto & item : fs::directory_iterator(dir))
                if (item.is_regular_file())
                    files.push_back(item.path());
        }
        std::sort(files.begin(), files.end());
        return files;
    }

    auto parse_int_list(const std::string & text) -> std::vector<int>
    {
        // "3,4,7" or "3-16" or a mix
        std::vector<int> values;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto dash = item.find('-');
            try {
                if (dash == std::string::npos)
                    values.push_back(std::stoi(item));
                else
                    for (int v = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1)); v <= hi; ++v)
                        values.push_back(v);
            }
            catch (const std::exception &) {
                throw UsageError("bad integer list '" + text + "'");
            }
        }
        return values;
    }

    auto load_bounds(const std::string & path) -> LowerBoundConfig
    {
        auto config = LowerBoundConfig::defaults();
        if (! path.empty())
            config.load_overrides(read_text_file(path), path);
        return config;
    }

    struct SearchArgs
    {
        int girth = 0;
        int sym = 0;
        int min = 0;
        int max = 0;
        int step = 2;
        std::string mode = "first";
        int shards = 1;
        std::uint64_t node_budget = 0;
        double time_budget = 0;
        std::string resume;
        std::string out = "hbg-out";
        bool reduce = false;
    };

    auto witness_name(int girth, int b, int order, std::size_t index, std::size_t count) -> std::string
    {
        auto name = "witness-g" + std::to_string(girth) + "-b" + std::to_string(b) + "-n" + std::to_string(order);
        if (count > 1)
            name += "-" + std::to_string(index + 1);
        return name + ".hbg";
    }

    auto cmd_search(const SearchArgs & args) -> int
    {
        SearchBudget budget;
        if (args.node_budget > 0)
            budget.nodes = args.node_budget;
        if (args.time_budget > 0)
            budget.wall = std::chrono::milliseconds(static_cast<long long>(args.time_budget * 1000));
        if (args.shards < 1)
            throw UsageError("--shards must be positive");

        SearchSpec spec;
        std::optional<ResumeState> resume;
        if (! args.resume.empty()) {
            resume = parse_resume(read_text_file(args.resume), args.resume);
            spec = spec_from_resume(*resume, budget, args.shards);
        }
        else {
            if (args.girth < 4 || args.girth % 2 != 0)
                throw UsageError("--girth must be an even integer >= 4");
            if (args.sym < 1)
                throw UsageError("--sym must be positive");
            if (args.min > args.max || args.step < 1)
                throw UsageError("need --min <= --max and --step >= 1");
            auto mode = parse_search_mode(args.mode);
            if (! mode)
                throw UsageError("--mode must be one of first, all, count, prove");

            spec.girth = args.girth;
            spec.b = args.sym;
            spec.mode = *mode;
            spec.budget = budget;
            spec.shards = args.shards;
            spec.symmetry_reduction = args.reduce;
            for (int order = args.min; order <= args.max; order += args.step)
                if (order >= 6 && order % 2 == 0 && (order / 2) % args.sym == 0)
                    spec.orders.push_back(order);
            if (spec.orders.empty())
                throw UsageError("b=" + std::to_string(args.sym) + " does not divide m=order/2 for any even order >= 6 in ["
                        + std::to_string(args.min) + ", " + std::to_string(args.max) + "]");
        }

        try {
            check_spec(spec);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        fs::create_directories(args.out);
        const fs::path out{args.out};

        std::cerr << "search g=" << spec.girth << " b=" << spec.b << " mode=" << to_string(spec.mode) << " orders "
                  << spec.orders.front() << ".." << spec.orders.back() << " (" << spec.orders.size() << ")" << std::endl;

        auto outcome = min_order(spec, resume ? &*resume : nullptr);

        std::ostringstream timing;
        for (auto & result : outcome.orders) {
            std::cerr << "  order " << result.order << ": " << to_string(result.status) << " nodes "
                      << result.counters.total().nodes << " (" << result.wall_seconds << " s)" << std::endl;
            timing << "order " << result.order << " seconds " << result.wall_seconds << '\n';

            if (result.certificate) {
                auto name = "cert-g" + std::to_string(spec.girth) + "-b" + std::to_string(spec.b) + "-n" + std::to_string(result.order) + ".txt";
                auto text = serialize_certificate(*result.certificate);
                parse_certificate(text, name);
                write_text_file(out / name, text);
            }
            if (result.status == OrderStatus::witness)
                for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
                    auto & w = result.witnesses[k];
                    auto note = "found by " + std::string(engine_version) + ", measured girth " + std::to_string(w.measured_girth);
                    if (w.surplus())
                        note += " (girth-surplus over " + std::to_string(spec.girth) + ")";
                    auto text = serialize_entry(entry_from_pattern(w.pattern, spec.girth, note));
                    parse_entry(text);
                    write_text_file(out / witness_name(spec.girth, spec.b, result.order, k, result.witnesses.size()), text);
                }
        }

        auto summary = serialize_outcome(spec, outcome);
        write_text_file(out / "outcome.txt", summary);
        write_text_file(out / "timing.txt", timing.str());
        std::cout << summary;

        const auto resume_path = out / "resume.txt";
        if (outcome.resume) {
            auto text = serialize_resume(*outcome.resume);
            parse_resume(text);
            write_text_file(resume_path, text);
            std::cerr << "budget exceeded; resume with: hbg search --resume " << resume_path.string() << std::endl;
            return exit_budget;
        }
        if (! args.resume.empty() && fs::exists(resume_path) && fs::equivalent(resume_path, args.resume))
            fs::remove(resume_path);
        return exit_ok;
    }

    auto cmd_verify(const std::string & file, bool replay) -> int
    {
        auto text = read_text_file(file);
        auto magic = first_line(text);

        if (magic == certificate_magic) {
            auto cert = parse_certificate(text, file);
            if (auto problem = cert.check(); ! problem.empty()) {
                std::cout << "FAIL certificate " << problem << '\n';
                return exit_fail;
            }
            if (replay) {
                SearchSpec spec;
                spec.girth = cert.girth;
                spec.b = cert.b;
                spec.orders = {cert.order};
                spec.mode = cert.witnesses == 0 ? SearchMode::prove_nonexistence : SearchMode::count_only;
                spec.symmetry_reduction = cert.symmetry_reduction;
                auto rerun = enumerate(spec, cert.order);
                if (! rerun.certificate || rerun.certificate->counters != cert.counters || rerun.certificate->witnesses != cert.witnesses) {
                    std::cout << "FAIL certificate replay disagrees with recorded counts\n";
                    return exit_fail;
                }
            }
            std::cout << "PASS certificate g=" << cert.girth << " b=" << cert.b << " n=" << cert.order << " witnesses=" << cert.witnesses
                      << (replay ? " (replayed)" : "") << '\n';
            return exit_ok;
        }

        auto entry = parse_entry(text, file);
        auto report = verify_witness(entry);
        std::cout << report.format();
        return report.passed() ? exit_ok : exit_fail;
    }

    auto load_pattern(const std::string & file) -> std::pair<CatalogEntry, OffsetPattern>
    {
        auto entry = parse_entry(read_text_file(file), file);
        if (entry.order % 2 != 0)
            throw PatternError(file + ": order " + std::to_string(entry.order) + " is odd");
        try {
            return {entry, validate_pattern(entry.order / 2, entry.b, std::span<const long long>{entry.offsets})};
        }
        catch (const PatternError & e) {
            throw PatternError(file + ": " + e.what());
        }
    }

    auto cmd_girth(const std::string & file, int cap, bool oracle) -> int
    {
        auto [entry, pattern] = load_pattern(file);
        const int limit = cap > 0 ? cap : pattern.order();
        auto result = oracle ? girth_oracle(expand(pattern), limit) : girth_fast(pattern, limit);
        if (result.value)
            std::cout << "girth " << *result.value << '\n';
        else
            std::cout << "girth > " << limit << '\n';
        return exit_ok;
    }

    auto cmd_canon(const std::string & file, bool in_place) -> int
    {
        auto [entry, pattern] = load_pattern(file);
        auto canonical = canonical_form(pattern);
        auto rewritten = entry;
        rewritten.offsets.assign(canonical.offsets().begin(), canonical.offsets().end());
        auto text = serialize_entry(rewritten);
        if (in_place)
            write_text_file(file, text);
        std::cout << text;
        return exit_ok;
    }

    struct TableArgs
    {
        int girth = 0;
        std::string syms;
        std::vector<std::string> dirs;
        std::string bounds;
        std::string claims;
        bool machine = false;
    };

    auto cmd_table(const TableArgs & args) -> int
    {
        auto config = load_bounds(args.bounds);
        auto bs = parse_int_list(args.syms);
        if (bs.empty() || std::any_of(bs.begin(), bs.end(), [](int b) { return b < 1; }))
            throw UsageError("--sym-list needs positive symmetry factors");

        std::vector<BoundsEvidence> evidence;
        for (int b : bs)
            evidence.push_back(BoundsEvidence{b, {}, {}, {}, {}});
        auto slot = [&](int b) -> BoundsEvidence * {
            for (auto & e : evidence)
                if (e.b == b)
                    return &e;
            return nullptr;
        };

        for (auto & path : sorted_files(args.dirs)) {
            auto text = read_text_file(path);
            auto magic = first_line(text);
            if (magic == certificate_magic) {
                auto cert = parse_certificate(text, path.string());
                if (cert.girth == args.girth && cert.backs_nonexistence())
                    if (auto e = slot(cert.b))
                        e->exhausted_orders.insert(cert.order);
            }
            else if (magic == witness_magic) {
                auto entry = parse_entry(text, path.string());
                auto report = verify_witness(entry);
                if (! report.measured_girth || ! report.passed() || *report.measured_girth < args.girth)
                    continue;
                for (int b : report.symmetry_factors)
                    if (auto e = slot(b))
                        e->witness_orders.insert(entry.order);
            }
        }

        if (! args.claims.empty()) {
            // lines "b lower upper"; '-' for unknown
            std::istringstream in(read_text_file(args.claims));
            std::string raw;
            int number = 0;
            while (std::getline(in, raw)) {
                ++number;
                if (auto hash = raw.find('#'); hash != std::string::npos)
                    raw.erase(hash);
                std::istringstream words(raw);
                std::string b, lower, upper;
                if (! (words >> b))
                    continue;
                if (! (words >> lower >> upper))
                    throw ParseError(args.claims, number, "expected 'b lower upper'");
                try {
                    if (auto e = slot(std::stoi(b))) {
                        if (lower != "-")
                            e->claimed_lower = std::stoi(lower);
                        if (upper != "-")
                            e->claimed_upper = std::stoi(upper);
                    }
                }
                catch (const std::logic_error &) {
                    throw ParseError(args.claims, number, "expected integers or '-'");
                }
            }
        }

        auto rows = bounds_table(args.girth, bs, config, evidence);
        std::cout << (args.machine ? format_table_machine(args.girth, rows) : format_table_text(args.girth, rows));
        return exit_ok;
    }

    struct ReportArgs
    {
        int girth = 0;
        int sym = 0;
        std::vector<std::string> dirs;
        int min = 0;
        int max = 0;
        bool machine = false;
    };

    auto cmd_report(const ReportArgs & args) -> int
    {
        std::vector<ExhaustionCertificate> certs;
        for (auto & path : sorted_files(args.dirs)) {
            auto text = read_text_file(path);
            if (first_line(text) != certificate_magic)
                continue;
            auto cert = parse_certificate(text, path.string());
            if (cert.girth == args.girth && cert.b == args.sym && cert.witnesses == 0)
                certs.push_back(cert);
        }
        std::vector<int> required;
        if (args.max > 0)
            for (int order = args.min; order <= args.max; order += 2)
                if (order >= 6 && (order / 2) % args.sym == 0)
                    required.push_back(order);

        auto report = non_existence_report(args.girth, args.sym, certs, required);
        std::cout << (args.machine ? format_report_machine(report) : format_report_text(report));
        return exit_ok;
    }

    auto cmd_render(const std::string & file, const std::string & output, const RenderStyle & style) -> int
    {
        auto entry = parse_entry(read_text_file(file), file);
        auto svg = render(entry, style);
        if (output.empty() || output == "-")
            std::cout << svg;
        else
            write_text_file(output, svg);
        return exit_ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Search and verify trivalent Hamiltonian bipartite graphs by girth and symmetry factor"};
    app.require_subcommand(1);

    SearchArgs search;
    auto * search_cmd = app.add_subcommand("search", "enumerate offset patterns for a (girth, symmetry factor) sub-problem");
    search_cmd->add_option("--girth", search.girth, "target girth (even)");
    search_cmd->add_option("--sym", search.sym, "symmetry factor b");
    search_cmd->add_option("--min", search.min, "smallest order");
    search_cmd->add_option("--max", search.max, "largest order");
    search_cmd->add_option("--step", search.step, "order step (orders with b not dividing m are skipped)");
    search_cmd->add_option("--mode", search.mode, "first | all | count | prove");
    search_cmd->add_option("--shards", search.shards, "worker threads / first-position shards");
    search_cmd->add_option("--node-budget", search.node_budget, "stop after this many search nodes (0 = unlimited)");
    search_cmd->add_option("--time-budget", search.time_budget, "stop after this many seconds (0 = unlimited)");
    search_cmd->add_option("--resume", search.resume, "continue from a resume file");
    search_cmd->add_option("--out", search.out, "output directory");
    search_cmd->add_flag("--reduce", search.reduce, "restrict to shift-orbit representatives");

    std::string file;
    bool replay = false;
    auto * verify_cmd = app.add_subcommand("verify", "check a witness or certificate file");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_flag("--replay", replay, "re-run the search behind a certificate and compare counts");

    int cap = 0;
    bool oracle = false;
    auto * girth_cmd = app.add_subcommand("girth", "girth of a witness file");
    girth_cmd->add_option("file", file)->required();
    girth_cmd->add_option("--cap", cap, "largest cycle length to look for (default: order)");
    girth_cmd->add_flag("--oracle", oracle, "use the all-roots reference computation");

    bool in_place = false;
    auto * canon_cmd = app.add_subcommand("canon", "rewrite a witness into canonical form");
    canon_cmd->add_option("file", file)->required();
    canon_cmd->add_flag("-i,--in-place", in_place, "overwrite the input file");

    TableArgs table;
    auto * table_cmd = app.add_subcommand("table", "lower and upper bounds per symmetry factor");
    table_cmd->add_option("--girth", table.girth)->required();
    table_cmd->add_option("--sym-list", table.syms, "e.g. 3-16 or 3,4,7")->required();
    table_cmd->add_option("--dir", table.dirs, "directories with certificates and witnesses");
    table_cmd->add_option("--bounds", table.bounds, "lower-bound override file");
    table_cmd->add_option("--claims", table.claims, "unverified 'b lower upper' claims");
    table_cmd->add_flag("--machine", table.machine, "key-value output");

    ReportArgs report;
    auto * report_cmd = app.add_subcommand("report", "orders proven to have no witness");
    report_cmd->add_option("--girth", report.girth)->required();
    report_cmd->add_option("--sym", report.sym)->required()->check(CLI::PositiveNumber);
    report_cmd->add_option("--dir", report.dirs)->required();
    report_cmd->add_option("--min", report.min, "with --max: require a certificate for every order in range");
    report_cmd->add_option("--max", report.max);
    report_cmd->add_flag("--machine", report.machine, "key-value output");

    std::string output;
    RenderStyle style;
    bool plain = false;
    auto * render_cmd = app.add_subcommand("render", "draw a verified witness as SVG");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("-o,--output", output, "SVG path (default stdout)");
    render_cmd->add_option("--radius", style.radius);
    render_cmd->add_flag("--plain", plain, "draw all chords in one colour");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_fail;
    }

    try {
        if (*search_cmd) {
            if (search.resume.empty() && (search_cmd->count("--girth") == 0 || search_cmd->count("--sym") == 0
                        || search_cmd->count("--min") == 0 || search_cmd->count("--max") == 0))
                throw UsageError("search needs --girth, --sym, --min and --max (or --resume)");
            return cmd_search(search);
        }
        if (*verify_cmd)
            return cmd_verify(file, replay);
        if (*girth_cmd)
            return cmd_girth(file, cap, oracle);
        if (*canon_cmd)
            return cmd_canon(file, in_place);
        if (*table_cmd)
            return cmd_table(table);
        if (*report_cmd)
            return cmd_report(report);
        if (*render_cmd) {
            style.colour_chord_classes = ! plain;
            return cmd_render(file, output, style);
        }
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_fail;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_fail;
}
