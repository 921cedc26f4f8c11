#include "hbg/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace hbg
{
    auto to_string(SearchMode mode) -> std::string
    {
        switch (mode) {
            case SearchMode::first_witness: return "first";
            case SearchMode::all_witnesses: return "all";
            case SearchMode::count_only: return "count";
            case SearchMode::prove_nonexistence: return "prove";
        }
        return "?";
    }

    auto parse_search_mode(std::string_view text) -> std::optional<SearchMode>
    {
        for (auto mode : {SearchMode::first_witness, SearchMode::all_witnesses, SearchMode::count_only, SearchMode::prove_nonexistence})
            if (text == to_string(mode))
                return mode;
        return std::nullopt;
    }

    auto to_string(OrderStatus status) -> std::string
    {
        switch (status) {
            case OrderStatus::witness: return "witness";
            case OrderStatus::exhausted: return "exhausted";
            case OrderStatus::undecided: return "undecided";
        }
        return "?";
    }

    auto check_spec(const SearchSpec & spec) -> void
    {
        if (spec.girth < 4 || spec.girth % 2 != 0)
            throw std::invalid_argument("girth must be even and at least 4, got " + std::to_string(spec.girth));
        if (spec.b < 1)
            throw std::invalid_argument("symmetry factor must be positive");
        if (spec.shards < 1)
            throw std::invalid_argument("shard count must be positive");
        for (int order : spec.orders) {
            if (order < 6 || order % 2 != 0)
                throw std::invalid_argument("order " + std::to_string(order) + " must be even and at least 6");
            if ((order / 2) % spec.b != 0)
                throw std::invalid_argument("b=" + std::to_string(spec.b) + " does not divide m=" + std::to_string(order / 2));
        }
        if (! std::is_sorted(spec.orders.begin(), spec.orders.end()))
            throw std::invalid_argument("orders must be ascending");
    }

    auto DepthCounters::operator+=(const DepthCounters & other) -> DepthCounters &
    {
        candidates += other.candidates;
        nodes += other.nodes;
        rejected_matching += other.rejected_matching;
        rejected_girth += other.rejected_girth;
        rejected_symmetry += other.rejected_symmetry;
        return *this;
    }

    auto SearchCounters::for_depth(int b) -> SearchCounters
    {
        return SearchCounters{std::vector<DepthCounters>(b)};
    }

    auto SearchCounters::total() const -> DepthCounters
    {
        DepthCounters sum;
        for (auto & d : depths)
            sum += d;
        return sum;
    }

    auto SearchCounters::leaves() const -> std::uint64_t
    {
        return depths.empty() ? 0 : depths.back().nodes;
    }

    auto SearchCounters::operator+=(const SearchCounters & other) -> SearchCounters &
    {
        if (depths.size() < other.depths.size())
            depths.resize(other.depths.size());
        for (std::size_t k = 0; k < other.depths.size(); ++k)
            depths[k] += other.depths[k];
        return *this;
    }

    auto free_position_layout(int b) -> std::vector<int>
    {
        std::vector<int> layout;
        for (int k = 0; k < b; ++k)
            layout.push_back(2 * k + 1);
        return layout;
    }

    auto first_position_values(int m, bool symmetry_reduction) -> std::vector<int>
    {
        std::vector<int> values;
        int hi = symmetry_reduction ? m : 2 * m - 3;
        for (int d = 3; d <= hi; d += 2)
            values.push_back(d);
        return values;
    }

    auto ExhaustionCertificate::check() const -> std::string
    {
        if (b < 1 || order < 6 || (order / 2) % b != 0)
            return "bad (b, order)";
        if (std::cmp_not_equal(counters.depths.size(), b))
            return "expected " + std::to_string(b) + " depth records, got " + std::to_string(counters.depths.size());
        if (free_positions != free_position_layout(b))
            return "free-position layout does not match b";

        const int m = order / 2;
        const std::uint64_t per_position = static_cast<std::uint64_t>(m - 2);
        const std::uint64_t roots = first_position_values(m, symmetry_reduction).size();

        for (int k = 0; k < b; ++k) {
            auto & d = counters.depths[k];
            if (d.candidates != d.nodes + d.rejected_matching + d.rejected_girth + d.rejected_symmetry)
                return "depth " + std::to_string(k) + ": candidates do not equal nodes plus rejections";
            std::uint64_t expected = k == 0 ? roots : counters.depths[k - 1].nodes * per_position;
            if (d.candidates != expected)
                return "depth " + std::to_string(k) + ": expected " + std::to_string(expected) + " candidates, got "
                    + std::to_string(d.candidates);
            if (! symmetry_reduction && d.rejected_symmetry != 0)
                return "symmetry rejections recorded without reduction";
        }
        if (counters.depths[0].rejected_matching != 0)
            return "matching rejection at the first position";
        if ((witnesses == 0) != (counters.leaves() == 0))
            return "witness count disagrees with leaf count";
        if (witnesses > counters.leaves())
            return "more witnesses than leaves";
        return {};
    }

    auto partition(const SearchSpec & spec, int order, int shards) -> std::vector<ShardRange>
    {
        if (shards < 1)
            throw std::invalid_argument("shard count must be positive");
        auto values = first_position_values(order / 2, spec.symmetry_reduction);
        std::vector<ShardRange> ranges;
        const auto total = values.size();
        const auto count = std::min<std::size_t>(static_cast<std::size_t>(shards), total);
        for (std::size_t k = 0; k < count; ++k) {
            auto from = k * total / count;
            auto to = (k + 1) * total / count;
            ranges.push_back(ShardRange{values[from], values[to - 1], {}});
        }
        return ranges;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct RunControl
        {
            std::optional<std::uint64_t> node_budget;
            std::optional<Clock::time_point> deadline;
            std::atomic<std::uint64_t> nodes_used{0};
            std::atomic<bool> breached{false};
        };

        struct ShardResult
        {
            SearchCounters counters;
            std::set<std::vector<int>> canonical;
            std::uint64_t labelled = 0;
            std::optional<std::vector<int>> first_labelled;
            bool complete = false;
            bool cancelled = false;
            std::optional<ShardRange> pending;
        };

        class ShardWorker
        {
        public:
            ShardWorker(const SearchSpec & spec, int order, RunControl & control, std::atomic<int> & witness_shard) :
                _spec(spec),
                _m(order / 2),
                _n(order),
                _period(2 * spec.b),
                _control(control),
                _witness_shard(witness_shard),
                _probe(order),
                _offsets(2 * spec.b, 0)
            {
            }

            auto run(const ShardRange & range, int shard_index) -> ShardResult
            {
                _range = range;
                _index = shard_index;
                _result = ShardResult{};
                _result.counters = SearchCounters::for_depth(_spec.b);
                _path.clear();
                _stop = Stop::none;
                std::fill(_offsets.begin(), _offsets.end(), 0);

                descend(0, range.cursor);
                flush_nodes();

                switch (_stop) {
                    case Stop::none:
                        _result.complete = true;
                        break;
                    case Stop::witness:
                        break;
                    case Stop::cancelled:
                        _result.cancelled = true;
                        break;
                    case Stop::budget:
                        _result.pending = ShardRange{range.lo, range.hi, _cursor};
                        break;
                }
                return std::move(_result);
            }

        private:
            enum class Stop
            {
                none,
                witness,
                cancelled,
                budget
            };

            auto stops_on_witness() const -> bool
            {
                return _spec.mode == SearchMode::first_witness || _spec.mode == SearchMode::prove_nonexistence;
            }

            auto flush_nodes() -> void
            {
                if (_unflushed) {
                    _control.nodes_used.fetch_add(_unflushed, std::memory_order_relaxed);
                    _unflushed = 0;
                }
            }

            auto should_stop() -> bool
            {
                if (stops_on_witness() && _witness_shard.load(std::memory_order_relaxed) < _index) {
                    _stop = Stop::cancelled;
                    return true;
                }
                if (_control.breached.load(std::memory_order_relaxed))
                    return true;
                if (_control.node_budget
                        && _control.nodes_used.load(std::memory_order_relaxed) + _unflushed >= *_control.node_budget)
                    return true;
                if (_control.deadline && (++_clock_tick & 1023) == 0 && Clock::now() >= *_control.deadline)
                    return true;
                return false;
            }

            auto breach(int value) -> void
            {
                _stop = Stop::budget;
                _control.breached.store(true, std::memory_order_relaxed);
                _cursor = _path;
                _cursor.push_back(value);
            }

            auto value_range(int depth) const -> std::pair<int, int>
            {
                if (depth == 0)
                    return {_range.lo, _range.hi};
                return {3, _n - 3};
            }

            auto assign(int position, int value) -> int
            {
                int partner = (position + value) % _period;
                _offsets[position] = value;
                _offsets[partner] = _n - value;
                return partner;
            }

            auto unassign(int position, int partner) -> void
            {
                _offsets[position] = 0;
                _offsets[partner] = 0;
            }

            auto descend(int depth, std::span<const int> cursor) -> void
            {
                const int position = 2 * depth;
                auto [lo, hi] = value_range(depth);
                int start = lo;

                if (! cursor.empty()) {
                    start = cursor[0];
                    if (cursor.size() > 1) {
                        // already accepted and counted before the interruption
                        int partner = assign(position, cursor[0]);
                        _path.push_back(cursor[0]);
                        descend(depth + 1, cursor.subspan(1));
                        _path.pop_back();
                        unassign(position, partner);
                        if (_stop != Stop::none)
                            return;
                        start = cursor[0] + 2;
                    }
                }

                auto & counters = _result.counters.depths[depth];
                const int floor = _spec.symmetry_reduction && depth > 0 ? _offsets[0] : 0;

                for (int value = start; value <= hi; value += 2) {
                    if (should_stop()) {
                        if (_stop == Stop::none)
                            breach(value);
                        return;
                    }

                    ++counters.candidates;
                    if (floor != 0 && (value < floor || value > _n - floor)) {
                        ++counters.rejected_symmetry;
                        continue;
                    }
                    int partner = (position + value) % _period;
                    if (_offsets[partner] != 0) {
                        ++counters.rejected_matching;
                        continue;
                    }

                    assign(position, value);
                    // every new short cycle uses a new chord, hence has a
                    // translate through vertex `position`
                    if (_probe.shortest_from(_offsets, position, _spec.girth - 1) < _spec.girth) {
                        ++counters.rejected_girth;
                        unassign(position, partner);
                        continue;
                    }

                    ++counters.nodes;
                    ++_unflushed;
                    if (_unflushed >= 256)
                        flush_nodes();

                    _path.push_back(value);
                    if (depth + 1 == _spec.b)
                        leaf();
                    else
                        descend(depth + 1, {});
                    _path.pop_back();
                    unassign(position, partner);

                    if (_stop != Stop::none)
                        return;
                }
            }

            auto leaf() -> void
            {
                auto pattern = validate_pattern(_m, _spec.b, std::span<const int>{_offsets});
                ++_result.labelled;
                if (stops_on_witness()) {
                    _result.first_labelled = std::vector<int>(_offsets);
                    int current = _witness_shard.load();
                    while (_index < current && ! _witness_shard.compare_exchange_weak(current, _index)) {
                    }
                    _stop = Stop::witness;
                    return;
                }
                auto canonical = canonical_form(pattern);
                _result.canonical.emplace(canonical.offsets().begin(), canonical.offsets().end());
            }

            const SearchSpec & _spec;
            int _m;
            int _n;
            int _period;
            RunControl & _control;
            std::atomic<int> & _witness_shard;
            CycleProbe _probe;
            std::vector<int> _offsets;
            std::vector<int> _path;
            std::vector<int> _cursor;
            ShardRange _range;
            int _index = 0;
            Stop _stop = Stop::none;
            std::uint64_t _unflushed = 0;
            std::uint64_t _clock_tick = 0;
            ShardResult _result;
        };

        auto measure(const OffsetPattern & pattern, int girth) -> Witness
        {
            auto result = girth_oracle(expand(pattern), pattern.order());
            return Witness{pattern, girth, result.value.value_or(0)};
        }

        auto search_order(const SearchSpec & spec, int order, const ResumeState * resume, RunControl & control) -> OrderOutcome
        {
            const auto started = Clock::now();
            const int m = order / 2;

            std::vector<ShardRange> queue;
            OrderOutcome outcome;
            outcome.order = order;
            outcome.counters = SearchCounters::for_depth(spec.b);
            std::set<std::vector<int>> canonical;
            double carried_seconds = 0.0;

            if (resume) {
                queue = resume->shards;
                outcome.counters += resume->counters;
                outcome.labelled_count = resume->labelled_count;
                for (auto & w : resume->witnesses)
                    canonical.insert(w);
                carried_seconds = resume->wall_seconds;
            }
            else
                queue = partition(spec, order, spec.shards);

            std::vector<ShardResult> results(queue.size());
            std::atomic<int> witness_shard{INT_MAX};
            std::atomic<std::size_t> next{0};

            auto work = [&] {
                ShardWorker worker(spec, order, control, witness_shard);
                while (true) {
                    auto k = next.fetch_add(1);
                    if (k >= queue.size())
                        break;
                    const bool skip = (spec.mode == SearchMode::first_witness || spec.mode == SearchMode::prove_nonexistence)
                        && witness_shard.load() < static_cast<int>(k);
                    if (skip) {
                        results[k].cancelled = true;
                        continue;
                    }
                    if (control.breached.load()) {
                        results[k].pending = queue[k];
                        continue;
                    }
                    results[k] = worker.run(queue[k], static_cast<int>(k));
                }
            };

            const auto workers = std::min<std::size_t>(static_cast<std::size_t>(spec.shards), queue.size());
            if (workers <= 1)
                work();
            else {
                std::vector<std::jthread> pool;
                for (std::size_t t = 0; t < workers; ++t)
                    pool.emplace_back(work);
            }

            std::optional<std::vector<int>> first;
            for (std::size_t k = 0; k < results.size(); ++k) {
                auto & r = results[k];
                if (r.first_labelled && ! first && static_cast<int>(k) == witness_shard.load())
                    first = r.first_labelled;
                if (r.cancelled)
                    continue;
                outcome.counters += r.counters;
                outcome.labelled_count += r.labelled;
                canonical.insert(r.canonical.begin(), r.canonical.end());
                if (r.pending)
                    outcome.pending.push_back(*r.pending);
            }

            const double seconds = carried_seconds + std::chrono::duration<double>(Clock::now() - started).count();
            outcome.wall_seconds = seconds;

            if (first) {
                auto pattern = canonical_form(validate_pattern(m, spec.b, std::span<const int>{*first}));
                outcome.status = OrderStatus::witness;
                outcome.witnesses.push_back(measure(pattern, spec.girth));
                outcome.canonical_count = 1;
                outcome.pending.clear();
                return outcome;
            }

            outcome.canonical_count = canonical.size();
            if (spec.mode == SearchMode::all_witnesses)
                for (auto & offsets : canonical)
                    outcome.witnesses.push_back(measure(validate_pattern(m, spec.b, std::span<const int>{offsets}), spec.girth));

            if (! outcome.pending.empty()) {
                outcome.status = OrderStatus::undecided;
                // keep found witnesses so a resumed run can finish the set
                if (spec.mode != SearchMode::all_witnesses)
                    for (auto & offsets : canonical)
                        outcome.witnesses.push_back(Witness{validate_pattern(m, spec.b, std::span<const int>{offsets}), spec.girth, 0});
                outcome.certificate.reset();
                std::sort(outcome.pending.begin(), outcome.pending.end(),
                        [](const ShardRange & a, const ShardRange & c) { return a.lo < c.lo; });
                return outcome;
            }

            outcome.status = outcome.canonical_count > 0 || outcome.labelled_count > 0 ? OrderStatus::witness : OrderStatus::exhausted;

            ExhaustionCertificate cert;
            cert.girth = spec.girth;
            cert.b = spec.b;
            cert.order = order;
            cert.symmetry_reduction = spec.symmetry_reduction;
            cert.free_positions = free_position_layout(spec.b);
            cert.counters = outcome.counters;
            cert.witnesses = outcome.canonical_count;
            cert.wall_seconds = seconds;
            outcome.certificate = cert;
            return outcome;
        }

        auto make_control(const SearchSpec & spec) -> std::unique_ptr<RunControl>
        {
            auto control = std::make_unique<RunControl>();
            control->node_budget = spec.budget.nodes;
            if (spec.budget.wall)
                control->deadline = Clock::now() + *spec.budget.wall;
            return control;
        }
    }

    auto enumerate(const SearchSpec & spec, int order, const ResumeState * resume) -> OrderOutcome
    {
        auto probe = spec;
        probe.orders = {order};
        check_spec(probe);
        auto control = make_control(spec);
        return search_order(spec, order, resume, *control);
    }

    auto min_order(const SearchSpec & spec, const ResumeState * resume) -> SearchOutcome
    {
        check_spec(spec);
        auto control = make_control(spec);
        SearchOutcome outcome;

        for (std::size_t k = 0; k < spec.orders.size(); ++k) {
            const int order = spec.orders[k];
            const ResumeState * carried = (resume && k == 0 && ! resume->shards.empty()) ? resume : nullptr;
            auto result = search_order(spec, order, carried, *control);

            if (result.status == OrderStatus::undecided) {
                ResumeState state;
                state.girth = spec.girth;
                state.b = spec.b;
                state.mode = spec.mode;
                state.symmetry_reduction = spec.symmetry_reduction;
                state.orders.assign(spec.orders.begin() + static_cast<std::ptrdiff_t>(k), spec.orders.end());
                state.counters = result.counters;
                state.labelled_count = result.labelled_count;
                for (auto & w : result.witnesses)
                    state.witnesses.emplace_back(w.pattern.offsets().begin(), w.pattern.offsets().end());
                state.shards = result.pending;
                state.wall_seconds = result.wall_seconds;
                outcome.orders.push_back(std::move(result));
                outcome.resume = std::move(state);
                return outcome;
            }

            const bool found = result.status == OrderStatus::witness;
            outcome.orders.push_back(std::move(result));
            if (found && ! outcome.minimal_order)
                outcome.minimal_order = order;
            if (found && spec.mode == SearchMode::first_witness)
                break;
        }
        return outcome;
    }

    auto spec_from_resume(const ResumeState & state, SearchBudget budget, int shards) -> SearchSpec
    {
        SearchSpec spec;
        spec.girth = state.girth;
        spec.b = state.b;
        spec.orders = state.orders;
        spec.mode = state.mode;
        spec.symmetry_reduction = state.symmetry_reduction;
        spec.budget = budget;
        spec.shards = shards;
        return spec;
    }
}
