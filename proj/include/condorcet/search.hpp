// search.hpp -- orderly depth-first generation of complete never-condition sets

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <mutex>
#include <thread>
#include <vector>

#include "core.hpp"
#include "domain.hpp"
#include "iso.hpp"
#include "lexcode.hpp"

namespace condorcet {

struct SearchConfig {
    int n = 3;
    RuleSet rules = RuleSet::all();
    /// Drop leaves whose full domain is not maximal.
    bool maximal_only = false;
    /// Restrict the search to copious full domains. Copiousness passes to
    /// every co-lex prefix, so subtrees whose partial domain already shows
    /// fewer than four patterns on an assigned triple are cut.
    bool copious_only = false;
    unsigned thread_count = 1;
};

struct SearchStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t nodes_pruned = 0;
    std::uint64_t leaves_emitted = 0;
    std::chrono::duration<double> wall_time{};

    SearchStats& operator+=(const SearchStats& other)
    {
        nodes_visited += other.nodes_visited;
        nodes_pruned += other.nodes_pruned;
        leaves_emitted += other.leaves_emitted;
        return *this;
    }
};

using LeafSink = std::function<void(const ConditionAssignment&)>;

namespace detail {

// Partial full domain of a prefix-assigned search node, kept level by level:
// base(k) holds the full domain on [k-1] and each assigned slot (a, b, k)
// narrows the insertion points of k into those orders.
class CopiousTracker {
public:
    explicit CopiousTracker(int n) : n_(n) { levels_.push_back(make_level(OrderTable::pairs())); }

    /// Assigns `code` to `slot` (the next slot in co-lex order). Returns false
    /// if some assigned triple can no longer show four patterns. Either way
    /// the frame is pushed and must be popped.
    bool push(std::size_t slot, Code code)
    {
        const Triple t = triple_at(slot, n_);
        Level& level = levels_.back();
        const int k = t.c;
        const auto& prev = frames_.empty() || frames_.back().k != k ? level.full_masks : frames_.back().masks;

        Frame frame;
        frame.k = k;
        frame.masks = prev;
        const std::uint8_t bits = static_cast<std::uint8_t>(1u << code);
        const std::uint8_t before = allowed_zones(true, bits), after = allowed_zones(false, bits);
        const auto& orders = level.orders;
        std::size_t alive = 0;
        for (std::size_t o = 0; o < orders.seq.size(); ++o) {
            const int pa = orders.pos[o][t.a], pb = orders.pos[o][t.b];
            frame.masks[o] &= zone_positions(pa < pb ? before : after, std::min(pa, pb), std::max(pa, pb), k);
            alive += frame.masks[o] != 0;
        }
        const bool ok = alive > 0 && copious_so_far(level, frame, slot, alive);
        const bool closes_level = ok && slot + 1 == choose3(k) && k < n_;
        frame.opened_level = closes_level;
        frames_.push_back(std::move(frame));
        if (closes_level) levels_.push_back(make_level(orders.extend(frames_.back().masks)));
        return ok;
    }

    void pop()
    {
        if (frames_.back().opened_level) levels_.pop_back();
        frames_.pop_back();
    }

private:
    struct Level {
        OrderTable orders;                                  // full domain on [k-1]
        std::vector<std::uint16_t> full_masks;              // every insertion point
        std::vector<std::vector<std::uint8_t>> patterns;    // [triple in [k-1]][order]
    };

    struct Frame {
        int k = 0;
        std::vector<std::uint16_t> masks;
        bool opened_level = false;
    };

    Level make_level(OrderTable orders) const
    {
        Level level;
        const int size = orders.k;
        level.full_masks.assign(orders.seq.size(), static_cast<std::uint16_t>((1u << (size + 1)) - 1));
        level.patterns.resize(choose3(size));
        for (std::size_t s = 0; s < level.patterns.size(); ++s) {
            const Triple t = triple_at(s, size);
            auto& row = level.patterns[s];
            row.resize(orders.seq.size());
            for (std::size_t o = 0; o < orders.seq.size(); ++o) {
                const auto& p = orders.pos[o];
                std::array<std::pair<int, std::uint8_t>, 3> ranked{{{p[t.a], 1}, {p[t.b], 2}, {p[t.c], 3}}};
                std::sort(ranked.begin(), ranked.end());
                row[o] = static_cast<std::uint8_t>(pattern_id({ranked[0].second, ranked[1].second, ranked[2].second}));
            }
        }
        level.orders = std::move(orders);
        return level;
    }

    bool copious_so_far(const Level& level, const Frame& frame, std::size_t slot, std::size_t alive) const
    {
        const auto& orders = level.orders;
        const std::size_t count = orders.seq.size();
        if (alive < count) {
            for (const auto& row : level.patterns) {
                std::uint8_t seen = 0;
                for (std::size_t o = 0; o < count; ++o)
                    if (frame.masks[o]) seen |= static_cast<std::uint8_t>(1u << row[o]);
                if (std::popcount(seen) < 4) return false;
            }
        }
        const int k = frame.k;
        for (std::size_t s = choose3(k - 1); s <= slot; ++s) {
            const Triple t = triple_at(s, n_);
            std::uint8_t seen = 0;
            for (std::size_t o = 0; o < count && std::popcount(seen) < 4; ++o) {
                const auto mask = frame.masks[o];
                if (!mask) continue;
                const int pa = orders.pos[o][t.a], pb = orders.pos[o][t.b];
                const int lo = std::min(pa, pb), hi = std::max(pa, pb);
                for (int z = 0; z < 3; ++z)
                    if (mask & zone_positions(static_cast<std::uint8_t>(1u << z), lo, hi, k))
                        seen |= static_cast<std::uint8_t>(1u << kZonePattern[pa < pb][z]);
            }
            if (std::popcount(seen) < 4) return false;
        }
        return true;
    }

    int n_;
    std::vector<Level> levels_;
    std::vector<Frame> frames_;
};

class OrderlySearch {
public:
    OrderlySearch(const SearchConfig& config, const LeafSink& sink)
        : config_(config), sink_(sink), node_(config.n), total_(choose3(config.n))
    {
        if (config.copious_only) tracker_.emplace(config.n);
    }

    /// Replays a prefix, checking each node the way the search would have.
    void enter(const ConditionAssignment& prefix)
    {
        require(prefix.alternatives() == config_.n, "prefix: alternative count differs from the search");
        require(prefix.is_prefix_assigned(), "prefix: assigned slots must form a co-lex prefix");
        require(prefix.uses_only(config_.rules), "prefix: codes outside the rule set");
        const std::size_t length = prefix.assigned_prefix();
        for (std::size_t s = 0; s < length; ++s)
            require(accept(s, prefix[s]), "prefix: node fails the partial lexicographic maximality test");
    }

    /// Depth-first from the current node.
    void run()
    {
        const std::size_t depth = node_.assigned_prefix();
        if (depth == total_) {
            emit();
            return;
        }
        descend(depth);
    }

    /// Children of the current node that pass the tests, as code strings.
    std::vector<ConditionAssignment> children()
    {
        std::vector<ConditionAssignment> out;
        const std::size_t s = node_.assigned_prefix();
        if (s == total_) return out;
        for (Code code : config_.rules.codes()) {
            if (accept(s, code)) out.push_back(node_);
            retract(s);
        }
        return out;
    }

    const SearchStats& stats() const { return stats_; }

private:
    // Assigns `code` to slot s and runs the node tests.
    bool accept(std::size_t s, Code code)
    {
        node_.set(s, code);
        ++stats_.nodes_visited;
        bool ok = true;
        if (tracker_) ok = tracker_->push(s, code);
        if (ok)
            ok = s + 1 == total_ ? is_canonical_complete(node_, config_.rules)
                                 : is_partially_lex_max(node_, config_.rules);
        if (!ok) ++stats_.nodes_pruned;
        return ok;
    }

    void retract(std::size_t s)
    {
        if (tracker_) tracker_->pop();
        node_.clear(s);
    }

    void descend(std::size_t s)
    {
        for (Code code : config_.rules.codes()) {
            if (accept(s, code)) {
                if (s + 1 == total_)
                    emit();
                else
                    descend(s + 1);
            }
            retract(s);
        }
    }

    void emit()
    {
        if (config_.maximal_only && !is_maximal(expand(node_))) return;
        ++stats_.leaves_emitted;
        sink_(node_);
    }

    const SearchConfig& config_;
    const LeafSink& sink_;
    ConditionAssignment node_;
    std::size_t total_;
    std::optional<CopiousTracker> tracker_;
    SearchStats stats_;
};

inline void validate(const SearchConfig& config)
{
    require_alternative_count(config.n);
    require(config.thread_count >= 1, "thread count must be positive");
}

inline SearchStats run_partitioned(const SearchConfig& config, const ConditionAssignment& root, const LeafSink& sink)
{
    SearchStats stats;
    const LeafSink discard = [](const ConditionAssignment&) {};

    // Grow a frontier of subtree roots until there is enough work to share.
    std::vector<ConditionAssignment> frontier{root};
    const std::size_t total = choose3(config.n);
    const std::size_t wanted = 8 * static_cast<std::size_t>(config.thread_count);
    while (frontier.size() < wanted && frontier.front().assigned_prefix() < total) {
        std::vector<ConditionAssignment> next;
        for (const auto& node : frontier) {
            OrderlySearch expander(config, discard);
            expander.enter(node);
            auto kids = expander.children();
            stats.nodes_visited += expander.stats().nodes_visited - node.assigned_prefix();
            stats.nodes_pruned += expander.stats().nodes_pruned;
            next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::vector<std::vector<ConditionAssignment>> found(config.thread_count);
    std::vector<SearchStats> worker_stats(config.thread_count);
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < config.thread_count; ++w)
            workers.emplace_back([&, w] {
                try {
                    const LeafSink collect = [&](const ConditionAssignment& leaf) { found[w].push_back(leaf); };
                    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
                        OrderlySearch search(config, collect);
                        // Frontier nodes already passed their tests while the frontier grew.
                        search.enter(frontier[i]);
                        search.run();
                        worker_stats[w] += search.stats();
                        worker_stats[w].nodes_visited -= frontier[i].assigned_prefix();
                    }
                } catch (...) {
                    std::lock_guard lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            });
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ConditionAssignment> leaves;
    for (auto& part : found) leaves.insert(leaves.end(), part.begin(), part.end());
    std::sort(leaves.begin(), leaves.end());
    for (const auto& ws : worker_stats) {
        stats.nodes_visited += ws.nodes_visited;
        stats.nodes_pruned += ws.nodes_pruned;
    }
    for (const auto& leaf : leaves) {
        sink(leaf);
        ++stats.leaves_emitted;
    }
    return stats;
}

} // namespace detail

/// Emits one representative, the lexicographically largest R-respecting
/// member, of every isomorphism class of complete assignments over R that
/// lie in the subtree rooted at `prefix`. The prefix must be a node the full
/// search would visit. With one thread leaves stream in depth-first order,
/// which is ascending code-string order; with more they are merged and
/// emitted in that same order at the end.
inline SearchStats generate_from(const SearchConfig& config, const ConditionAssignment& prefix, const LeafSink& sink)
{
    detail::validate(config);
    const auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    if (config.thread_count == 1) {
        detail::OrderlySearch search(config, sink);
        search.enter(prefix);
        search.run();
        stats = search.stats();
        stats.nodes_visited -= prefix.assigned_prefix();
    } else {
        {
            // Validates the prefix once before partitioning.
            const LeafSink discard = [](const ConditionAssignment&) {};
            detail::OrderlySearch check(config, discard);
            check.enter(prefix);
        }
        stats = detail::run_partitioned(config, prefix, sink);
    }
    stats.wall_time = std::chrono::steady_clock::now() - start;
    return stats;
}

inline SearchStats generate(const SearchConfig& config, const LeafSink& sink)
{
    detail::validate(config);
    return generate_from(config, ConditionAssignment(config.n), sink);
}

/// Convenience: all emitted leaves.
inline std::vector<ConditionAssignment> generate_all(const SearchConfig& config, SearchStats* stats = nullptr)
{
    std::vector<ConditionAssignment> out;
    auto s = generate(config, [&](const ConditionAssignment& leaf) { out.push_back(leaf); });
    if (stats) *stats = s;
    return out;
}

} // namespace condorcet
