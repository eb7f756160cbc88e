#include "oramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "oramsey/construct.hpp"
#include "oramsey/detect.hpp"
#include "oramsey/random.hpp"

namespace oramsey::search {

namespace {

using Clock = std::chrono::steady_clock;

// ---- completion checking ------------------------------------------------
//
// After edge S receives a color, a branch dies iff some embedding of the
// pattern in that color has S as its colex-maximal edge: every other edge
// of such an embedding has a smaller colex rank and is therefore already
// colored.  Order-preserving maps preserve colex comparisons, so the
// embedded maximal edge is the image of the pattern's maximal edge in
// position space; its positions are pinned to S and the remaining
// positions are filled by descending backtracking.

struct CompletionChecker {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;   // sorted index tuples
    std::vector<int> emax;                 // colex-max edge in position space
    std::vector<int> pinned_slot;          // position -> index into emax, or -1
    std::vector<int> free_positions;       // descending
    std::vector<std::vector<int>> check_at;  // per position: edge ids completed there
    std::vector<int> setup_check;          // edges fully inside pinned positions

    explicit CompletionChecker(const PatternSpec& p) {
        vertex_count = pattern_vertex_count(p);
        edges = pattern_edges(p);
        if (edges.empty()) return;
        const auto colex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const int av = a[a.size() - 1 - i];
                const int bv = b[b.size() - 1 - i];
                if (av != bv) return av < bv;
            }
            return false;
        };
        emax = *std::max_element(edges.begin(), edges.end(), colex_less);
        pinned_slot.assign(static_cast<std::size_t>(vertex_count), -1);
        for (std::size_t i = 0; i < emax.size(); ++i)
            pinned_slot[static_cast<std::size_t>(emax[i])] = static_cast<int>(i);
        for (int pos = vertex_count - 1; pos >= 0; --pos)
            if (pinned_slot[static_cast<std::size_t>(pos)] < 0) free_positions.push_back(pos);
        check_at.assign(static_cast<std::size_t>(vertex_count), {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int min_free = -1;
            for (int pos : edges[e])
                if (pinned_slot[static_cast<std::size_t>(pos)] < 0)
                    min_free = min_free < 0 ? pos : std::min(min_free, pos);
            if (min_free < 0) {
                if (edges[e] != emax) setup_check.push_back(static_cast<int>(e));
            } else {
                check_at[static_cast<std::size_t>(min_free)].push_back(static_cast<int>(e));
            }
        }
    }

    bool has_edges() const { return !edges.empty(); }
};

struct CompletionSearch {
    const CompletionChecker& chk;
    const std::vector<std::uint8_t>& colors;  // by edge rank; valid below frontier
    const BinomialTable& bt;
    int n;
    std::uint8_t target;
    std::vector<int> assign;

    CompletionSearch(const CompletionChecker& chk_, const std::vector<std::uint8_t>& colors_,
                     const BinomialTable& bt_, int n_)
        : chk(chk_), colors(colors_), bt(bt_), n(n_), target(0),
          assign(static_cast<std::size_t>(chk_.vertex_count), -1) {}

    bool edge_colored_target(int e) const {
        const auto& idx = chk.edges[static_cast<std::size_t>(e)];
        i64 rank = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            rank += bt.at(assign[static_cast<std::size_t>(idx[i])], static_cast<int>(i) + 1);
        return colors[static_cast<std::size_t>(rank)] == target;
    }

    bool fill(std::size_t fi) {
        if (fi == chk.free_positions.size()) return true;
        const int pos = chk.free_positions[fi];
        const int hi = assign[static_cast<std::size_t>(pos) + 1];
        for (int v = pos; v < hi; ++v) {
            // stay above any pinned vertex at a lower position
            bool ok = true;
            for (int q = pos - 1; q >= 0 && ok; --q) {
                if (chk.pinned_slot[static_cast<std::size_t>(q)] >= 0) {
                    ok = assign[static_cast<std::size_t>(q)] + (pos - q) <= v;
                    break;
                }
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(pos)] = v;
            for (int e : chk.check_at[static_cast<std::size_t>(pos)])
                if (!edge_colored_target(e)) {
                    ok = false;
                    break;
                }
            if (ok && fill(fi + 1)) return true;
        }
        assign[static_cast<std::size_t>(pos)] = -1;
        return false;
    }

    // does assigning `color` to subset S complete an embedding?
    bool completes(std::span<const int> subset, std::uint8_t color) {
        if (!chk.has_edges()) return false;
        if (static_cast<int>(subset.size()) != static_cast<int>(chk.emax.size())) return false;
        target = color;
        std::fill(assign.begin(), assign.end(), -1);
        for (std::size_t i = 0; i < chk.emax.size(); ++i) {
            const int pos = chk.emax[i];
            // room below and above for the remaining positions
            if (subset[i] < pos) return false;
            if (n - subset[i] < chk.vertex_count - pos) return false;
            assign[static_cast<std::size_t>(pos)] = subset[i];
        }
        // pinned positions must leave strictly increasing room between them
        for (std::size_t i = 1; i < chk.emax.size(); ++i) {
            const int gap_pos = chk.emax[i] - chk.emax[i - 1];
            if (subset[i] - subset[i - 1] < gap_pos) return false;
        }
        for (int e : chk.setup_check)
            if (!edge_colored_target(e)) return false;
        // sentinel above the top position simplifies bounds
        return fill_with_sentinel();
    }

    bool fill_with_sentinel() {
        // positions are filled descending; position vertex bounds read
        // assign[pos+1], so give the top position a virtual cap of n
        if (chk.free_positions.empty()) return true;
        if (chk.free_positions.front() == chk.vertex_count - 1) {
            // top position free: bound by n
            return fill_top(0);
        }
        return fill(0);
    }

    bool fill_top(std::size_t fi) {
        const int pos = chk.free_positions[fi];
        for (int v = n - 1; v >= pos; --v) {
            bool ok = true;
            for (int q = pos - 1; q >= 0 && ok; --q) {
                if (chk.pinned_slot[static_cast<std::size_t>(q)] >= 0) {
                    ok = assign[static_cast<std::size_t>(q)] + (pos - q) <= v;
                    break;
                }
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(pos)] = v;
            bool edges_ok = true;
            for (int e : chk.check_at[static_cast<std::size_t>(pos)])
                if (!edge_colored_target(e)) {
                    edges_ok = false;
                    break;
                }
            if (edges_ok && fill(fi + 1)) return true;
        }
        assign[static_cast<std::size_t>(pos)] = -1;
        return false;
    }
};

// Incremental longest-path tracker for PathPower(1, s): with colex edge
// order a new edge (u,v) cannot have colored out-edges from v, so the
// longest monochromatic increasing path ending at each vertex updates
// without propagation.
struct PathLenTracker {
    int s;
    std::vector<std::int32_t> longest;
    std::vector<std::pair<int, std::int32_t>> trail;

    PathLenTracker(int s_, int n) : s(s_), longest(static_cast<std::size_t>(n), 1) {}

    bool completes_then_record(int u, int v) {
        const std::int32_t nl = longest[static_cast<std::size_t>(u)] + 1;
        if (nl >= s) return true;
        trail.emplace_back(v, longest[static_cast<std::size_t>(v)]);
        if (nl > longest[static_cast<std::size_t>(v)]) longest[static_cast<std::size_t>(v)] = nl;
        return false;
    }
    void undo() {
        const auto [v, old] = trail.back();
        trail.pop_back();
        longest[static_cast<std::size_t>(v)] = old;
    }
};

struct LevelEngine {
    int n;
    int k;
    i64 m;
    const BinomialTable& bt;
    std::vector<std::vector<int>> subsets;  // by rank
    std::vector<std::uint8_t> colors;
    const CompletionChecker* chk[2];  // index by color value
    std::optional<PathLenTracker> path_tracker[2];
    std::optional<CompletionSearch> generic[2];

    LevelEngine(int n_, int k_, i64 m_, const BinomialTable& bt_, const CompletionChecker& red,
                const CompletionChecker& blue, int red_path_s, int blue_path_s)
        : n(n_), k(k_), m(m_), bt(bt_), colors(static_cast<std::size_t>(m_), 0) {
        chk[1] = &red;
        chk[0] = &blue;
        subsets.reserve(static_cast<std::size_t>(m_));
        std::vector<int> cur(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) cur[static_cast<std::size_t>(i)] = i;
        if (m_ > 0) {
            do {
                subsets.push_back(cur);
            } while (next_subset_colex(cur, n_));
        }
        if (red_path_s > 0)
            path_tracker[1].emplace(red_path_s, n_);
        else
            generic[1].emplace(red, colors, bt_, n_);
        if (blue_path_s > 0)
            path_tracker[0].emplace(blue_path_s, n_);
        else
            generic[0].emplace(blue, colors, bt_, n_);
    }

    // true = branch dies (completed pattern); false = recorded, undo later
    bool assign(i64 rank, std::uint8_t color) {
        colors[static_cast<std::size_t>(rank)] = color;
        const auto& sub = subsets[static_cast<std::size_t>(rank)];
        if (path_tracker[color])
            return path_tracker[color]->completes_then_record(sub[0], sub[1]);
        return generic[color]->completes(sub, color);
    }
    void undo(std::uint8_t color) {
        if (path_tracker[color]) path_tracker[color]->undo();
    }
};

struct StopFlags {
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget;
    Clock::time_point deadline;

    bool charge(std::uint64_t delta) {
        const auto total = nodes.fetch_add(delta) + delta;
        if (total > node_budget || Clock::now() > deadline) {
            stop.store(true);
            return false;
        }
        return !stop.load(std::memory_order_relaxed);
    }
};

struct TaskResult {
    bool witness_found = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint8_t> witness_colors;
    bool aborted = false;
};

// Sequential DFS from `start` to the end of the edge list; stops at the
// first full assignment.  Returns nodes explored up to that point.
class SubtreeRunner {
public:
    SubtreeRunner(LevelEngine& eng, StopFlags& flags, int first_witness_hint)
        : eng_(eng), flags_(flags), abort_below_(first_witness_hint) {}

    TaskResult run(const std::vector<std::uint8_t>& prefix, i64 start,
                   const std::atomic<int>* abort_if_above, int task_index) {
        TaskResult result;
        // replay prefix without counting
        std::vector<std::uint8_t> applied;
        for (i64 i = 0; i < start; ++i) {
            if (eng_.assign(i, prefix[static_cast<std::size_t>(i)])) {
                for (auto it = applied.rbegin(); it != applied.rend(); ++it) eng_.undo(*it);
                return result;  // prefix itself dead (caller filtered; defensive)
            }
            applied.push_back(prefix[static_cast<std::size_t>(i)]);
        }
        found_ = false;
        abort_above_ = abort_if_above;
        task_index_ = task_index;
        local_nodes_ = 0;
        aborted_ = false;
        dfs(start);
        result.witness_found = found_;
        result.nodes = local_nodes_;
        result.aborted = aborted_;
        if (found_) result.witness_colors = eng_.colors;
        for (auto it = applied.rbegin(); it != applied.rend(); ++it) eng_.undo(*it);
        return result;
    }

private:
    bool dfs(i64 idx) {
        if (idx == eng_.m) {
            found_ = true;
            return true;
        }
        for (std::uint8_t color : {std::uint8_t{1}, std::uint8_t{0}}) {
            ++local_nodes_;
            if ((local_nodes_ & 0x1FFF) == 0) {
                if (!flags_.charge(0x2000)) {
                    aborted_ = true;
                    return true;
                }
                if (abort_above_ && abort_above_->load(std::memory_order_relaxed) < task_index_) {
                    aborted_ = true;
                    return true;
                }
            }
            if (eng_.assign(idx, color)) continue;  // completed pattern: branch dies
            const bool done = dfs(idx + 1);
            eng_.undo(color);
            if (done) return true;
        }
        return false;
    }

    LevelEngine& eng_;
    StopFlags& flags_;
    bool found_ = false;
    bool aborted_ = false;
    std::uint64_t local_nodes_ = 0;
    const std::atomic<int>* abort_above_ = nullptr;
    int task_index_ = 0;
    int abort_below_ = 0;
};

struct LevelOutcome {
    bool closed = false;  // no avoiding coloring exists
    std::optional<OrderedColoring> witness;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

LevelOutcome run_level(int n, const PatternSpec& red, const PatternSpec& blue,
                       const SearchOptions& opts, StopFlags& flags) {
    const int k = pattern_uniformity(red);
    const i64 m = binomial(n, k);
    LevelOutcome out;
    if (static_cast<std::uint64_t>(m) > opts.node_budget) {
        out.budget_hit = true;
        return out;
    }
    BinomialTable bt(std::max(n, k) + 1, k + 1);
    CompletionChecker red_chk(red), blue_chk(blue);
    const auto* rp = std::get_if<PathPower>(&red);
    const auto* bp = std::get_if<PathPower>(&blue);
    const int red_path_s = (rp && rp->l == 1 && rp->s >= 2) ? rp->s : 0;
    const int blue_path_s = (bp && bp->l == 1 && bp->s >= 2) ? bp->s : 0;

    // patterns that embed with no room to spare in [n] can still complete;
    // patterns larger than n can never complete and every branch survives
    if (m == 0) {
        // no edges to color: the empty coloring avoids iff neither pattern
        // is an edgeless vertex set fitting in n
        const bool red_fits = pattern_edges(red).empty() && pattern_vertex_count(red) <= n;
        const bool blue_fits = pattern_edges(blue).empty() && pattern_vertex_count(blue) <= n;
        if (red_fits || blue_fits) {
            out.closed = true;
        } else {
            out.witness = OrderedColoring(k, n);
        }
        out.nodes = 1;
        return out;
    }

    const i64 split = std::min<i64>(opts.split_depth, m);

    // phase 1: enumerate alive prefixes of length `split` in DFS order
    LevelEngine prefix_engine(n, k, m, bt, red_chk, blue_chk, red_path_s, blue_path_s);
    std::vector<std::vector<std::uint8_t>> prefixes;
    std::uint64_t prefix_nodes = 0;
    bool budget_hit = false;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(split), 0);
    const std::function<void(i64)> enumerate = [&](i64 idx) {
        if (budget_hit) return;
        if (idx == split) {
            prefixes.emplace_back(cur.begin(), cur.end());
            return;
        }
        for (std::uint8_t color : {std::uint8_t{1}, std::uint8_t{0}}) {
            ++prefix_nodes;
            if ((prefix_nodes & 0x3FF) == 0 && !flags.charge(0x400)) {
                budget_hit = true;
                return;
            }
            if (prefix_engine.assign(idx, color)) continue;
            cur[static_cast<std::size_t>(idx)] = color;
            enumerate(idx + 1);
            prefix_engine.undo(color);
            if (budget_hit) return;
        }
    };
    enumerate(0);
    out.nodes = prefix_nodes;
    if (budget_hit) {
        out.budget_hit = true;
        return out;
    }

    // phase 2: run subtree tasks in order; the first task (by index) finding
    // a witness decides, earlier tasks are witness-free and fully counted
    const int task_count = static_cast<int>(prefixes.size());
    std::vector<TaskResult> results(static_cast<std::size_t>(task_count));
    std::atomic<int> first_witness{task_count};
    std::atomic<int> next_task{0};

    const auto worker = [&] {
        while (true) {
            const int t = next_task.fetch_add(1);
            if (t >= task_count) return;
            if (t > first_witness.load()) {
                results[static_cast<std::size_t>(t)].aborted = true;
                continue;
            }
            LevelEngine engine(n, k, m, bt, red_chk, blue_chk, red_path_s, blue_path_s);
            SubtreeRunner runner(engine, flags, task_count);
            auto res = runner.run(prefixes[static_cast<std::size_t>(t)], split, &first_witness, t);
            if (res.witness_found) {
                int cur_first = first_witness.load();
                while (t < cur_first && !first_witness.compare_exchange_weak(cur_first, t)) {
                }
            }
            results[static_cast<std::size_t>(t)] = std::move(res);
        }
    };

    if (opts.threads <= 1 || task_count <= 1) {
        // identical semantics, sequential; stop after the first witness task
        for (int t = 0; t < task_count; ++t) {
            if (t > first_witness.load()) break;
            LevelEngine engine(n, k, m, bt, red_chk, blue_chk, red_path_s, blue_path_s);
            SubtreeRunner runner(engine, flags, task_count);
            auto res = runner.run(prefixes[static_cast<std::size_t>(t)], split, nullptr, t);
            if (res.aborted) {
                out.budget_hit = true;
                return out;
            }
            if (res.witness_found) first_witness.store(t);
            results[static_cast<std::size_t>(t)] = std::move(res);
            if (res.witness_found) break;
        }
    } else {
        std::vector<std::thread> pool;
        const int nthreads = std::min(opts.threads, std::max(task_count, 1));
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (flags.stop.load()) {
            out.budget_hit = true;
            return out;
        }
    }

    const int fw = first_witness.load();
    if (fw < task_count) {
        for (int t = 0; t < fw; ++t) out.nodes += results[static_cast<std::size_t>(t)].nodes;
        out.nodes += results[static_cast<std::size_t>(fw)].nodes;
        OrderedColoring witness(k, n);
        const auto& wc = results[static_cast<std::size_t>(fw)].witness_colors;
        for (i64 r = 0; r < m; ++r)
            if (wc[static_cast<std::size_t>(r)]) witness.set_at(r, Color::Red);
        out.witness = std::move(witness);
    } else {
        for (const auto& res : results) {
            if (res.aborted) {
                out.budget_hit = true;
                return out;
            }
            out.nodes += res.nodes;
        }
        out.closed = true;
    }
    return out;
}

}  // namespace

bool verify_avoidance(const OrderedColoring& c, const PatternSpec& p, Color color) {
    return !detect::find_pattern(c, p, color).has_value();
}

SearchResult exact_ordered_ramsey(const PatternSpec& red, const PatternSpec& blue,
                                  const SearchOptions& opts) {
    const int k = pattern_uniformity(red);
    if (k != pattern_uniformity(blue))
        throw std::invalid_argument("exact_ordered_ramsey: patterns must share uniformity");

    const auto started = Clock::now();

    // Edgeless patterns embed into any sufficiently long vertex range, so
    // the value is the smaller edgeless vertex count; the witness colors
    // everything with that pattern's color, which rules the other one out.
    const bool red_edgeless = pattern_edges(red).empty();
    const bool blue_edgeless = pattern_edges(blue).empty();
    if (red_edgeless || blue_edgeless) {
        int value = 0;
        Color fill = Color::Red;
        if (red_edgeless && (!blue_edgeless || pattern_vertex_count(red) <= pattern_vertex_count(blue))) {
            value = pattern_vertex_count(red);
            fill = Color::Red;
        } else {
            value = pattern_vertex_count(blue);
            fill = Color::Blue;
        }
        OrderedColoring witness(k, value - 1, fill);
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        return SearchResult{value, std::move(witness), 0, elapsed, true};
    }

    StopFlags flags;
    flags.node_budget = opts.node_budget;
    flags.deadline = started + opts.time_budget;

    std::optional<OrderedColoring> prev_witness = OrderedColoring(k, 0);
    int start_n = 1;

    // lower-bound seeding: a verified block coloring skips the small levels
    const auto* rp = std::get_if<PathPower>(&red);
    const auto* bp = std::get_if<PathPower>(&blue);
    if (rp && bp && rp->l == 1 && bp->l == 1 && rp->s >= 2 && bp->s >= 2) {
        auto seed = construct::build_block_coloring(rp->s, bp->s, false);
        if (verify_avoidance(seed, red, Color::Red) && verify_avoidance(seed, blue, Color::Blue)) {
            start_n = seed.vertex_count() + 1;
            prev_witness = std::move(seed);
        }
    }

    std::uint64_t total_nodes = 0;
    for (int n = start_n;; ++n) {
        auto level = run_level(n, red, blue, opts, flags);
        total_nodes += level.nodes;
        if (level.budget_hit) {
            throw budget_exhausted_error(n, flags.nodes.load(), std::move(prev_witness));
        }
        if (level.closed) {
            const auto elapsed =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
            return SearchResult{n, std::move(*prev_witness), total_nodes, elapsed, true};
        }
        prev_witness = std::move(level.witness);
    }
}

MinK4Result min_mono_k4_exhaustive(int n) {
    if (n < 2 || n > 7)
        throw resource_error("min_mono_k4_exhaustive: only n <= 7 is enumerable (2^C(n,2))");
    const int edges = static_cast<int>(binomial(n, 2));
    // per 4-subset: mask of its six edge ranks
    std::vector<std::uint32_t> quad_masks;
    if (n >= 4) {
        std::vector<int> q{0, 1, 2, 3};
        do {
            std::uint32_t mask = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    const std::vector<int> e{q[static_cast<std::size_t>(i)],
                                             q[static_cast<std::size_t>(j)]};
                    mask |= std::uint32_t{1} << subset_rank(e);
                }
            quad_masks.push_back(mask);
        } while (next_subset_colex(q, n));
    }
    i64 best = -1;
    std::uint32_t best_mask = 0;
    const std::uint32_t limit_mask = edges >= 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << edges) - 1);
    for (std::uint64_t mask = 0; mask <= limit_mask; ++mask) {
        i64 count = 0;
        for (const auto qm : quad_masks) {
            const std::uint32_t bits = static_cast<std::uint32_t>(mask) & qm;
            if (bits == qm || bits == 0) ++count;
        }
        if (best < 0 || count < best) {
            best = count;
            best_mask = static_cast<std::uint32_t>(mask);
            if (best == 0) break;
        }
    }
    OrderedColoring witness(2, n);
    for (int r = 0; r < edges; ++r)
        if ((best_mask >> r) & 1) witness.set_at(r, Color::Red);
    return MinK4Result{best, std::move(witness), true};
}

namespace {

i64 k4_count_total(const OrderedColoring& c) {
    const auto [r, b] = detect::count_mono_cliques(c, 4);
    return r + b;
}

// mono K4s through edge (u,v) in the edge's color, coloring taken as-is
i64 k4_through_edge(const OrderedColoring& c, int u, int v, Color col) {
    const int n = c.vertex_count();
    i64 count = 0;
    std::vector<int> e(2);
    const auto edge_col = [&](int a, int b) {
        e[0] = std::min(a, b);
        e[1] = std::max(a, b);
        return c.color(e);
    };
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (edge_col(u, w) != col || edge_col(v, w) != col) continue;
        for (int x = w + 1; x < n; ++x) {
            if (x == u || x == v) continue;
            if (edge_col(u, x) != col || edge_col(v, x) != col) continue;
            if (edge_col(w, x) == col) ++count;
        }
    }
    return count;
}

}  // namespace

MinK4Result min_mono_k4_heuristic(int n, int seeds, int iterations, std::uint64_t seed) {
    if (n < 2 || n > 64) throw resource_error("min_mono_k4_heuristic: need 2 <= n <= 64");
    if (seeds < 1 || iterations < 0)
        throw std::invalid_argument("min_mono_k4_heuristic: need seeds >= 1, iterations >= 0");
    const i64 edges = binomial(n, 2);
    std::mt19937_64 master(seed);

    std::optional<OrderedColoring> best;
    i64 best_count = -1;
    for (int restart = 0; restart < seeds; ++restart) {
        OrderedColoring cur = random_coloring(2, n, master());
        i64 cur_count = k4_count_total(cur);
        for (int it = 0; it < iterations; ++it) {
            i64 best_delta = 0;
            i64 best_edge = -1;
            for (i64 r = 0; r < edges; ++r) {
                const auto sub = subset_unrank(r, 2);
                const Color col = cur.color_at(r);
                const i64 before = k4_through_edge(cur, sub[0], sub[1], col);
                cur.set_at(r, opposite(col));
                const i64 after = k4_through_edge(cur, sub[0], sub[1], opposite(col));
                cur.set_at(r, col);
                const i64 delta = after - before;
                if (delta < best_delta) {
                    best_delta = delta;
                    best_edge = r;
                }
            }
            if (best_edge < 0) break;
            cur.set_at(best_edge, opposite(cur.color_at(best_edge)));
            cur_count += best_delta;
        }
        if (best_count < 0 || cur_count < best_count) {
            best_count = cur_count;
            best = std::move(cur);
        }
    }
    return MinK4Result{best_count, std::move(*best), false};
}

}  // namespace oramsey::search
