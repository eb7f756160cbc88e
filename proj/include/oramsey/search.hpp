#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "oramsey/coloring.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/pattern.hpp"

namespace oramsey::search {

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000'000ULL;
    std::chrono::milliseconds time_budget = std::chrono::hours(24);
    int threads = 1;
    // The DFS splits on the first split_depth edge decisions into
    // independent subtrees; results are identical for any thread count.
    int split_depth = 10;
};

struct SearchResult {
    int value = 0;
    OrderedColoring witness;  // avoiding coloring on value-1 vertices
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds wall_time{0};
    bool certified = true;
};

// Raised when the node or wall-clock budget runs out; carries the certified
// bounds known so far (lower is witness-backed; upper is absent).
class budget_exhausted_error : public resource_error {
public:
    budget_exhausted_error(int lower_bound, std::uint64_t nodes,
                           std::optional<OrderedColoring> witness)
        : resource_error("search: budget exhausted; value >= " + std::to_string(lower_bound)),
          lower(lower_bound), nodes_explored(nodes), best_witness(std::move(witness)) {}

    int lower;
    std::uint64_t nodes_explored;
    std::optional<OrderedColoring> best_witness;  // on lower-1 vertices
};

// Minimum N such that every coloring of the k-subsets of {0..N-1} contains
// a red copy of `red` or a blue copy of `blue`.  Edges are assigned in
// colex order; a branch dies as soon as a completed monochromatic copy
// appears among the fully colored subsets.
SearchResult exact_ordered_ramsey(const PatternSpec& red, const PatternSpec& blue,
                                  const SearchOptions& opts = {});

// True iff the coloring avoids the pattern in the given color.
bool verify_avoidance(const OrderedColoring& c, const PatternSpec& p, Color color);

struct MinK4Result {
    i64 count = 0;
    OrderedColoring witness;
    bool exact = false;
};

// Minimum of red+blue monochromatic K4 counts over all colorings of K_N.
// Exhaustive up to N = 7; the heuristic (restarts + single-edge-flip hill
// descent) reports an upper bound for N <= 64.
MinK4Result min_mono_k4_exhaustive(int n);
MinK4Result min_mono_k4_heuristic(int n, int seeds, int iterations, std::uint64_t seed);

}  // namespace oramsey::search
