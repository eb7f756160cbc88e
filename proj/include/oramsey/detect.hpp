#pragma once

#include <optional>
#include <utility>

#include "oramsey/certificate.hpp"
#include "oramsey/coloring.hpp"

namespace oramsey::detect {

struct Options {
    // Refuse DP instances whose state table would exceed this many cells.
    i64 state_limit = 100'000'000;
};

// All detectors are pure functions of immutable inputs and return the
// lexicographically smallest witness (vertex-list comparison), or nullopt
// iff no witness exists.

// Monochromatic P_s^l in a graph (k = 2) coloring.
std::optional<Embedding> find_mono_path_power(const OrderedColoring& c, int l, int s, Color color,
                                              const Options& opts = {});

// Monochromatic k-uniform tight path on s vertices.  s < k denotes an
// edgeless vertex set and matches whenever s vertices exist.
std::optional<Embedding> find_mono_tight_path(const OrderedColoring& c, int s, Color color,
                                              const Options& opts = {});

// Monochromatic broom B_{a,m}; requires a >= k-1.
std::optional<Embedding> find_mono_broom(const OrderedColoring& c, int a, int m, Color color,
                                         const Options& opts = {});

// Monochromatic complete k-graph on s vertices.
std::optional<Embedding> find_mono_clique(const OrderedColoring& c, int s, Color color,
                                          const Options& opts = {});

// Dispatch on a PatternSpec.
std::optional<Embedding> find_pattern(const OrderedColoring& c, const PatternSpec& p, Color color,
                                      const Options& opts = {});

// Exact (red, blue) counts of monochromatic K_q vertex sets, q in {3,4};
// k = 2 only.  Edge-wise neighborhood intersection over bit rows.
std::pair<i64, i64> count_mono_cliques(const OrderedColoring& c, int q);

// First (k+1)-subset in colex order inducing a violation of the given kind,
// with every red k-subset inside it listed.  threads > 1 splits the scan by
// largest element; the result is the colex-smallest hit regardless.
std::optional<Violation> find_violation(const OrderedColoring& c, const ViolationKind& kind,
                                        int threads = 1);

}  // namespace oramsey::detect
