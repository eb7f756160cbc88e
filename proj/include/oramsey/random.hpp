#pragma once

#include <cstdint>
#include <vector>

#include "oramsey/coloring.hpp"

namespace oramsey {

// Seeded generators used by tests, the acceptance suite and the CLI.
// Both draw raw words from std::mt19937_64, so outputs are identical on
// every platform.

OrderedColoring random_coloring(int k, int n, std::uint64_t seed);

// Fisher-Yates with explicit modular draws (std::shuffle is not portable).
std::vector<double> random_permutation(int length, std::uint64_t seed);

}  // namespace oramsey
