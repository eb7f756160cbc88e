#pragma once

#include <span>
#include <utility>

#include "oramsey/coloring.hpp"

namespace oramsey::construct {

// All generators self-verify through the detectors before returning and
// throw verification_error if the construction violates its own avoidance
// contract.  Passing verify = false skips the check (benchmarking only;
// callers must mark emitted files unverified).

// (s-1)(n-1) vertices in n-1 consecutive blocks of size s-1; within-block
// edges red, cross-block edges blue.  No red P_s, no blue P_n.
OrderedColoring build_block_coloring(int s, int n, bool verify = true);

// 2n-3 vertices as twin pairs (2i, 2i+1), i = 0..n-3, plus a final vertex.
// A triple is red iff it contains a twin pair and a strictly larger vertex.
// No blue tight P_n, no 4-set with >= 3 red triples.
OrderedColoring build_eh_b_lower(int n, bool verify = true);

// Recursive 4-uniform coloring on 2^(n-2) vertices; crossing 4-sets are red
// iff split 2+2 between the halves.  No blue tight P_n, no 5-set with >= 4
// red edges.  Guarded to n <= 9 (verification cost grows as C(2^(n-2), 5)).
OrderedColoring build_eh_c_lower(int n, bool verify = true, int threads = 1);

// Edge (i,j), i<j, red iff seq[i] < seq[j]: red ordered paths are increasing
// subsequences, blue ones decreasing.
OrderedColoring sequence_to_coloring(std::span<const double> seq);

// Exact (longest increasing, longest decreasing) subsequence lengths.
std::pair<int, int> longest_monotone(std::span<const double> seq);

}  // namespace oramsey::construct
