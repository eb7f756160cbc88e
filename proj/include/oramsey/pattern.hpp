#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oramsey {

// Ordered target structures.  All vertex indices are positions in an
// increasing embedding list.

// P_s^l: vertices v_1 < ... < v_s, edges v_iv_j with |i-j| <= l.  k = 2.
struct PathPower {
    int l;
    int s;
    bool operator==(const PathPower&) const = default;
};

// k-uniform tight path on s vertices: edges are all windows of k
// consecutive vertices.  s < k means an edgeless vertex set.
struct TightPath {
    int k;
    int s;
    bool operator==(const TightPath&) const = default;
};

// B_{a,m}: tight path on a vertices plus m bristles, each forming an edge
// with the path's last k-1 vertices; bristles follow all path vertices.
struct Broom {
    int k;
    int a;
    int m;
    bool operator==(const Broom&) const = default;
};

// Complete k-graph on s vertices.
struct Clique {
    int k;
    int s;
    bool operator==(const Clique&) const = default;
};

using PatternSpec = std::variant<PathPower, TightPath, Broom, Clique>;

int pattern_uniformity(const PatternSpec& p);
int pattern_vertex_count(const PatternSpec& p);

// Edge set in position space: sorted index tuples over 0..V-1 where V is
// the pattern's vertex count.  Validates the pattern's parameter bounds.
std::vector<std::vector<int>> pattern_edges(const PatternSpec& p);

// One-token encodings: path:<l>:<s>, tight:<k>:<s>, broom:<k>:<a>:<m>,
// clique:<k>:<s>.
PatternSpec parse_pattern(std::string_view token);
std::string format_pattern(const PatternSpec& p);

}  // namespace oramsey
