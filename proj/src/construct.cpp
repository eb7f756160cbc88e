#include "oramsey/construct.hpp"

#include <stdexcept>
#include <string>

#include "oramsey/detect.hpp"
#include "oramsey/errors.hpp"

namespace oramsey::construct {

namespace {

void require_avoids(const OrderedColoring& c, const PatternSpec& p, Color color,
                    const char* generator) {
    if (detect::find_pattern(c, p, color)) {
        throw verification_error(std::string(generator) + ": construction contains a " +
                                 color_name(color) + " " + format_pattern(p));
    }
}

void require_no_violation(const OrderedColoring& c, const ViolationKind& kind, int threads,
                          const char* generator) {
    if (detect::find_violation(c, kind, threads)) {
        throw verification_error(std::string(generator) +
                                 ": construction contains a red-edge violation");
    }
}

}  // namespace

OrderedColoring build_block_coloring(int s, int n, bool verify) {
    if (s < 2 || n < 2) throw std::invalid_argument("build_block_coloring: need s, n >= 2");
    const int vertices = (s - 1) * (n - 1);
    OrderedColoring c(2, vertices);
    i64 rank = 0;
    for (int v = 1; v < vertices; ++v)
        for (int u = 0; u < v; ++u, ++rank)
            if (u / (s - 1) == v / (s - 1)) c.set_at(rank, Color::Red);
    if (verify) {
        require_avoids(c, PathPower{1, s}, Color::Red, "build_block_coloring");
        require_avoids(c, PathPower{1, n}, Color::Blue, "build_block_coloring");
    }
    return c;
}

OrderedColoring build_eh_b_lower(int n, bool verify) {
    if (n < 3) throw std::invalid_argument("build_eh_b_lower: need n >= 3");
    const int vertices = 2 * n - 3;
    OrderedColoring c(3, vertices);
    std::vector<int> t(3);
    i64 rank = 0;
    for (t[2] = 2; t[2] < vertices; ++t[2])
        for (t[1] = 1; t[1] < t[2]; ++t[1])
            for (t[0] = 0; t[0] < t[1]; ++t[0], ++rank) {
                // red iff the two smallest entries are a twin pair (2i, 2i+1)
                if (t[0] % 2 == 0 && t[1] == t[0] + 1) c.set_at(rank, Color::Red);
            }
    if (verify) {
        require_avoids(c, TightPath{3, n}, Color::Blue, "build_eh_b_lower");
        require_no_violation(c, {ViolationKind::Type::TRed, 3}, 1, "build_eh_b_lower");
    }
    return c;
}

namespace {

Color eh_c_color(const int* q, int lo, int size) {
    // q: four sorted vertices inside [lo, lo+size)
    while (true) {
        const int mid = lo + size / 2;
        int below = 0;
        for (int i = 0; i < 4; ++i)
            if (q[i] < mid) ++below;
        if (below == 2) return Color::Red;
        if (below == 1 || below == 3) return Color::Blue;
        size /= 2;
        if (below == 0) lo = mid;
    }
}

}  // namespace

OrderedColoring build_eh_c_lower(int n, bool verify, int threads) {
    if (n < 2) throw std::invalid_argument("build_eh_c_lower: need n >= 2");
    if (n > 9)
        throw resource_error("build_eh_c_lower: n > 9 refused (verification scans C(2^(n-2),5) "
                             "5-sets)");
    const int vertices = 1 << (n - 2);
    OrderedColoring c(4, vertices);
    if (vertices >= 4) {
        std::vector<int> q(4);
        for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(i)] = i;
        i64 rank = 0;
        do {
            if (eh_c_color(q.data(), 0, vertices) == Color::Red) c.set_at(rank, Color::Red);
            ++rank;
        } while (next_subset_colex(q, vertices));
    }
    if (verify) {
        require_avoids(c, TightPath{4, n}, Color::Blue, "build_eh_c_lower");
        require_no_violation(c, {ViolationKind::Type::TRed, 4}, threads, "build_eh_c_lower");
    }
    return c;
}

OrderedColoring sequence_to_coloring(std::span<const double> seq) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(j)])
                throw std::invalid_argument("sequence_to_coloring: entries must be distinct");
    OrderedColoring c(2, n);
    i64 rank = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++rank)
            if (seq[static_cast<std::size_t>(u)] < seq[static_cast<std::size_t>(v)])
                c.set_at(rank, Color::Red);
    return c;
}

std::pair<int, int> longest_monotone(std::span<const double> seq) {
    const int n = static_cast<int>(seq.size());
    int lis = 0, lds = 0;
    std::vector<int> up(static_cast<std::size_t>(n), 1), down(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (seq[static_cast<std::size_t>(j)] < seq[static_cast<std::size_t>(i)])
                up[static_cast<std::size_t>(i)] =
                    std::max(up[static_cast<std::size_t>(i)], up[static_cast<std::size_t>(j)] + 1);
            else if (seq[static_cast<std::size_t>(j)] > seq[static_cast<std::size_t>(i)])
                down[static_cast<std::size_t>(i)] = std::max(down[static_cast<std::size_t>(i)],
                                                             down[static_cast<std::size_t>(j)] + 1);
        }
        lis = std::max(lis, up[static_cast<std::size_t>(i)]);
        lds = std::max(lds, down[static_cast<std::size_t>(i)]);
    }
    return {lis, lds};
}

}  // namespace oramsey::construct
