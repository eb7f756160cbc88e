#pragma once

// Brute-force reference implementations used only by tests.  These stay
// independent of the library's DP/backtracking paths: everything here is
// plain enumeration over vertex lists.

#include <optional>
#include <vector>

#include "oramsey/certificate.hpp"
#include "oramsey/coloring.hpp"
#include "oramsey/pattern.hpp"

namespace naive {

using oramsey::Color;
using oramsey::OrderedColoring;
using oramsey::PatternSpec;

// Lex-first embedding by trying every increasing vertex list.
inline std::optional<std::vector<int>> find_pattern(const OrderedColoring& c,
                                                    const PatternSpec& p, Color color) {
    const int v_count = oramsey::pattern_vertex_count(p);
    const int n = c.vertex_count();
    if (v_count > n) return std::nullopt;
    const auto edges = oramsey::pattern_edges(p);
    std::vector<int> pick(static_cast<std::size_t>(v_count));
    std::vector<int> mapped;
    std::optional<std::vector<int>> best;

    const std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
        if (pos == v_count) {
            for (const auto& e : edges) {
                mapped.clear();
                for (int idx : e) mapped.push_back(pick[static_cast<std::size_t>(idx)]);
                if (c.color(mapped) != color) return false;
            }
            best = pick;
            return true;
        }
        for (int v = from; v <= n - (v_count - pos); ++v) {
            pick[static_cast<std::size_t>(pos)] = v;
            if (rec(pos + 1, v + 1)) return true;
        }
        return false;
    };
    rec(0, 0);
    return best;
}

// Exact monochromatic K_q counts by q-subset enumeration (k = 2).
inline std::pair<long long, long long> count_mono_cliques(const OrderedColoring& c, int q) {
    const int n = c.vertex_count();
    long long red = 0, blue = 0;
    std::vector<int> pick(static_cast<std::size_t>(q));
    const std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == q) {
            bool all_red = true, all_blue = true;
            for (int i = 0; i < q && (all_red || all_blue); ++i)
                for (int j = i + 1; j < q; ++j) {
                    const std::vector<int> e{pick[static_cast<std::size_t>(i)],
                                             pick[static_cast<std::size_t>(j)]};
                    if (c.color(e) == Color::Red)
                        all_blue = false;
                    else
                        all_red = false;
                }
            if (all_red) ++red;
            if (all_blue) ++blue;
            return;
        }
        for (int v = from; v <= n - (q - pos); ++v) {
            pick[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return {red, blue};
}

// First violating (k+1)-subset in colex order.
inline std::optional<std::vector<int>> find_violation(const OrderedColoring& c,
                                                      const oramsey::ViolationKind& kind) {
    const int k = c.uniformity();
    const int n = c.vertex_count();
    if (n < k + 1) return std::nullopt;
    const int threshold = kind.type == oramsey::ViolationKind::Type::TRed ? kind.t : 3;
    std::vector<int> pick(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) pick[static_cast<std::size_t>(i)] = i;
    do {
        const auto reds = oramsey::red_subsets_within(c, pick);
        bool ok = static_cast<int>(reds.size()) >= threshold;
        if (ok && kind.type == oramsey::ViolationKind::Type::H3) {
            const std::vector<int> smallest(pick.begin(), pick.end() - 1);
            ok = std::find(reds.begin(), reds.end(), smallest) != reds.end();
        }
        if (ok) return pick;
    } while (oramsey::next_subset_colex(pick, n));
    return std::nullopt;
}

// Longest monotone subsequence lengths by subset enumeration (n <= ~20).
inline std::pair<int, int> longest_monotone(const std::vector<double>& seq) {
    const int n = static_cast<int>(seq.size());
    int lis = 0, lds = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool inc = true, dec = true;
        int len = 0;
        double prev = 0;
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1)) continue;
            if (len > 0) {
                if (seq[static_cast<std::size_t>(i)] < prev) inc = false;
                if (seq[static_cast<std::size_t>(i)] > prev) dec = false;
            }
            prev = seq[static_cast<std::size_t>(i)];
            ++len;
        }
        if (inc) lis = std::max(lis, len);
        if (dec) lds = std::max(lds, len);
    }
    return {lis, lds};
}

}  // namespace naive
