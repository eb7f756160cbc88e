#include "oramsey/extract.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "oramsey/detect.hpp"

namespace oramsey::extract {

namespace {

using nlohmann::json;

struct Tracer {
    std::vector<std::string>* out = nullptr;
    void operator()(const std::string& line) const {
        if (out) out->push_back(line);
    }
};

json vertices_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

Embedding map_vertices(Embedding e, std::span<const int> vmap) {
    for (auto& v : e.vertices) v = vmap[static_cast<std::size_t>(v)];
    return e;
}

std::vector<int> sorted_union(std::initializer_list<std::span<const int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

Violation make_violation(const OrderedColoring& c, ViolationKind kind, std::vector<int> verts) {
    auto red = red_subsets_within(c, verts);
    return Violation{kind, std::move(verts), std::move(red)};
}

ExtractOutcome with_trace(ExtractOutcome o, std::vector<std::string>&& trace) {
    o.trace = std::move(trace);
    return o;
}

// ---- square paths (k = 2) ---------------------------------------------

ExtractOutcome swap_outcome_colors(ExtractOutcome o) {
    if (o.kind == ExtractOutcome::Kind::Failure) return o;
    o.kind = o.kind == ExtractOutcome::Kind::RedCertificate ? ExtractOutcome::Kind::BlueCertificate
                                                            : ExtractOutcome::Kind::RedCertificate;
    if (o.certificate) {
        if (auto* emb = std::get_if<Embedding>(&*o.certificate)) emb->color = opposite(emb->color);
    }
    return o;
}

ExtractOutcome square_path_exact(const OrderedColoring& c, int a, int b,
                                 std::span<const int> labels, const Tracer& tr) {
    tr("exact DP on " + std::to_string(c.vertex_count()) + " vertices, targets (" +
       std::to_string(a) + "," + std::to_string(b) + ")");
    if (auto e = detect::find_mono_path_power(c, 2, a, Color::Red)) return ExtractOutcome::red(*e);
    if (auto e = detect::find_mono_path_power(c, 2, b, Color::Blue))
        return ExtractOutcome::blue(*e);
    json ctx = {{"check", "square-path-detectors"},
                {"vertices", vertices_json(labels)},
                {"a", a},
                {"b", b}};
    return ExtractOutcome::failure("exact-dp", ctx.dump());
}

ExtractOutcome square_path_impl(const OrderedColoring& c, int a, int b,
                                const SquarePathConfig& cfg, std::span<const int> labels,
                                const Tracer& tr) {
    const int n = c.vertex_count();
    if (a <= 2 || b <= 2 ||
        static_cast<i64>(n) < static_cast<i64>(cfg.min_recursion_size) * std::max(a, b))
        return square_path_exact(c, a, b, labels, tr);

    const auto [red4, blue4] = detect::count_mono_cliques(c, 4);
    tr("K4 census: red=" + std::to_string(red4) + " blue=" + std::to_string(blue4));
    if (blue4 > red4) {
        tr("blue majority, swapping colors and targets");
        return swap_outcome_colors(square_path_impl(c.flipped(), b, a, cfg, labels, tr));
    }
    if (red4 == 0) return square_path_exact(c, a, b, labels, tr);

    // red adjacency bit rows
    const std::size_t stride = static_cast<std::size_t>((n + 63) / 64);
    std::vector<std::uint64_t> adj(stride * static_cast<std::size_t>(n), 0);
    const auto row = [&](int v) { return adj.data() + static_cast<std::size_t>(v) * stride; };
    const auto test = [&](const std::uint64_t* r, int v) {
        return (r[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1;
    };
    {
        i64 rank = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++rank)
                if (c.color_at(rank) == Color::Red) {
                    row(u)[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
                    row(v)[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
                }
    }

    // middle pair maximizing the red-K4 count, ties to the lex-smallest pair
    int best_y1 = -1, best_y2 = -1;
    i64 best_count = 0;
    std::vector<std::uint64_t> lcand(stride), rcand(stride);
    for (int y1 = 0; y1 < n; ++y1) {
        for (int y2 = y1 + 1; y2 < n; ++y2) {
            if (!test(row(y1), y2)) continue;
            for (std::size_t w = 0; w < stride; ++w) {
                const std::uint64_t common = row(y1)[w] & row(y2)[w];
                lcand[w] = common;
                rcand[w] = common;
            }
            // lcand: x < y1; rcand: z > y2
            for (std::size_t w = static_cast<std::size_t>(y1 >> 6); w < stride; ++w) {
                std::uint64_t keep = 0;
                if (w == static_cast<std::size_t>(y1 >> 6))
                    keep = (std::uint64_t{1} << (y1 & 63)) - 1;
                lcand[w] &= keep;
            }
            for (std::size_t w = 0; w <= static_cast<std::size_t>(y2 >> 6); ++w) {
                std::uint64_t keep = ~std::uint64_t{0};
                if (w == static_cast<std::size_t>(y2 >> 6))
                    keep = (y2 & 63) == 63 ? 0 : ~((std::uint64_t{2} << (y2 & 63)) - 1);
                else if (w < static_cast<std::size_t>(y2 >> 6))
                    keep = 0;
                rcand[w] &= keep;
            }
            i64 count = 0;
            for (int x = 0; x < y1; ++x) {
                if (!test(lcand.data(), x)) continue;
                for (std::size_t w = 0; w < stride; ++w)
                    count += std::popcount(row(x)[w] & rcand[w]);
            }
            if (count > best_count) {
                best_count = count;
                best_y1 = y1;
                best_y2 = y2;
            }
        }
    }
    if (best_count == 0) return square_path_exact(c, a, b, labels, tr);

    const int y1 = best_y1, y2 = best_y2;
    // L: least vertices of red K4s with middle pair Y; R: greatest vertices
    std::vector<std::uint64_t> lmask(stride, 0), rmask(stride, 0);
    {
        for (std::size_t w = 0; w < stride; ++w) {
            const std::uint64_t common = row(y1)[w] & row(y2)[w];
            lcand[w] = common;
            rcand[w] = common;
        }
        for (std::size_t w = static_cast<std::size_t>(y1 >> 6); w < stride; ++w) {
            std::uint64_t keep = 0;
            if (w == static_cast<std::size_t>(y1 >> 6)) keep = (std::uint64_t{1} << (y1 & 63)) - 1;
            lcand[w] &= keep;
        }
        for (std::size_t w = 0; w <= static_cast<std::size_t>(y2 >> 6); ++w) {
            std::uint64_t keep = ~std::uint64_t{0};
            if (w == static_cast<std::size_t>(y2 >> 6))
                keep = (y2 & 63) == 63 ? 0 : ~((std::uint64_t{2} << (y2 & 63)) - 1);
            else if (w < static_cast<std::size_t>(y2 >> 6))
                keep = 0;
            rcand[w] &= keep;
        }
        for (int x = 0; x < y1; ++x) {
            if (!test(lcand.data(), x)) continue;
            bool extends = false;
            for (std::size_t w = 0; w < stride && !extends; ++w) {
                const std::uint64_t hit = row(x)[w] & rcand[w];
                if (hit) {
                    extends = true;
                    for (std::size_t w2 = 0; w2 < stride; ++w2) rmask[w2] |= row(x)[w2] & rcand[w2];
                }
            }
            if (extends) lmask[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
        }
    }
    std::vector<int> lverts, rverts;
    for (int v = 0; v < n; ++v) {
        if (test(lmask.data(), v)) lverts.push_back(v);
        if (test(rmask.data(), v)) rverts.push_back(v);
    }
    tr("middle pair (" + std::to_string(labels[static_cast<std::size_t>(y1)]) + "," +
       std::to_string(labels[static_cast<std::size_t>(y2)]) + ") covers " +
       std::to_string(best_count) + " red K4s; |L|=" + std::to_string(lverts.size()) +
       " |R|=" + std::to_string(rverts.size()));

    const auto sub_labels = [&](const std::vector<int>& verts) {
        std::vector<int> out;
        out.reserve(verts.size());
        for (int v : verts) out.push_back(labels[static_cast<std::size_t>(v)]);
        return out;
    };

    const auto recurse = [&](const std::vector<int>& verts, int target_a) {
        const auto sub = sub_labels(verts);
        auto out = square_path_impl(c.induced(verts), target_a, b, cfg, sub, tr);
        if (out.certificate) {
            if (auto* emb = std::get_if<Embedding>(&*out.certificate))
                *emb = map_vertices(std::move(*emb), verts);
        }
        return out;
    };

    auto left = recurse(lverts, a / 2);
    if (left.kind == ExtractOutcome::Kind::BlueCertificate) return left;
    if (left.is_failure()) return left;
    auto right = recurse(rverts, a - a / 2);
    if (right.kind == ExtractOutcome::Kind::BlueCertificate) return right;
    if (right.is_failure()) return right;

    // glue: red-path(L) + y1 + y2 + red-path(R); vertices in L precede y1 and
    // vertices in R follow y2, so index distance across the middle is >= 3
    std::vector<int> glued = std::get<Embedding>(*left.certificate).vertices;
    glued.push_back(y1);
    glued.push_back(y2);
    const auto& rv = std::get<Embedding>(*right.certificate).vertices;
    glued.insert(glued.end(), rv.begin(), rv.end());
    glued.resize(static_cast<std::size_t>(a));
    return ExtractOutcome::red(Embedding{PathPower{2, a}, Color::Red, std::move(glued)});
}

}  // namespace

bool rational_less(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

ExtractOutcome extract_square_path(const OrderedColoring& c, int a, int b,
                                   const SquarePathConfig& cfg, bool want_trace) {
    if (c.uniformity() != 2)
        throw std::invalid_argument("extract_square_path: coloring must have uniformity 2");
    if (a < 2 || b < 2) throw std::invalid_argument("extract_square_path: need a, b >= 2");
    if (cfg.alpha.den <= 0 || cfg.epsilon.den <= 0 || cfg.alpha.num <= 0 || cfg.epsilon.num <= 0 ||
        !rational_less(cfg.epsilon, cfg.alpha) || !rational_less(cfg.alpha, Rational{1, 1}))
        throw std::invalid_argument("extract_square_path: need 0 < epsilon < alpha < 1");
    if (cfg.min_recursion_size < 4)
        throw std::invalid_argument("extract_square_path: min_recursion_size must be >= 4");

    std::vector<std::string> trace;
    Tracer tr{want_trace ? &trace : nullptr};
    std::vector<int> labels(static_cast<std::size_t>(c.vertex_count()));
    for (int i = 0; i < c.vertex_count(); ++i) labels[static_cast<std::size_t>(i)] = i;
    auto out = square_path_impl(c, a, b, cfg, labels, tr);
    return with_trace(std::move(out), std::move(trace));
}

// ---- K4^3 vs tight path (k = 3) ---------------------------------------

ExtractOutcome extract_k4_or_tight_path(const OrderedColoring& c, int n, int m, bool want_trace) {
    if (c.uniformity() != 3)
        throw std::invalid_argument("extract_k4_or_tight_path: coloring must have uniformity 3");
    if (n < 3 || m < 1) throw std::invalid_argument("extract_k4_or_tight_path: need n >= 3, m >= 1");
    const int nverts = c.vertex_count();
    std::vector<std::string> trace;
    Tracer tr{want_trace ? &trace : nullptr};

    const auto chi = [&](int x, int y, int z) {
        const std::vector<int> t{x, y, z};
        return c.color(t);
    };

    // base: a pair with >= m blue extensions inside the first 12m vertices
    std::vector<int> path, bristles;
    {
        const int bound =
            static_cast<int>(std::min(static_cast<i64>(12) * m, static_cast<i64>(nverts)));
        bool found = false;
        for (int v1 = 0; v1 < bound && !found; ++v1) {
            for (int v2 = v1 + 1; v2 < bound && !found; ++v2) {
                std::vector<int> ws;
                for (int w = v2 + 1; w < bound && static_cast<int>(ws.size()) < m; ++w)
                    if (chi(v1, v2, w) == Color::Blue) ws.push_back(w);
                if (static_cast<int>(ws.size()) >= m) {
                    path = {v1, v2};
                    bristles = std::move(ws);
                    found = true;
                }
            }
        }
        if (!found) {
            tr("base: no pair with " + std::to_string(m) + " blue extensions in [0," +
               std::to_string(bound) + "); falling back to a direct red-K4 search");
            if (auto k4 = detect::find_mono_clique(c, 4, Color::Red))
                return with_trace(ExtractOutcome::red(*k4), std::move(trace));
            json ctx = {{"refuted",
                         json::array({{{"check", "broom"},
                                       {"prefix", bound},
                                       {"a", 2},
                                       {"m", m},
                                       {"color", "blue"}},
                                      {{"check", "clique"}, {"s", 4}, {"color", "red"}}})}};
            return with_trace(ExtractOutcome::failure("base-no-broom", ctx.dump()),
                              std::move(trace));
        }
        tr("base broom: path [" + std::to_string(path[0]) + "," + std::to_string(path[1]) + "], " +
           std::to_string(m) + " bristles");
    }

    while (true) {
        const int a = static_cast<int>(path.size());
        if (a >= n) {
            path.resize(static_cast<std::size_t>(n));
            return with_trace(
                ExtractOutcome::blue(Embedding{TightPath{3, n}, Color::Blue, std::move(path)}),
                std::move(trace));
        }
        const i64 cap64 = std::min(static_cast<i64>(6) * (a + 1) * m, static_cast<i64>(nverts));
        const int cap = static_cast<int>(cap64);
        const int anchor = path.back();

        // auxiliary coloring of bristle pairs through the path's last vertex
        OrderedColoring phi(2, m);
        {
            i64 rank = 0;
            for (int j = 1; j < m; ++j)
                for (int i = 0; i < j; ++i, ++rank)
                    if (chi(anchor, bristles[static_cast<std::size_t>(i)],
                            bristles[static_cast<std::size_t>(j)]) == Color::Red)
                        phi.set_at(rank, Color::Red);
        }

        if (auto h = detect::find_mono_path_power(phi, 2, n, Color::Red)) {
            std::vector<int> z;
            for (int idx : h->vertices) z.push_back(bristles[static_cast<std::size_t>(idx)]);
            tr("phi has a red square path on bristles " +
               json(std::vector<int>(z.begin(), z.end())).dump());
            for (int i = 0; i + 2 < n; ++i) {
                if (chi(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(i) + 1],
                        z[static_cast<std::size_t>(i) + 2]) == Color::Red) {
                    // three red edges through the anchor plus the red triple
                    std::vector<int> verts{anchor, z[static_cast<std::size_t>(i)],
                                           z[static_cast<std::size_t>(i) + 1],
                                           z[static_cast<std::size_t>(i) + 2]};
                    return with_trace(
                        ExtractOutcome::red(Embedding{Clique{3, 4}, Color::Red, std::move(verts)}),
                        std::move(trace));
                }
            }
            return with_trace(ExtractOutcome::blue(Embedding{TightPath{3, n}, Color::Blue, z}),
                              std::move(trace));
        }
        if (auto h = detect::find_mono_path_power(phi, 2, n, Color::Blue)) {
            std::vector<int> z;
            for (int idx : h->vertices) z.push_back(bristles[static_cast<std::size_t>(idx)]);
            tr("phi has a blue square path on bristles " +
               json(std::vector<int>(z.begin(), z.end())).dump());
            bool grew = false;
            for (int i = 0; i + 2 < n && !grew; ++i) {
                const int zi = z[static_cast<std::size_t>(i)];
                const int zj = z[static_cast<std::size_t>(i) + 1];
                const int zk = z[static_cast<std::size_t>(i) + 2];
                const std::array<std::pair<int, int>, 3> pairs{{{zi, zj}, {zj, zk}, {zi, zk}}};
                std::array<int, 3> blue_counts{0, 0, 0};
                for (std::size_t pi = 0; pi < pairs.size() && !grew; ++pi) {
                    const auto [p, q] = pairs[pi];
                    std::vector<int> ys;
                    int count = 0;
                    for (int y = q + 1; y < cap; ++y) {
                        if (y == p || y == q) continue;
                        if (chi(p, q, y) == Color::Blue) {
                            ++count;
                            if (static_cast<int>(ys.size()) < m) ys.push_back(y);
                        }
                    }
                    blue_counts[pi] = count;
                    if (count >= m) {
                        std::vector<int> new_path(path.begin() + 1, path.end());
                        new_path.push_back(p);
                        new_path.push_back(q);
                        path = std::move(new_path);
                        bristles = std::move(ys);
                        tr("broom grows through bristle pair (" + std::to_string(p) + "," +
                           std::to_string(q) + "), path length " + std::to_string(path.size()));
                        grew = true;
                    }
                }
                if (grew) break;
                // every pair has < m blue extensions; a fresh vertex must be
                // red with all three pairs
                const int fresh_lo =
                    static_cast<int>(std::min(static_cast<i64>(6) * a * m, cap64));
                bool settled = false;
                for (int y = fresh_lo; y < cap && !settled; ++y) {
                    if (chi(zi, zj, y) == Color::Red && chi(zi, zk, y) == Color::Red &&
                        chi(zj, zk, y) == Color::Red) {
                        if (chi(zi, zj, zk) == Color::Red) {
                            std::vector<int> verts{zi, zj, zk, y};
                            return with_trace(
                                ExtractOutcome::red(
                                    Embedding{Clique{3, 4}, Color::Red, std::move(verts)}),
                                std::move(trace));
                        }
                        settled = true;  // triple proven blue
                    }
                }
                if (!settled) {
                    json ctx = {{"check", "pigeonhole"},
                                {"triple", json::array({zi, zj, zk})},
                                {"pair_blue_counts",
                                 json::array({blue_counts[0], blue_counts[1], blue_counts[2]})},
                                {"fresh", json::array({fresh_lo, cap})},
                                {"m", m}};
                    return with_trace(
                        ExtractOutcome::failure("pigeonhole-exhausted", ctx.dump()),
                        std::move(trace));
                }
            }
            if (grew) continue;
            return with_trace(ExtractOutcome::blue(Embedding{TightPath{3, n}, Color::Blue, z}),
                              std::move(trace));
        }
        json ctx = {{"check", "path-power-phi"},
                    {"anchor", anchor},
                    {"bristles", vertices_json(bristles)},
                    {"l", 2},
                    {"s", n}};
        return with_trace(ExtractOutcome::failure("phi-no-square-path", ctx.dump()),
                          std::move(trace));
    }
}

// ---- H_k(3) vs tight path ----------------------------------------------

ExtractOutcome extract_h3_or_path(const OrderedColoring& c, int n, bool want_trace) {
    const int k = c.uniformity();
    if (k < 3) throw std::invalid_argument("extract_h3_or_path: need uniformity >= 3");
    if (n <= k) throw std::invalid_argument("extract_h3_or_path: need n > k");
    const int nverts = c.vertex_count();
    std::vector<std::string> trace;
    Tracer tr{want_trace ? &trace : nullptr};

    if (nverts < n + 1) {
        json ctx = {{"check", "base-size"}, {"needed", n + 1}, {"have", nverts}};
        return with_trace(ExtractOutcome::failure("base-too-small", ctx.dump()), std::move(trace));
    }
    std::vector<int> path{0};
    std::vector<int> bristles;
    for (int v = 1; v <= n; ++v) bristles.push_back(v);

    std::vector<int> edge;
    const auto chi_set = [&](std::span<const int> s_part, std::span<const int> p_part, int extra) {
        edge.clear();
        edge.insert(edge.end(), s_part.begin(), s_part.end());
        edge.insert(edge.end(), p_part.begin(), p_part.end());
        if (extra >= 0) edge.push_back(extra);
        return c.color(edge);
    };

    while (true) {
        const int a_cur = static_cast<int>(path.size());
        if (a_cur >= n) {
            path.resize(static_cast<std::size_t>(n));
            return with_trace(
                ExtractOutcome::blue(Embedding{TightPath{k, n}, Color::Blue, std::move(path)}),
                std::move(trace));
        }
        const i64 cap64 =
            std::min(static_cast<i64>(2) * (a_cur + 1) * n, static_cast<i64>(nverts));
        const int cap = static_cast<int>(cap64);
        const int w_max = bristles.back();

        bool acted = false;
        for (int i = std::max(2, k - a_cur); i <= k && !acted; ++i) {
            // S = the k-i largest path vertices
            const std::span<const int> s_part(path.data() + (a_cur - (k - i)),
                                              static_cast<std::size_t>(k - i));
            std::vector<int> idx(static_cast<std::size_t>(i));
            for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j;
            std::vector<int> pverts(static_cast<std::size_t>(i));
            // lex enumeration of i-subsets of the bristle set
            std::function<bool(int, int)> scan = [&](int pos, int from) -> bool {
                if (pos == i) {
                    return chi_set(s_part, pverts, -1) == Color::Red;
                }
                for (int t = from; t <= n - (i - pos); ++t) {
                    pverts[static_cast<std::size_t>(pos)] = bristles[static_cast<std::size_t>(t)];
                    if (scan(pos + 1, t + 1)) return true;
                }
                return false;
            };
            if (!scan(0, 0)) continue;

            // red S u P found: try to regrow through P1 = P \ max, P2 = P \ 2nd max
            tr("red set at i=" + std::to_string(i) + ": S=" +
               json(std::vector<int>(s_part.begin(), s_part.end())).dump() +
               " P=" + json(pverts).dump());
            std::array<std::vector<int>, 2> subs;
            subs[0].assign(pverts.begin(), pverts.end() - 1);
            subs[1].assign(pverts.begin(), pverts.end());
            subs[1].erase(subs[1].end() - 2);
            bool grown = false;
            for (const auto& px : subs) {
                std::vector<int> ys;
                for (int w = w_max + 1; w < cap && static_cast<int>(ys.size()) < n; ++w)
                    if (chi_set(s_part, px, w) == Color::Blue) ys.push_back(w);
                if (static_cast<int>(ys.size()) >= n) {
                    path.insert(path.end(), px.begin(), px.end());
                    bristles = std::move(ys);
                    tr("broom grows by " + std::to_string(px.size()) + " vertices, path length " +
                       std::to_string(path.size()));
                    grown = true;
                    break;
                }
            }
            if (grown) {
                acted = true;
                break;
            }
            // both extension searches failed: pin a vertex red with both
            for (int w = w_max + 1; w < cap; ++w) {
                if (chi_set(s_part, subs[0], w) == Color::Red &&
                    chi_set(s_part, subs[1], w) == Color::Red) {
                    std::vector<int> verts(s_part.begin(), s_part.end());
                    verts.insert(verts.end(), pverts.begin(), pverts.end());
                    verts.push_back(w);
                    return with_trace(
                        ExtractOutcome::red(
                            make_violation(c, {ViolationKind::Type::H3, 0}, std::move(verts))),
                        std::move(trace));
                }
            }
            json ctx = {{"check", "h3-growth"},
                        {"s", json(std::vector<int>(s_part.begin(), s_part.end()))},
                        {"p", json(pverts)},
                        {"window", json::array({w_max + 1, cap})}};
            return with_trace(ExtractOutcome::failure("growth-exhausted", ctx.dump()),
                              std::move(trace));
        }
        if (acted) continue;
        // no red S_{k-i} u P for any i: the bristle set is a blue clique
        return with_trace(
            ExtractOutcome::blue(Embedding{TightPath{k, n}, Color::Blue, bristles}),
            std::move(trace));
    }
}

// ---- F(3) vs tight path -------------------------------------------------

ExtractOutcome extract_f3_or_path(const OrderedColoring& c, int n, bool want_trace) {
    const int k = c.uniformity();
    if (k < 3) throw std::invalid_argument("extract_f3_or_path: need uniformity >= 3");
    if (n < k) throw std::invalid_argument("extract_f3_or_path: need n >= k");
    const int nverts = c.vertex_count();
    std::vector<std::string> trace;
    Tracer tr{want_trace ? &trace : nullptr};

    std::vector<int> edge;
    const auto chi_set = [&](std::span<const int> s_part, std::initializer_list<int> rest) {
        edge.clear();
        edge.insert(edge.end(), s_part.begin(), s_part.end());
        edge.insert(edge.end(), rest.begin(), rest.end());
        return c.color(edge);
    };

    // base: a (k-1)-set with >= 6 blue extensions inside the first 16k vertices
    std::vector<int> path, bristles;
    {
        const int bound = static_cast<int>(
            std::min(static_cast<i64>(16) * k, static_cast<i64>(nverts)));
        std::vector<int> vset(static_cast<std::size_t>(k - 1));
        std::function<bool(int, int)> scan = [&](int pos, int from) -> bool {
            if (pos == k - 1) {
                std::vector<int> ys;
                for (int w = vset.back() + 1; w < bound && static_cast<int>(ys.size()) < 6; ++w)
                    if (chi_set(vset, {w}) == Color::Blue) ys.push_back(w);
                if (static_cast<int>(ys.size()) >= 6) {
                    path = vset;
                    bristles = std::move(ys);
                    return true;
                }
                return false;
            }
            for (int v = from; v < bound; ++v) {
                vset[static_cast<std::size_t>(pos)] = v;
                if (scan(pos + 1, v + 1)) return true;
            }
            return false;
        };
        if (!scan(0, 0)) {
            tr("base: no (k-1)-set with 6 blue extensions in [0," + std::to_string(bound) +
               "); red density forces a violation");
            if (auto v = detect::find_violation(c, {ViolationKind::Type::F3, 0}))
                return with_trace(ExtractOutcome::red(*v), std::move(trace));
            json ctx = {{"refuted",
                         json::array({{{"check", "broom"},
                                       {"prefix", bound},
                                       {"a", k - 1},
                                       {"m", 6},
                                       {"color", "blue"}},
                                      {{"check", "violation-f3"}}})}};
            return with_trace(ExtractOutcome::failure("base-no-broom", ctx.dump()),
                              std::move(trace));
        }
        tr("base broom: path " + json(path).dump() + " with 6 bristles");
    }

    while (static_cast<int>(path.size()) < n - 1) {
        const int a_cur = static_cast<int>(path.size());
        const i64 cap64 =
            std::min(static_cast<i64>(16) * (a_cur + 2), static_cast<i64>(nverts));
        const int cap = static_cast<int>(cap64);
        const std::span<const int> s2(path.data() + (a_cur - (k - 2)),
                                      static_cast<std::size_t>(k - 2));
        const std::span<const int> s3(path.data() + (a_cur - (k - 3)),
                                      static_cast<std::size_t>(k - 3));

        OrderedColoring phi(2, 6);
        {
            i64 rank = 0;
            for (int j = 1; j < 6; ++j)
                for (int i = 0; i < j; ++i, ++rank)
                    if (chi_set(s2, {bristles[static_cast<std::size_t>(i)],
                                     bristles[static_cast<std::size_t>(j)]}) == Color::Red)
                        phi.set_at(rank, Color::Red);
        }
        if (auto rt = detect::find_mono_clique(phi, 3, Color::Red)) {
            std::vector<int> tvs;
            for (int idx : rt->vertices) tvs.push_back(bristles[static_cast<std::size_t>(idx)]);
            auto verts = sorted_union({s2, tvs});
            return with_trace(
                ExtractOutcome::red(
                    make_violation(c, {ViolationKind::Type::F3, 0}, std::move(verts))),
                std::move(trace));
        }
        const auto bt = detect::find_mono_clique(phi, 3, Color::Blue);
        if (!bt) {
            // cannot happen: 6 vertices with no red triangle contain a blue one
            json ctx = {{"check", "phi-triangle"}, {"bristles", vertices_json(bristles)}};
            return with_trace(ExtractOutcome::failure("phi-no-triangle", ctx.dump()),
                              std::move(trace));
        }
        std::array<int, 3> t{bristles[static_cast<std::size_t>(bt->vertices[0])],
                             bristles[static_cast<std::size_t>(bt->vertices[1])],
                             bristles[static_cast<std::size_t>(bt->vertices[2])]};
        tr("blue phi-triangle on bristles (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
           "," + std::to_string(t[2]) + ")");

        bool grew = false;
        const std::array<std::pair<int, int>, 3> pairs{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        std::array<int, 3> blue_counts{0, 0, 0};
        for (std::size_t pi = 0; pi < pairs.size() && !grew; ++pi) {
            const auto [p, q] = pairs[pi];
            std::vector<int> ys;
            int count = 0;
            for (int y = t[2] + 1; y < cap; ++y) {
                if (chi_set(s3, {p, q, y}) == Color::Blue) {
                    ++count;
                    if (static_cast<int>(ys.size()) < 6) ys.push_back(y);
                }
            }
            blue_counts[pi] = count;
            if (count >= 6) {
                std::vector<int> new_path(path.begin() + 1, path.end());
                new_path.push_back(p);
                new_path.push_back(q);
                path = std::move(new_path);
                bristles = std::move(ys);
                tr("broom grows through (" + std::to_string(p) + "," + std::to_string(q) +
                   "), path length " + std::to_string(path.size()));
                grew = true;
            }
        }
        if (grew) continue;

        const int fresh_lo = static_cast<int>(
            std::min(static_cast<i64>(16) * (a_cur + 1), cap64));
        bool found = false;
        for (int y = fresh_lo; y < cap && !found; ++y) {
            if (chi_set(s3, {t[0], t[1], y}) == Color::Red &&
                chi_set(s3, {t[0], t[2], y}) == Color::Red &&
                chi_set(s3, {t[1], t[2], y}) == Color::Red) {
                std::vector<int> tvs(t.begin(), t.end());
                tvs.push_back(y);
                auto verts = sorted_union({s3, tvs});
                return with_trace(
                    ExtractOutcome::red(
                        make_violation(c, {ViolationKind::Type::F3, 0}, std::move(verts))),
                    std::move(trace));
            }
        }
        json ctx = {{"check", "pigeonhole"},
                    {"triangle", json::array({t[0], t[1], t[2]})},
                    {"pair_blue_counts", json::array({blue_counts[0], blue_counts[1], blue_counts[2]})},
                    {"fresh", json::array({fresh_lo, cap})}};
        return with_trace(ExtractOutcome::failure("pigeonhole-exhausted", ctx.dump()),
                          std::move(trace));
    }

    std::vector<int> verts(path.begin(), path.end());
    verts.resize(static_cast<std::size_t>(n - 1));
    verts.push_back(bristles.front());
    return with_trace(ExtractOutcome::blue(Embedding{TightPath{k, n}, Color::Blue, std::move(verts)}),
                      std::move(trace));
}

// ---- 3-red violation vs broom (k = 3) -----------------------------------

ExtractOutcome extract_3red_or_broom(const OrderedColoring& c, int n, bool want_trace) {
    if (c.uniformity() != 3)
        throw std::invalid_argument("extract_3red_or_broom: coloring must have uniformity 3");
    if (n < 3) throw std::invalid_argument("extract_3red_or_broom: need n >= 3");
    const int nverts = c.vertex_count();
    std::vector<std::string> trace;
    Tracer tr{want_trace ? &trace : nullptr};

    if (nverts < 3 * n - 3) {
        json ctx = {{"check", "size"}, {"needed", 3 * n - 3}, {"have", nverts}};
        return with_trace(ExtractOutcome::failure("size", ctx.dump()), std::move(trace));
    }

    const auto chi = [&](int x, int y, int z) {
        std::vector<int> t{x, y, z};
        std::sort(t.begin(), t.end());
        return c.color(t);
    };
    const auto violation = [&](std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        return with_trace(
            ExtractOutcome::red(make_violation(c, {ViolationKind::Type::TRed, 3}, std::move(verts))),
            std::move(trace));
    };

    // base on the first six vertices
    std::vector<int> path, bristles;
    {
        std::vector<int> blue_x, red_x;
        for (int x = 2; x < 6; ++x)
            (chi(0, 1, x) == Color::Blue ? blue_x : red_x).push_back(x);
        if (blue_x.size() >= 2) {
            path = {0, 1};
            bristles = {blue_x[0], blue_x[1]};
        } else {
            // at least three red extensions; check the pairs among the first three
            const int i = red_x[0], j = red_x[1], kk = red_x[2];
            for (const auto& [x, y] : {std::pair{i, j}, std::pair{i, kk}, std::pair{j, kk}}) {
                if (chi(0, x, y) == Color::Red || chi(1, x, y) == Color::Red)
                    return violation({0, 1, x, y});
            }
            // all 0xy and 1xy blue: 0ij and 0ik give the broom
            path = {0, i};
            bristles = {j, kk};
        }
        tr("base broom: path " + json(path).dump() + " bristles " + json(bristles).dump());
    }

    for (int t = 4; t <= n; ++t) {
        // extend B_{t-2,2} inside [3t-6] by the tail {3t-6, 3t-5, 3t-4}
        const int s0 = 3 * t - 6;
        const std::array<int, 3> tail{s0, s0 + 1, s0 + 2};
        const int d = path.back();
        const int r1 = bristles[0], r2 = bristles[1];

        std::vector<int> blue1, blue2;
        for (int x : tail) {
            if (chi(d, r1, x) == Color::Blue) blue1.push_back(x);
            if (chi(d, r2, x) == Color::Blue) blue2.push_back(x);
        }
        if (blue1.size() >= 2) {
            path.push_back(r1);
            bristles = {blue1[0], blue1[1]};
            tr("t=" + std::to_string(t) + ": two blue tail edges through first bristle");
            continue;
        }
        if (blue2.size() >= 2) {
            path.push_back(r2);
            bristles = {blue2[0], blue2[1]};
            tr("t=" + std::to_string(t) + ": two blue tail edges through second bristle");
            continue;
        }
        int w = -1;
        for (int x : tail)
            if (chi(d, r1, x) == Color::Red && chi(d, r2, x) == Color::Red) {
                w = x;
                break;
            }
        // w exists: each family marked at most one tail vertex blue
        if (chi(d, r1, r2) == Color::Red) return violation({d, r1, r2, w});
        if (chi(r1, r2, w) == Color::Red) return violation({d, r1, r2, w});
        std::array<int, 2> ab{};
        {
            int pos = 0;
            for (int x : tail)
                if (x != w) ab[static_cast<std::size_t>(pos++)] = x;
        }
        int z = -1;
        for (int x : ab)
            if (chi(r1, r2, x) == Color::Blue) {
                z = x;
                break;
            }
        if (z >= 0) {
            std::vector<int> new_path(path.begin() + 1, path.end());
            new_path.push_back(r1);
            new_path.push_back(r2);
            path = std::move(new_path);
            bristles = {std::min(w, z), std::max(w, z)};
            tr("t=" + std::to_string(t) + ": broom shifts onto both bristles");
            continue;
        }
        // chi(r1,r2,a) and chi(r1,r2,b) both red
        int x_blue = -1;
        for (int x : ab)
            if (chi(d, r1, x) == Color::Blue) {
                x_blue = x;
                break;
            }
        if (x_blue >= 0) {
            path.push_back(r1);
            bristles = {r2, x_blue};
            tr("t=" + std::to_string(t) + ": broom keeps first bristle");
            continue;
        }
        // chi(d,r1,a), chi(d,r1,b) both red
        for (int x : ab)
            if (chi(d, r2, x) == Color::Red) return violation({d, r1, r2, x});
        path.push_back(r2);
        bristles = {ab[0], ab[1]};
        tr("t=" + std::to_string(t) + ": broom keeps second bristle");
    }

    std::vector<int> verts = path;
    verts.insert(verts.end(), bristles.begin(), bristles.end());
    return with_trace(
        ExtractOutcome::blue(Embedding{Broom{3, n - 1, 2}, Color::Blue, std::move(verts)}),
        std::move(trace));
}

// ---- Erdos-Rado step-down ------------------------------------------------

std::variant<StepdownResult, Failure> erdos_rado_stepdown(const OrderedColoring& c,
                                                          int target_len) {
    const int k = c.uniformity();
    if (k < 3) throw std::invalid_argument("erdos_rado_stepdown: need uniformity >= 3");
    if (target_len < k) throw std::invalid_argument("erdos_rado_stepdown: need target_len >= k");
    const int n = c.vertex_count();

    std::vector<int> chosen;
    std::vector<int> pool;
    for (int v = 0; v < n; ++v) pool.push_back(v);

    std::vector<int> edge;
    const auto color_of_set = [&](std::span<const int> base, int extra) {
        edge.assign(base.begin(), base.end());
        edge.push_back(extra);
        return c.color(edge);
    };

    while (static_cast<int>(chosen.size()) < target_len) {
        if (pool.empty()) {
            nlohmann::json ctx = {{"check", "pool"},
                                  {"chosen", json(chosen)},
                                  {"target_len", target_len}};
            return Failure{"pool-exhausted", ctx.dump()};
        }
        const int x = pool.front();
        chosen.push_back(x);
        pool.erase(pool.begin());
        if (static_cast<int>(chosen.size()) < k - 1 || pool.empty()) continue;

        // new (k-1)-subsets of the chosen set are those containing x
        std::vector<std::vector<int>> qs;
        {
            const int prev = static_cast<int>(chosen.size()) - 1;
            std::vector<int> idx(static_cast<std::size_t>(k - 2));
            if (k == 3) {
                for (int i = 0; i < prev; ++i) qs.push_back({chosen[static_cast<std::size_t>(i)], x});
            } else if (prev >= k - 2) {
                for (int i = 0; i < k - 2; ++i) idx[static_cast<std::size_t>(i)] = i;
                // lex order over (k-2)-subsets of the earlier chosen vertices
                std::function<void(int, int)> rec = [&](int pos, int from) {
                    if (pos == k - 2) {
                        std::vector<int> q;
                        for (int i = 0; i < k - 2; ++i)
                            q.push_back(chosen[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
                        q.push_back(x);
                        qs.push_back(std::move(q));
                        return;
                    }
                    for (int i = from; i <= prev - (k - 2 - pos); ++i) {
                        idx[static_cast<std::size_t>(pos)] = i;
                        rec(pos + 1, i + 1);
                    }
                };
                rec(0, 0);
            }
        }
        if (qs.empty()) continue;

        std::map<std::vector<std::uint8_t>, std::vector<int>> classes;
        std::vector<std::uint8_t> sig(qs.size());
        for (int v : pool) {
            for (std::size_t qi = 0; qi < qs.size(); ++qi)
                sig[qi] = color_of_set(qs[qi], v) == Color::Red ? 0 : 1;
            classes[sig].push_back(v);
        }
        const std::vector<int>* best = nullptr;
        for (const auto& [key, members] : classes) {
            if (!best || members.size() > best->size()) best = &members;
        }
        pool = *best;
    }

    // induced (k-1)-uniform coloring on the sequence positions: the color a
    // (k-1)-set forces on every later extension
    const int t = target_len;
    OrderedColoring induced(k - 1, t);
    std::vector<int> pos(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) pos[static_cast<std::size_t>(i)] = i;
    i64 rank = 0;
    do {
        std::vector<int> q;
        for (int p : pos) q.push_back(chosen[static_cast<std::size_t>(p)]);
        Color col = Color::Blue;
        if (pos.back() + 1 < t)
            col = color_of_set(q, chosen[static_cast<std::size_t>(pos.back()) + 1]);
        else if (!pool.empty())
            col = color_of_set(q, pool.front());
        induced.set_at(rank, col);
        ++rank;
    } while (next_subset_colex(pos, t));

    return StepdownResult{std::move(chosen), std::move(induced)};
}

}  // namespace oramsey::extract
