#include "oramsey/detect.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "oramsey/errors.hpp"

namespace oramsey::detect {

namespace {

std::vector<int> iota_vertices(int s) {
    std::vector<int> v(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

// Flat row-per-vertex bitsets for k = 2 adjacency.
struct BitRows {
    int n;
    std::size_t stride;
    std::vector<std::uint64_t> bits;

    explicit BitRows(int n_)
        : n(n_), stride(static_cast<std::size_t>((n_ + 63) / 64)),
          bits(stride * static_cast<std::size_t>(n_), 0) {}

    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * stride + static_cast<std::size_t>(v >> 6)] |=
            std::uint64_t{1} << (v & 63);
    }
    const std::uint64_t* row(int u) const {
        return bits.data() + static_cast<std::size_t>(u) * stride;
    }
};

std::pair<BitRows, BitRows> adjacency_rows(const OrderedColoring& c) {
    const int n = c.vertex_count();
    BitRows red(n), blue(n);
    i64 rank = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++rank) {
            if (c.color_at(rank) == Color::Red) {
                red.set(u, v);
                red.set(v, u);
            } else {
                blue.set(u, v);
                blue.set(v, u);
            }
        }
    }
    return {std::move(red), std::move(blue)};
}

void require_state_budget(i64 cells, const Options& opts) {
    if (cells > opts.state_limit)
        throw resource_error("detect: state table of " + std::to_string(cells) +
                             " cells exceeds limit " + std::to_string(opts.state_limit));
}

i64 tuple_cells(int n, int m, const Options& opts) {
    i64 cells = 1;
    for (int i = 0; i < m; ++i) {
        if (n == 0) return 0;
        if (cells > opts.state_limit / n + 1)
            throw resource_error("detect: state table exceeds limit");
        cells *= n;
    }
    require_state_budget(cells, opts);
    return cells;
}

// Mixed-radix encoding of an increasing m-tuple over {0..n-1}:
// enc = sum t_i * n^i.
struct TupleCodec {
    int n;
    int m;
    std::vector<i64> pow;

    TupleCodec(int n_, int m_) : n(n_), m(m_), pow(static_cast<std::size_t>(m_) + 1) {
        pow[0] = 1;
        for (int i = 1; i <= m; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i) - 1] * n;
    }
    i64 append(i64 enc, int head, int w) const {
        return (enc - head) / n + static_cast<i64>(w) * pow[static_cast<std::size_t>(m) - 1];
    }
};

// Enumerates increasing m-tuples (t_0 < ... < t_{m-1}) of {0..n-1} whose
// first element is t0, in lex order of the remaining entries.
// f(tuple, enc, colex_partial) where colex_partial = sum C(t_i, i+1).
template <typename F>
void enumerate_from(int n, int m, int t0, const TupleCodec& codec, const BinomialTable& bt,
                    std::vector<int>& tuple, F&& f) {
    tuple[0] = t0;
    if (m == 1) {
        f(tuple, static_cast<i64>(t0), bt.at(t0, 1));
        return;
    }
    // iterative odometer over positions 1..m-1
    for (int i = 1; i < m; ++i) tuple[static_cast<std::size_t>(i)] = t0 + i;
    if (tuple[static_cast<std::size_t>(m) - 1] >= n) return;
    while (true) {
        i64 enc = 0, partial = 0;
        for (int i = 0; i < m; ++i) {
            enc += static_cast<i64>(tuple[static_cast<std::size_t>(i)]) * codec.pow[static_cast<std::size_t>(i)];
            partial += bt.at(tuple[static_cast<std::size_t>(i)], i + 1);
        }
        f(tuple, enc, partial);
        int i = m - 1;
        while (i >= 1) {
            const int limit = (i + 1 < m) ? tuple[static_cast<std::size_t>(i) + 1] - 1 : n - 1;
            if (tuple[static_cast<std::size_t>(i)] < limit) {
                ++tuple[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < m; ++j)
                    tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j) - 1] + 1;
                break;
            }
            --i;
        }
        if (i == 0) return;
    }
}

Embedding make_embedding(PatternSpec p, Color color, std::vector<int> vertices) {
    return Embedding{std::move(p), color, std::move(vertices)};
}

// ---- tight path ------------------------------------------------------

// ext[T] = maximum number of vertices appendable after state tuple T
// (the path's last k-1 vertices), appended one at a time with each new
// k-window colored `color`.
struct TightPathTables {
    TupleCodec codec;
    std::vector<std::int32_t> ext;
};

TightPathTables tight_path_ext(const OrderedColoring& c, Color color, const BinomialTable& bt,
                               const Options& opts) {
    const int n = c.vertex_count();
    const int k = c.uniformity();
    const int m = k - 1;
    const i64 cells = tuple_cells(n, m, opts);
    TightPathTables t{TupleCodec(n, m), std::vector<std::int32_t>(static_cast<std::size_t>(cells), 0)};
    std::vector<int> tuple(static_cast<std::size_t>(m));
    for (int t0 = n - 1; t0 >= 0; --t0) {
        enumerate_from(n, m, t0, t.codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
            std::int32_t best = 0;
            for (int w = tp[static_cast<std::size_t>(m) - 1] + 1; w < n; ++w) {
                if (c.color_at(partial + bt.at(w, k)) != color) continue;
                const std::int32_t cand =
                    1 + t.ext[static_cast<std::size_t>(t.codec.append(enc, t0, w))];
                if (cand > best) best = cand;
            }
            t.ext[static_cast<std::size_t>(enc)] = best;
        });
    }
    return t;
}

std::optional<std::vector<int>> reconstruct_tight_path(const OrderedColoring& c, Color color,
                                                       const BinomialTable& bt,
                                                       const TightPathTables& t, int appends) {
    const int n = c.vertex_count();
    const int k = c.uniformity();
    const int m = k - 1;
    std::vector<int> tuple(static_cast<std::size_t>(m));
    std::optional<std::vector<int>> result;
    // lex-smallest start tuple that supports the required number of appends
    for (int t0 = 0; t0 < n && !result; ++t0) {
        enumerate_from(n, m, t0, t.codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
            if (result) return;
            if (t.ext[static_cast<std::size_t>(enc)] < appends) return;
            std::vector<int> path(tp.begin(), tp.end());
            std::vector<int> state(tp.begin(), tp.end());
            i64 senc = enc, spartial = partial;
            for (int left = appends; left > 0; --left) {
                for (int w = state[static_cast<std::size_t>(m) - 1] + 1; w < n; ++w) {
                    if (c.color_at(spartial + bt.at(w, k)) != color) continue;
                    const i64 nenc = t.codec.append(senc, state[0], w);
                    if (t.ext[static_cast<std::size_t>(nenc)] < left - 1) continue;
                    path.push_back(w);
                    senc = nenc;
                    state.erase(state.begin());
                    state.push_back(w);
                    spartial = 0;
                    for (int i = 0; i < m; ++i)
                        spartial += bt.at(state[static_cast<std::size_t>(i)], i + 1);
                    break;
                }
            }
            result = std::move(path);
        });
    }
    return result;
}

// ---- path powers -----------------------------------------------------

std::optional<std::vector<int>> path_power_l1(const OrderedColoring& c, int s, Color color) {
    const int n = c.vertex_count();
    std::vector<std::int32_t> ext(static_cast<std::size_t>(n), 0);
    for (int v = n - 1; v >= 0; --v) {
        std::int32_t best = 0;
        for (int w = v + 1; w < n; ++w) {
            if (c.color_at(static_cast<i64>(v) + binomial(w, 2)) != color) continue;
            if (ext[static_cast<std::size_t>(w)] + 1 > best) best = ext[static_cast<std::size_t>(w)] + 1;
        }
        ext[static_cast<std::size_t>(v)] = best;
    }
    for (int v = 0; v < n; ++v) {
        if (ext[static_cast<std::size_t>(v)] < s - 1) continue;
        std::vector<int> path{v};
        int cur = v;
        for (int left = s - 1; left > 0; --left) {
            for (int w = cur + 1; w < n; ++w) {
                if (c.color_at(static_cast<i64>(cur) + binomial(w, 2)) != color) continue;
                if (ext[static_cast<std::size_t>(w)] < left - 1) continue;
                path.push_back(w);
                cur = w;
                break;
            }
        }
        return path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> path_power_l2(const OrderedColoring& c, int s, Color color,
                                              const BinomialTable& bt, const Options& opts) {
    const int n = c.vertex_count();
    const i64 cells = tuple_cells(n, 2, opts);
    std::vector<std::int32_t> ext(static_cast<std::size_t>(cells), 0);
    const auto enc = [&](int u, int v) { return static_cast<i64>(u) + static_cast<i64>(v) * n; };
    const auto edge = [&](int u, int v) { return c.color_at(static_cast<i64>(u) + bt.at(v, 2)); };
    for (int u = n - 1; u >= 0; --u) {
        for (int v = u + 1; v < n; ++v) {
            std::int32_t best = 0;
            for (int w = v + 1; w < n; ++w) {
                if (edge(u, w) != color || edge(v, w) != color) continue;
                const std::int32_t cand = 1 + ext[static_cast<std::size_t>(enc(v, w))];
                if (cand > best) best = cand;
            }
            ext[static_cast<std::size_t>(enc(u, v))] = best;
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (edge(u, v) != color) continue;
            if (ext[static_cast<std::size_t>(enc(u, v))] < s - 2) continue;
            std::vector<int> path{u, v};
            int pu = u, pv = v;
            for (int left = s - 2; left > 0; --left) {
                for (int w = pv + 1; w < n; ++w) {
                    if (edge(pu, w) != color || edge(pv, w) != color) continue;
                    if (ext[static_cast<std::size_t>(enc(pv, w))] < left - 1) continue;
                    path.push_back(w);
                    pu = pv;
                    pv = w;
                    break;
                }
            }
            return path;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> path_power_general(const OrderedColoring& c, int l, int s,
                                                   Color color, const BinomialTable& bt,
                                                   const Options& opts) {
    const int n = c.vertex_count();
    const i64 cells = tuple_cells(n, l, opts);
    TupleCodec codec(n, l);
    std::vector<std::int32_t> ext(static_cast<std::size_t>(cells), 0);
    const auto edge = [&](int u, int v) { return c.color_at(static_cast<i64>(u) + bt.at(v, 2)); };
    const auto mono_tuple = [&](const std::vector<int>& tp) {
        for (std::size_t i = 0; i < tp.size(); ++i)
            for (std::size_t j = i + 1; j < tp.size(); ++j)
                if (edge(tp[i], tp[j]) != color) return false;
        return true;
    };
    std::vector<int> tuple(static_cast<std::size_t>(l));
    for (int t0 = n - 1; t0 >= 0; --t0) {
        enumerate_from(n, l, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64) {
            std::int32_t best = 0;
            for (int w = tp[static_cast<std::size_t>(l) - 1] + 1; w < n; ++w) {
                bool ok = true;
                for (int i = 0; i < l && ok; ++i) ok = edge(tp[static_cast<std::size_t>(i)], w) == color;
                if (!ok) continue;
                const std::int32_t cand = 1 + ext[static_cast<std::size_t>(codec.append(enc, t0, w))];
                if (cand > best) best = cand;
            }
            ext[static_cast<std::size_t>(enc)] = best;
        });
    }
    std::optional<std::vector<int>> result;
    for (int t0 = 0; t0 < n && !result; ++t0) {
        enumerate_from(n, l, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64) {
            if (result) return;
            if (ext[static_cast<std::size_t>(enc)] < s - l) return;
            if (!mono_tuple(tp)) return;
            std::vector<int> path(tp.begin(), tp.end());
            std::vector<int> state(tp.begin(), tp.end());
            i64 senc = enc;
            for (int left = s - l; left > 0; --left) {
                for (int w = state[static_cast<std::size_t>(l) - 1] + 1; w < n; ++w) {
                    bool ok = true;
                    for (int i = 0; i < l && ok; ++i) ok = edge(state[static_cast<std::size_t>(i)], w) == color;
                    if (!ok) continue;
                    const i64 nenc = codec.append(senc, state[0], w);
                    if (ext[static_cast<std::size_t>(nenc)] < left - 1) continue;
                    path.push_back(w);
                    senc = nenc;
                    state.erase(state.begin());
                    state.push_back(w);
                    break;
                }
            }
            result = std::move(path);
        });
    }
    return result;
}

// ---- cliques ---------------------------------------------------------

std::optional<std::vector<int>> clique_graph(const OrderedColoring& c, int s, Color color) {
    const int n = c.vertex_count();
    BitRows adj(n);
    i64 rank = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++rank)
            if (c.color_at(rank) == color) {
                adj.set(u, v);
                adj.set(v, u);
            }
    const std::size_t stride = adj.stride;
    std::vector<std::uint64_t> cand(stride);
    std::vector<std::vector<std::uint64_t>> stack;
    std::vector<int> chosen;

    const auto count_from = [&](const std::uint64_t* set, int v) {
        int total = 0;
        for (std::size_t w = static_cast<std::size_t>(v >> 6); w < stride; ++w) {
            std::uint64_t word = set[w];
            if (w == static_cast<std::size_t>(v >> 6)) word &= ~std::uint64_t{0} << (v & 63);
            total += std::popcount(word);
        }
        return total;
    };

    std::function<bool(const std::uint64_t*, int)> dfs = [&](const std::uint64_t* set, int from) -> bool {
        if (static_cast<int>(chosen.size()) == s) return true;
        const int need = s - static_cast<int>(chosen.size());
        for (int v = from; v < n; ++v) {
            if (!((set[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1)) continue;
            if (count_from(set, v) < need) return false;
            std::vector<std::uint64_t> next(stride);
            for (std::size_t w = 0; w < stride; ++w) next[w] = set[w] & adj.row(v)[w];
            chosen.push_back(v);
            if (dfs(next.data(), v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<std::uint64_t> all(stride, ~std::uint64_t{0});
    if (n & 63) all.back() = (std::uint64_t{1} << (n & 63)) - 1;
    if (dfs(all.data(), 0)) return chosen;
    return std::nullopt;
}

std::optional<std::vector<int>> clique_hypergraph(const OrderedColoring& c, int s, Color color) {
    const int n = c.vertex_count();
    const int k = c.uniformity();
    std::vector<int> chosen;
    std::vector<int> edge;

    const auto compatible = [&](int w) {
        // every k-subset of chosen+{w} containing w must have the color
        if (static_cast<int>(chosen.size()) < k - 1) return true;
        std::vector<int> idx(static_cast<std::size_t>(k) - 1);
        for (int i = 0; i + 1 < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            edge.clear();
            for (int i : idx) edge.push_back(chosen[static_cast<std::size_t>(i)]);
            edge.push_back(w);
            if (c.color(edge) != color) return false;
        } while (next_subset_colex(idx, static_cast<int>(chosen.size())));
        return true;
    };

    std::function<bool(int)> dfs = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == s) return true;
        const int need = s - static_cast<int>(chosen.size());
        for (int v = from; v + need <= n; ++v) {
            if (!compatible(v)) continue;
            chosen.push_back(v);
            if (dfs(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (dfs(0)) return chosen;
    return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_mono_path_power(const OrderedColoring& c, int l, int s, Color color,
                                              const Options& opts) {
    if (c.uniformity() != 2)
        throw std::invalid_argument("find_mono_path_power: coloring must have uniformity 2");
    if (l < 1 || s < 1) throw std::invalid_argument("find_mono_path_power: need l >= 1, s >= 1");
    const PatternSpec pattern = PathPower{l, s};
    const int n = c.vertex_count();
    if (n < s) return std::nullopt;
    if (s == 1) return make_embedding(pattern, color, {0});
    if (s <= l + 1) {
        auto cl = find_mono_clique(c, s, color, opts);
        if (!cl) return std::nullopt;
        return make_embedding(pattern, color, std::move(cl->vertices));
    }
    BinomialTable bt(n, 2);
    std::optional<std::vector<int>> path;
    if (l == 1)
        path = path_power_l1(c, s, color);
    else if (l == 2)
        path = path_power_l2(c, s, color, bt, opts);
    else
        path = path_power_general(c, l, s, color, bt, opts);
    if (!path) return std::nullopt;
    return make_embedding(pattern, color, std::move(*path));
}

std::optional<Embedding> find_mono_tight_path(const OrderedColoring& c, int s, Color color,
                                              const Options& opts) {
    if (s < 1) throw std::invalid_argument("find_mono_tight_path: need s >= 1");
    const int k = c.uniformity();
    const int n = c.vertex_count();
    const PatternSpec pattern = TightPath{k, s};
    if (n < s) return std::nullopt;
    if (s < k) return make_embedding(pattern, color, iota_vertices(s));
    BinomialTable bt(n, k);
    const auto tables = tight_path_ext(c, color, bt, opts);
    auto path = reconstruct_tight_path(c, color, bt, tables, s - (k - 1));
    if (!path) return std::nullopt;
    return make_embedding(pattern, color, std::move(*path));
}

std::optional<Embedding> find_mono_broom(const OrderedColoring& c, int a, int m, Color color,
                                         const Options& opts) {
    const int k = c.uniformity();
    const int n = c.vertex_count();
    if (a < k - 1) throw std::invalid_argument("find_mono_broom: need a >= k-1");
    if (m < 0) throw std::invalid_argument("find_mono_broom: need m >= 0");
    const PatternSpec pattern = Broom{k, a, m};
    if (n < a + m) return std::nullopt;
    if (m == 0) {
        auto tp = find_mono_tight_path(c, a, color, opts);
        if (!tp) return std::nullopt;
        return make_embedding(pattern, color, std::move(tp->vertices));
    }

    const int msz = k - 1;
    BinomialTable bt(n, k);
    TupleCodec codec(n, msz);
    const i64 cells = tuple_cells(n, msz, opts);
    std::vector<int> tuple(static_cast<std::size_t>(msz));

    std::vector<std::int32_t> bristle_cnt(static_cast<std::size_t>(cells), 0);
    for (int t0 = 0; t0 < n; ++t0) {
        enumerate_from(n, msz, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
            std::int32_t cnt = 0;
            for (int w = tp[static_cast<std::size_t>(msz) - 1] + 1; w < n; ++w)
                if (c.color_at(partial + bt.at(w, k)) == color) ++cnt;
            bristle_cnt[static_cast<std::size_t>(enc)] = cnt;
        });
    }

    const auto bristles_of = [&](const std::vector<int>& terminal, i64 partial) {
        std::vector<int> out;
        for (int w = terminal.back() + 1; w < n && static_cast<int>(out.size()) < m; ++w)
            if (c.color_at(partial + bt.at(w, k)) == color) out.push_back(w);
        return out;
    };
    const auto partial_of = [&](const std::vector<int>& tp) {
        i64 partial = 0;
        for (int i = 0; i < msz; ++i) partial += bt.at(tp[static_cast<std::size_t>(i)], i + 1);
        return partial;
    };

    const int appends = a - msz;
    if (appends == 0) {
        // edgeless path of k-1 vertices with m bristles
        std::optional<Embedding> result;
        for (int t0 = 0; t0 < n && !result; ++t0) {
            enumerate_from(n, msz, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
                if (result || bristle_cnt[static_cast<std::size_t>(enc)] < m) return;
                std::vector<int> verts(tp.begin(), tp.end());
                for (int w : bristles_of(verts, partial)) verts.push_back(w);
                result = make_embedding(pattern, color, std::move(verts));
            });
        }
        return result;
    }

    // feasibility layers: layer[r][T] = from state T, exactly r more appends
    // reach a terminal with >= m bristles
    if (cells > opts.state_limit / (appends + 1))
        throw resource_error("detect: broom DP exceeds state limit");
    std::vector<std::vector<std::uint8_t>> layer(
        static_cast<std::size_t>(appends) + 1,
        std::vector<std::uint8_t>(static_cast<std::size_t>(cells), 0));
    for (i64 e = 0; e < cells; ++e)
        layer[0][static_cast<std::size_t>(e)] = bristle_cnt[static_cast<std::size_t>(e)] >= m;
    for (int r = 1; r <= appends; ++r) {
        for (int t0 = 0; t0 < n; ++t0) {
            enumerate_from(n, msz, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
                for (int w = tp[static_cast<std::size_t>(msz) - 1] + 1; w < n; ++w) {
                    if (c.color_at(partial + bt.at(w, k)) != color) continue;
                    if (layer[static_cast<std::size_t>(r) - 1]
                             [static_cast<std::size_t>(codec.append(enc, t0, w))]) {
                        layer[static_cast<std::size_t>(r)][static_cast<std::size_t>(enc)] = 1;
                        return;
                    }
                }
            });
        }
    }

    std::optional<Embedding> result;
    for (int t0 = 0; t0 < n && !result; ++t0) {
        enumerate_from(n, msz, t0, codec, bt, tuple, [&](const std::vector<int>& tp, i64 enc, i64 partial) {
            if (result || !layer[static_cast<std::size_t>(appends)][static_cast<std::size_t>(enc)])
                return;
            std::vector<int> path(tp.begin(), tp.end());
            std::vector<int> state(tp.begin(), tp.end());
            i64 senc = enc, spartial = partial;
            for (int left = appends; left > 0; --left) {
                for (int w = state[static_cast<std::size_t>(msz) - 1] + 1; w < n; ++w) {
                    if (c.color_at(spartial + bt.at(w, k)) != color) continue;
                    const i64 nenc = codec.append(senc, state[0], w);
                    if (!layer[static_cast<std::size_t>(left) - 1][static_cast<std::size_t>(nenc)])
                        continue;
                    path.push_back(w);
                    senc = nenc;
                    state.erase(state.begin());
                    state.push_back(w);
                    spartial = partial_of(state);
                    break;
                }
            }
            for (int w : bristles_of(state, spartial)) path.push_back(w);
            result = make_embedding(pattern, color, std::move(path));
        });
    }
    return result;
}

std::optional<Embedding> find_mono_clique(const OrderedColoring& c, int s, Color color,
                                          const Options& opts) {
    (void)opts;
    if (s < 1) throw std::invalid_argument("find_mono_clique: need s >= 1");
    const int k = c.uniformity();
    const int n = c.vertex_count();
    const PatternSpec pattern = Clique{k, s};
    if (n < s) return std::nullopt;
    if (s < k) return make_embedding(pattern, color, iota_vertices(s));
    auto verts = (k == 2) ? clique_graph(c, s, color) : clique_hypergraph(c, s, color);
    if (!verts) return std::nullopt;
    return make_embedding(pattern, color, std::move(*verts));
}

std::optional<Embedding> find_pattern(const OrderedColoring& c, const PatternSpec& p, Color color,
                                      const Options& opts) {
    if (pattern_uniformity(p) != c.uniformity())
        throw std::invalid_argument("find_pattern: pattern uniformity does not match coloring");
    if (const auto* pp = std::get_if<PathPower>(&p))
        return find_mono_path_power(c, pp->l, pp->s, color, opts);
    if (const auto* tp = std::get_if<TightPath>(&p))
        return find_mono_tight_path(c, tp->s, color, opts);
    if (const auto* br = std::get_if<Broom>(&p))
        return find_mono_broom(c, br->a, br->m, color, opts);
    return find_mono_clique(c, std::get<Clique>(p).s, color, opts);
}

std::pair<i64, i64> count_mono_cliques(const OrderedColoring& c, int q) {
    if (c.uniformity() != 2)
        throw std::invalid_argument("count_mono_cliques: coloring must have uniformity 2");
    if (q != 3 && q != 4) throw std::invalid_argument("count_mono_cliques: q must be 3 or 4");
    const int n = c.vertex_count();
    auto [red, blue] = adjacency_rows(c);
    const std::size_t stride = red.stride;

    std::vector<std::uint64_t> inter(stride);
    const auto above_mask_and = [&](std::vector<std::uint64_t>& set, int v) {
        // keep only vertices > v
        const std::size_t word = static_cast<std::size_t>(v >> 6);
        for (std::size_t w = 0; w < word; ++w) set[w] = 0;
        set[word] &= ~((v & 63) == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ((v & 63) + 1)) - 1));
    };

    i64 counts[2] = {0, 0};
    i64 rank = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++rank) {
            const Color col = c.color_at(rank);
            const BitRows& adj = col == Color::Red ? red : blue;
            for (std::size_t w = 0; w < stride; ++w) inter[w] = adj.row(u)[w] & adj.row(v)[w];
            above_mask_and(inter, v);
            i64& acc = counts[col == Color::Red ? 0 : 1];
            if (q == 3) {
                for (std::size_t w = 0; w < stride; ++w) acc += std::popcount(inter[w]);
            } else {
                // count color edges {w,x} inside the intersection, x > w > v
                for (std::size_t wi = 0; wi < stride; ++wi) {
                    std::uint64_t word = inter[wi];
                    while (word) {
                        const int bit = std::countr_zero(word);
                        word &= word - 1;
                        const int wv = static_cast<int>(wi) * 64 + bit;
                        const auto* wrow = adj.row(wv);
                        for (std::size_t xi = wi; xi < stride; ++xi) {
                            std::uint64_t cand = inter[xi] & wrow[xi];
                            if (xi == wi)
                                cand &= (bit == 63) ? 0 : ~((std::uint64_t{2} << bit) - 1);
                            acc += std::popcount(cand);
                        }
                    }
                }
            }
        }
    }
    return {counts[0], counts[1]};
}

std::optional<Violation> find_violation(const OrderedColoring& c, const ViolationKind& kind,
                                        int threads) {
    const int k = c.uniformity();
    const int n = c.vertex_count();
    if (kind.type == ViolationKind::Type::TRed && (kind.t < 2 || kind.t > k + 1))
        throw std::invalid_argument("find_violation: TRed threshold must be in [2, k+1]");
    if (n < k + 1) return std::nullopt;

    const int threshold = kind.type == ViolationKind::Type::TRed ? kind.t : 3;
    BinomialTable bt(n, k + 1);

    // Scans all k-subsets of [0,top) extended by {top}; returns the inner
    // colex rank of the first violating subset, or -1.
    const auto scan_top = [&](int top, std::vector<int>& verts) -> i64 {
        std::vector<int> inner(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) inner[static_cast<std::size_t>(i)] = i;
        std::vector<i64> prefix(static_cast<std::size_t>(k) + 2);
        std::vector<i64> suffix(static_cast<std::size_t>(k) + 2);
        i64 inner_rank = 0;
        do {
            // drop-th k-subset rank = prefix[drop] + suffix[drop+1]
            prefix[0] = 0;
            for (int i = 0; i < k; ++i)
                prefix[static_cast<std::size_t>(i) + 1] =
                    prefix[static_cast<std::size_t>(i)] + bt.at(inner[static_cast<std::size_t>(i)], i + 1);
            suffix[static_cast<std::size_t>(k) + 1] = 0;
            suffix[static_cast<std::size_t>(k)] = bt.at(top, k);
            for (int i = k - 1; i >= 1; --i)
                suffix[static_cast<std::size_t>(i)] =
                    suffix[static_cast<std::size_t>(i) + 1] + bt.at(inner[static_cast<std::size_t>(i)], i);

            int reds = 0;
            bool smallest_red = false;
            for (int drop = 0; drop <= k; ++drop) {
                const i64 r = prefix[static_cast<std::size_t>(drop)] +
                              suffix[static_cast<std::size_t>(drop) + 1];
                if (c.color_at(r) == Color::Red) {
                    ++reds;
                    if (drop == k) smallest_red = true;  // dropped the top vertex
                }
            }
            const bool hit = reds >= threshold &&
                             (kind.type != ViolationKind::Type::H3 || smallest_red);
            if (hit) {
                verts.assign(inner.begin(), inner.end());
                verts.push_back(top);
                return inner_rank;
            }
            ++inner_rank;
        } while (next_subset_colex(inner, top));
        return -1;
    };

    std::optional<Violation> best;
    const auto build = [&](const std::vector<int>& verts) {
        return Violation{kind, verts, red_subsets_within(c, verts)};
    };

    if (threads <= 1) {
        std::vector<int> verts;
        for (int top = k; top < n; ++top) {
            if (scan_top(top, verts) >= 0) {
                best = build(verts);
                break;
            }
        }
        return best;
    }

    std::atomic<int> next_top{k};
    std::atomic<int> best_top{n};
    std::vector<std::pair<int, std::vector<int>>> hits;
    std::mutex hits_mutex;
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n - k);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            std::vector<int> verts;
            while (true) {
                const int top = next_top.fetch_add(1);
                if (top >= n) return;
                if (top > best_top.load()) continue;
                if (scan_top(top, verts) >= 0) {
                    int cur = best_top.load();
                    while (top < cur && !best_top.compare_exchange_weak(cur, top)) {
                    }
                    std::lock_guard<std::mutex> lock(hits_mutex);
                    hits.emplace_back(top, verts);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    const auto it = std::min_element(hits.begin(), hits.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != hits.end()) best = build(it->second);
    return best;
}

}  // namespace oramsey::detect
